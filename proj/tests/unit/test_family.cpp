#include "swiper/family.hpp"
#include "swiper/resample.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace swiper;

namespace {

WeightDistribution make_dist(const std::vector<Rational>& weights) {
    std::vector<Party> parties;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        parties.push_back(Party{"p" + std::to_string(i + 1), weights[i]});
    }
    return WeightDistribution(std::move(parties));
}

}  // namespace

TEST_CASE("shift constant per problem kind") {
    CHECK(shift_constant(ProblemSpec::weight_restriction(Rational(1, 4), Rational(1, 3))) ==
          Rational(1, 4));
    CHECK(shift_constant(ProblemSpec::weight_qualification(Rational(2, 3), Rational(1, 2))) ==
          Rational(1, 3));
    CHECK(shift_constant(ProblemSpec::weight_separation(Rational(1, 3), Rational(1, 2))) ==
          Rational(5, 12));
}

TEST_CASE("equal weights break threshold ties by party index") {
    const WeightDistribution dist = make_dist({1, 1, 1, 1});
    CHECK(assignment_with_total(dist, Rational(1, 3), 3).values() ==
          std::vector<std::int64_t>{1, 1, 1, 0});
}

TEST_CASE("thresholds of a heavy party come first") {
    // thresholds: party 1 at 1/4 and 7/12, party 2 at 3/4
    const WeightDistribution dist = make_dist({3, 1});
    CHECK(assignment_with_total(dist, Rational(1, 4), 2).values() ==
          std::vector<std::int64_t>{2, 0});
}

TEST_CASE("total zero is the all-zero assignment") {
    const WeightDistribution dist = make_dist({3, 1, Rational(1, 2)});
    const FamilyMember member = family_member(dist, Rational(1, 4), 0);
    CHECK(member.assignment.total() == 0);
    CHECK(member.point.scale == 0);
    CHECK(member.point.kept_border == 0);
}

TEST_CASE("predecessor removes exactly the tie-broken last ticket") {
    const WeightDistribution equal = make_dist({1, 1, 1, 1});
    CHECK(predecessor(equal, Rational(1, 3), assignment_with_total(equal, Rational(1, 3), 3))
              .values() == std::vector<std::int64_t>{1, 1, 0, 0});

    const WeightDistribution skewed = make_dist({3, 1});
    CHECK(predecessor(skewed, Rational(1, 4), assignment_with_total(skewed, Rational(1, 4), 2))
              .values() == std::vector<std::int64_t>{1, 0});

    CHECK_THROWS_AS(predecessor(equal, Rational(1, 3), assignment_with_total(equal, Rational(1, 3), 0)),
                    std::invalid_argument);
}

TEST_CASE("family is totally ordered: one party gains exactly one ticket per step") {
    SplitMix64 rng{2024};
    for (int instance = 0; instance < 30; ++instance) {
        const std::size_t n = 1 + rng.next_below(8);
        std::vector<Rational> weights;
        for (std::size_t i = 0; i < n; ++i) {
            weights.emplace_back(static_cast<std::int64_t>(rng.next_below(50)),
                                 static_cast<std::int64_t>(1 + rng.next_below(9)));
        }
        if (std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w == 0; })) {
            weights[0] = 1;
        }
        const WeightDistribution dist = make_dist(weights);
        const Rational shift(static_cast<std::int64_t>(1 + rng.next_below(11)), 12);

        TicketAssignment previous = assignment_with_total(dist, shift, 0);
        for (std::int64_t total = 1; total <= 25; ++total) {
            const TicketAssignment current = assignment_with_total(dist, shift, total);
            REQUIRE(current.total() == total);
            std::int64_t bumps = 0;
            for (std::size_t i = 0; i < n; ++i) {
                REQUIRE(current[i] >= previous[i]);
                bumps += current[i] - previous[i];
                if (dist.weight(i) == 0) REQUIRE(current[i] == 0);
            }
            REQUIRE(bumps == 1);
            previous = current;
        }
    }
}

TEST_CASE("family members satisfy the floor form at their scale") {
    SplitMix64 rng{99};
    for (int instance = 0; instance < 30; ++instance) {
        const std::size_t n = 1 + rng.next_below(7);
        std::vector<Rational> weights;
        for (std::size_t i = 0; i < n; ++i) {
            weights.emplace_back(static_cast<std::int64_t>(1 + rng.next_below(12)));
        }
        const WeightDistribution dist = make_dist(weights);
        const Rational shift(1, 3);
        const std::int64_t total = static_cast<std::int64_t>(1 + rng.next_below(20));
        const FamilyMember member = family_member(dist, shift, total);

        std::int64_t border_cuts = 0;
        std::int64_t border_parties = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Rational value = member.point.scale * dist.weight(i) + shift;
            const BigInt fl = rational_floor(value);
            const bool border = Rational(fl) == value;
            border_parties += border ? 1 : 0;
            const BigInt held = member.assignment[i];
            if (border) {
                REQUIRE((held == fl || held == fl - 1));
                border_cuts += held == fl - 1 ? 1 : 0;
            } else {
                REQUIRE(held == fl);
            }
        }
        REQUIRE(member.point.kept_border + border_cuts == border_parties);
        REQUIRE(member.point.kept_border >= 1);
    }
}

TEST_CASE("uniform rescaling leaves every family member unchanged") {
    const WeightDistribution dist = make_dist({5, 3, 3, 1, Rational(1, 2)});
    std::vector<Rational> scaled_weights;
    for (const Party& p : dist.parties()) scaled_weights.push_back(p.weight * Rational(7, 3));
    const WeightDistribution scaled = make_dist(scaled_weights);
    for (std::int64_t total = 0; total <= 20; ++total) {
        CHECK(assignment_with_total(dist, Rational(1, 4), total) ==
              assignment_with_total(scaled, Rational(1, 4), total));
    }
}

TEST_CASE("zero-weight parties never hold tickets") {
    const WeightDistribution dist = make_dist({2, 0, 1, 0});
    for (std::int64_t total = 0; total <= 12; ++total) {
        const TicketAssignment t = assignment_with_total(dist, Rational(2, 5), total);
        CHECK(t[1] == 0);
        CHECK(t[3] == 0);
    }
}

TEST_CASE("shift constant outside (0,1) is rejected") {
    const WeightDistribution dist = make_dist({1});
    CHECK_THROWS_AS(assignment_with_total(dist, Rational(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(assignment_with_total(dist, Rational(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(assignment_with_total(dist, Rational(1, 2), -1), std::invalid_argument);
}
