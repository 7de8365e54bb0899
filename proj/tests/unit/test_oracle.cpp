#include "swiper/oracle.hpp"
#include "swiper/resample.hpp"
#include "swiper/solver.hpp"

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

TEST_CASE("brute validation of the equal-weights example") {
    const WeightDistribution dist = make_dist({1, 1, 1, 1});
    const ProblemSpec spec = ProblemSpec::weight_restriction(Rational(1, 3), Rational(1, 2));
    CHECK(brute_validate(spec, dist, TicketAssignment({1, 1, 1, 0})));
    CHECK_FALSE(brute_validate(spec, dist, TicketAssignment({1, 1, 0, 0})));
    CHECK_FALSE(brute_validate(spec, dist, TicketAssignment({0, 0, 0, 0})));
}

TEST_CASE("brute validation agrees with the knapsack path on random instances") {
    SplitMix64 rng{61};
    const std::vector<ProblemSpec> specs = {
        ProblemSpec::weight_restriction(Rational(1, 4), Rational(1, 3)),
        ProblemSpec::weight_qualification(Rational(2, 3), Rational(1, 2)),
        ProblemSpec::weight_separation(Rational(1, 3), Rational(1, 2)),
    };
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng.next_below(9);
        std::vector<Rational> weights;
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t num = static_cast<std::int64_t>(rng.next_below(20));
            weights.emplace_back(num, static_cast<std::int64_t>(1 + rng.next_below(5)));
            any = any || num > 0;
        }
        if (!any) weights[0] = 1;
        const WeightDistribution dist = make_dist(weights);
        std::vector<std::int64_t> tickets;
        for (std::size_t j = 0; j < n; ++j) {
            tickets.push_back(static_cast<std::int64_t>(rng.next_below(4)));
        }
        const TicketAssignment t{std::move(tickets)};
        const ProblemSpec& spec = specs[i % specs.size()];
        CHECK(brute_validate(spec, dist, t) == validate(spec, dist, t));
    }
}

TEST_CASE("budget violations are reported") {
    std::vector<Rational> weights(20, Rational(1));
    const WeightDistribution dist = make_dist(weights);
    const ProblemSpec spec = ProblemSpec::weight_restriction(Rational(1, 4), Rational(1, 3));
    CHECK_THROWS_AS(brute_validate(spec, dist, TicketAssignment(std::vector<std::int64_t>(20, 1))),
                    std::length_error);
    CHECK_THROWS_AS(brute_optimum(spec, dist), std::length_error);
}

TEST_CASE("exhaustive optimum on equal weights needs three tickets") {
    const WeightDistribution dist = make_dist({1, 1, 1, 1});
    const ProblemSpec spec = ProblemSpec::weight_restriction(Rational(1, 3), Rational(1, 2));
    const auto best = brute_optimum(spec, dist);
    REQUIRE(best.has_value());
    CHECK(best->total() == 3);
    CHECK(brute_validate(spec, dist, *best));
}

TEST_CASE("exhaustive optimum on a single party") {
    const WeightDistribution dist = make_dist({5});
    const ProblemSpec spec = ProblemSpec::weight_restriction(Rational(1, 4), Rational(1, 3));
    const auto best = brute_optimum(spec, dist);
    REQUIRE(best.has_value());
    CHECK(best->total() == 1);
}

TEST_CASE("the solver never beats the exhaustive optimum") {
    SplitMix64 rng{71};
    const std::vector<ProblemSpec> specs = {
        ProblemSpec::weight_restriction(Rational(1, 2), Rational(3, 5)),
        ProblemSpec::weight_restriction(Rational(1, 3), Rational(1, 2)),
        ProblemSpec::weight_qualification(Rational(2, 3), Rational(1, 2)),
    };
    for (int i = 0; i < 12; ++i) {
        const std::size_t n = 1 + rng.next_below(5);
        std::vector<Rational> weights;
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t w = static_cast<std::int64_t>(rng.next_below(6));
            weights.emplace_back(w);
            any = any || w > 0;
        }
        if (!any) weights[0] = 3;
        const WeightDistribution dist = make_dist(weights);
        const ProblemSpec& spec = specs[i % specs.size()];
        const SolveReport report = solve(spec, dist);
        const auto best = brute_optimum(spec, dist);
        REQUIRE(best.has_value());
        CHECK(report.total >= best->total());
        CHECK(report.total <= report.bound);
    }
}

TEST_CASE("optimum search reports an unreachable cap") {
    const WeightDistribution dist = make_dist({1, 1, 1, 1});
    const ProblemSpec spec = ProblemSpec::weight_restriction(Rational(1, 3), Rational(1, 2));
    OracleBudget budget;
    budget.max_total_tickets = 2;  // T=3 is the true minimum
    CHECK_FALSE(brute_optimum(spec, dist, budget).has_value());
}
