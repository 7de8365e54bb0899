#include "swiper/coding.hpp"
#include "swiper/committee.hpp"
#include "swiper/secret_sharing.hpp"
#include "swiper/solver.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace swiper;

TEST_CASE("virtual committee slots are prefix sums") {
    const VirtualCommittee c = virtual_committee(TicketAssignment({2, 0, 1}));
    REQUIRE(c.slots.size() == 3);
    CHECK(c.slots[0] == SlotRange{0, 2});
    CHECK(c.slots[1] == SlotRange{2, 2});
    CHECK(c.slots[1].size() == 0);
    CHECK(c.slots[2] == SlotRange{2, 3});

    CHECK(virtual_committee(TicketAssignment({1})).slots[0] == SlotRange{0, 1});

    const VirtualCommittee d = virtual_committee(TicketAssignment({1, 1, 1, 0}));
    CHECK(d.slots[0].contains(0));
    CHECK(d.slots[1].contains(1));
    CHECK(d.slots[2].contains(2));
    CHECK(d.slots[3].size() == 0);

    CHECK_THROWS_AS(virtual_committee(TicketAssignment({0, 0})), std::invalid_argument);
}

TEST_CASE("sharing parameters enforce their ranges") {
    CHECK(BluntSharingParams::make(Rational(1, 2), 4, 7919).threshold == 2);
    CHECK(BluntSharingParams::make(Rational(1, 3), 10, 7919).threshold == 4);
    CHECK_THROWS_AS(BluntSharingParams::make(Rational(2, 3), 4, 7919), std::invalid_argument);
    CHECK_THROWS_AS(BluntSharingParams::make(Rational(1, 2), 4, 7917), std::invalid_argument);  // 3*7*13*29
    CHECK_THROWS_AS(BluntSharingParams::make(Rational(1, 2), 100, 97), std::invalid_argument);
    CHECK(is_prime_u64(7919));
    CHECK_FALSE(is_prime_u64(7917));
}

TEST_CASE("any two of four shares reconstruct the secret at threshold two") {
    const auto params = BluntSharingParams::make(Rational(1, 2), 4, 7919);
    const VirtualCommittee committee = virtual_committee(TicketAssignment({2, 1, 1}));
    const auto shares = deal_blunt_secret(42, params, committee, 123);
    REQUIRE(shares.size() == 4);
    for (std::size_t i = 0; i < shares.size(); ++i) {
        for (std::size_t j = i + 1; j < shares.size(); ++j) {
            const std::vector<Share> pair{shares[i], shares[j]};
            CHECK(reconstruct_secret(pair, params) == 42);
        }
    }
}

TEST_CASE("reconstruction is refused below the threshold and on duplicates") {
    const auto params = BluntSharingParams::make(Rational(1, 2), 4, 7919);
    const VirtualCommittee committee = virtual_committee(TicketAssignment({4}));
    const auto shares = deal_blunt_secret(7, params, committee, 5);
    const std::vector<Share> one{shares[0]};
    CHECK_THROWS_AS(reconstruct_secret(one, params), std::invalid_argument);
    const std::vector<Share> dup{shares[0], shares[0]};
    CHECK_THROWS_AS(reconstruct_secret(dup, params), std::invalid_argument);
}

TEST_CASE("threshold one degenerates to copies of the secret") {
    const auto params = BluntSharingParams::make(Rational(1, 4), 3, 101);
    const VirtualCommittee committee = virtual_committee(TicketAssignment({3}));
    const auto shares = deal_blunt_secret(55, params, committee, 9);
    REQUIRE(params.threshold == 1);
    for (const Share& s : shares) CHECK(s.value == 55);
}

TEST_CASE("dealing is deterministic per seed and rejects bad secrets") {
    const auto params = BluntSharingParams::make(Rational(1, 2), 4, 7919);
    const VirtualCommittee committee = virtual_committee(TicketAssignment({2, 2}));
    CHECK(deal_blunt_secret(1, params, committee, 7) == deal_blunt_secret(1, params, committee, 7));
    CHECK(deal_blunt_secret(1, params, committee, 7) != deal_blunt_secret(1, params, committee, 8));
    CHECK_THROWS_AS(deal_blunt_secret(7919, params, committee, 7), std::invalid_argument);
    CHECK_THROWS_AS(deal_blunt_secret(-1, params, committee, 7), std::invalid_argument);
    const VirtualCommittee wrong = virtual_committee(TicketAssignment({2, 1}));
    CHECK_THROWS_AS(deal_blunt_secret(1, params, wrong, 7), std::invalid_argument);
}

TEST_CASE("sub-threshold share sets reveal nothing, exhaustively") {
    // Enumerate every polynomial of degree < 3 over F_11: any 2 shares are
    // consistent with every candidate secret.
    const std::int64_t p = 11;
    const auto params = BluntSharingParams::make(Rational(1, 2), 5, p);
    REQUIRE(params.threshold == 3);
    const VirtualCommittee committee = virtual_committee(TicketAssignment({5}));
    const auto shares = deal_blunt_secret(6, params, committee, 31);
    const std::vector<Share> observed{shares[1], shares[4]};

    for (std::int64_t candidate = 0; candidate < p; ++candidate) {
        bool consistent = false;
        for (std::int64_t a1 = 0; a1 < p && !consistent; ++a1) {
            for (std::int64_t a2 = 0; a2 < p && !consistent; ++a2) {
                bool matches = true;
                for (const Share& s : observed) {
                    const std::int64_t x = s.index + 1;
                    const std::int64_t value = (candidate + a1 * x + a2 * x * x) % p;
                    if (value != s.value) { matches = false; break; }
                }
                consistent = matches;
            }
        }
        CHECK(consistent);
    }
}

TEST_CASE("erasure parameters reproduce the closed-form overheads") {
    const ErasureParams low = erasure_params(Rational(1, 3), Rational(1, 4), 100);
    CHECK(low.reconstruct_count == 25);
    CHECK(low.fragment_count == 100);
    CHECK(low.rate == Rational(1, 4));
    CHECK(low.comm_overhead == Rational(4, 3));
    CHECK(low.comp_overhead == Rational(32, 9));
    CHECK(to_decimal_string(low.comp_overhead, 2) == "3.56");
    // worst-case fragment count from the WQ bound: ceil(8n/3)
    CHECK(ticket_bound(ProblemSpec::weight_qualification(Rational(1, 3), Rational(1, 4)), 100) ==
          rational_ceil(Rational(8 * 100, 3)).convert_to<std::int64_t>());

    const ErasureParams high = erasure_params(Rational(2, 3), Rational(1, 2), 100);
    CHECK(high.comp_overhead == Rational(16, 9));
    CHECK(to_decimal_string(high.comp_overhead, 2) == "1.78");

    const ErasureParams tiny = erasure_params(Rational(1, 2), Rational(1, 4), 8);
    CHECK(tiny.reconstruct_count == 2);
    CHECK(tiny.fragment_count == 8);

    CHECK_THROWS_AS(erasure_params(Rational(1, 4), Rational(1, 3), 10), std::invalid_argument);
    CHECK_THROWS_AS(erasure_params(Rational(1, 3), Rational(1, 4), 0), std::invalid_argument);
}

TEST_CASE("error-correction parameters balance honest and corrupt fragments") {
    const ErrorCorrectionParams p = error_correction_params(Rational(1, 4));
    CHECK(p.beta_w == Rational(2, 3));
    CHECK(p.beta_n == Rational(5, 8));
    CHECK(p.ticket_factor == Rational(16, 3));
    CHECK(p.comp_overhead == Rational(64, 9));
    CHECK(to_decimal_string(p.comp_overhead, 2) == "7.11");
    // beta_n >= r + (1 - beta_n), with equality
    CHECK(p.beta_n == p.rate + (1 - p.beta_n));

    CHECK(error_correction_params(Rational(1, 5)).beta_n == Rational(3, 5));
    CHECK_THROWS_AS(error_correction_params(Rational(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(error_correction_params(Rational(1, 2)), std::invalid_argument);
}
