#pragma once

#include "swiper/problem.hpp"
#include "swiper/rational.hpp"
#include "swiper/tickets.hpp"
#include "swiper/weights.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace swiper {

/// Enumeration caps that keep brute-force runs under seconds.
struct OracleBudget {
    std::size_t max_parties = 18;          // subset enumeration, 2^n leaves
    std::size_t max_parties_optimum = 6;   // exhaustive assignment search
    std::int64_t max_total_tickets = 12;   // ticket cap for the optimum search
};

namespace oracle_detail {

// All comparisons run on a common integer scale: weights are multiplied by
// the lcm of their denominators, and each threshold x against a sum V
// becomes "sum * den(x) vs num(x) * V". The int64 path is used whenever
// every product provably fits; BigInt otherwise.
template <class Int>
struct Cut {
    Int num;
    Int den;
};

template <class Int>
bool strictly_below(const Int& sum, const Cut<Int>& cut) {
    return sum * cut.den < cut.num;
}

template <class Int>
bool strictly_above(const Int& sum, const Cut<Int>& cut) {
    return sum * cut.den > cut.num;
}

template <class Int>
bool wr_holds(const std::vector<Int>& w, const std::vector<Int>& t, const Cut<Int>& light,
              const Cut<Int>& quota, std::size_t i, Int wsum, Int tsum) {
    if (!strictly_below(wsum, light)) return true;  // supersets can only get heavier
    if (i == w.size()) return strictly_below(tsum, quota);
    if (!wr_holds(w, t, light, quota, i + 1, wsum, tsum)) return false;
    return wr_holds(w, t, light, quota, i + 1, Int(wsum + w[i]), Int(tsum + t[i]));
}

template <class Int>
bool wq_holds(const std::vector<Int>& w, const std::vector<Int>& t, const std::vector<Int>& suffix,
              const Cut<Int>& heavy, const Cut<Int>& quota, std::size_t i, Int wsum, Int tsum) {
    if (!strictly_above(Int(wsum + suffix[i]), heavy)) return true;  // can never become heavy
    if (i == w.size()) {
        return strictly_above(wsum, heavy) ? strictly_above(tsum, quota) : true;
    }
    if (!wq_holds(w, t, suffix, heavy, quota, i + 1, wsum, tsum)) return false;
    return wq_holds(w, t, suffix, heavy, quota, i + 1, Int(wsum + w[i]), Int(tsum + t[i]));
}

template <class Int>
void ws_scan(const std::vector<Int>& w, const std::vector<std::int64_t>& t, const Cut<Int>& light,
             const Cut<Int>& heavy, std::size_t i, Int wsum, std::int64_t tsum,
             std::int64_t& max_light, std::int64_t& min_heavy) {
    if (i == w.size()) {
        if (strictly_below(wsum, light) && tsum > max_light) max_light = tsum;
        if (strictly_above(wsum, heavy) && tsum < min_heavy) min_heavy = tsum;
        return;
    }
    ws_scan(w, t, light, heavy, i + 1, wsum, tsum, max_light, min_heavy);
    ws_scan(w, t, light, heavy, i + 1, Int(wsum + w[i]), tsum + t[i], max_light, min_heavy);
}

struct ScaledInput {
    std::vector<BigInt> weights;  // weights * lcm(denominators)
    BigInt total;                 // sum of the scaled weights
};

inline ScaledInput scale_weights(const WeightDistribution& dist) {
    BigInt scale = 1;
    for (const Party& p : dist.parties()) {
        scale = boost::multiprecision::lcm(scale, denominator(p.weight));
    }
    ScaledInput out;
    out.weights.reserve(dist.size());
    for (const Party& p : dist.parties()) {
        out.weights.push_back(numerator(p.weight) * (scale / denominator(p.weight)));
        out.total += out.weights.back();
    }
    return out;
}

inline Cut<BigInt> cut_for(const Rational& threshold, const BigInt& scaled_total) {
    return Cut<BigInt>{numerator(threshold) * scaled_total, denominator(threshold)};
}

inline bool fits_int64(const BigInt& v) {
    static const BigInt limit = BigInt(1) << 62;
    return v < limit && v > -limit;
}

}  // namespace oracle_detail

/// Checks the problem constraint literally, quantifying over all 2^n
/// subsets. Independent of the solver's knapsack path by construction.
inline bool brute_validate(const ProblemSpec& problem, const WeightDistribution& dist,
                           const TicketAssignment& t, const OracleBudget& budget = {}) {
    using namespace oracle_detail;
    if (dist.size() > budget.max_parties) {
        throw std::length_error("oracle budget exceeded: too many parties for subset enumeration");
    }
    if (t.size() != dist.size()) {
        throw std::invalid_argument("ticket/party count mismatch");
    }

    const ScaledInput scaled = scale_weights(dist);
    const std::int64_t total = t.total();

    const Cut<BigInt> low_cut = cut_for(problem.low(), scaled.total);
    const Cut<BigInt> high_cut = cut_for(problem.high(), scaled.total);
    const Cut<BigInt> low_quota{numerator(problem.low()) * total, denominator(problem.low())};
    const Cut<BigInt> high_quota{numerator(problem.high()) * total, denominator(problem.high())};

    bool small = true;
    for (const Cut<BigInt>* cut : {&low_cut, &high_cut, &low_quota, &high_quota}) {
        small = small && fits_int64(cut->num) && fits_int64(cut->den) &&
                fits_int64(scaled.total * cut->den) && fits_int64(BigInt(total) * cut->den);
    }

    auto run = [&](auto zero) {
        using Int = decltype(zero);
        std::vector<Int> w(dist.size());
        std::vector<Int> tk(dist.size());
        for (std::size_t i = 0; i < dist.size(); ++i) {
            if constexpr (std::is_same_v<Int, BigInt>) {
                w[i] = scaled.weights[i];
            } else {
                w[i] = scaled.weights[i].convert_to<std::int64_t>();
            }
            tk[i] = static_cast<Int>(t[i]);
        }
        auto to_cut = [&](const Cut<BigInt>& c) {
            if constexpr (std::is_same_v<Int, BigInt>) {
                return c;
            } else {
                return Cut<Int>{c.num.convert_to<std::int64_t>(), c.den.convert_to<std::int64_t>()};
            }
        };
        switch (problem.kind()) {
            case ProblemKind::WeightRestriction:
                // forall S: w(S) < alpha_w W  =>  t(S) < alpha_n T
                return wr_holds(w, tk, to_cut(low_cut), to_cut(high_quota), std::size_t{0}, Int(0),
                                Int(0));
            case ProblemKind::WeightQualification: {
                // forall S: w(S) > beta_w W  =>  t(S) > beta_n T
                std::vector<Int> suffix(dist.size() + 1, Int(0));
                for (std::size_t i = dist.size(); i-- > 0;) suffix[i] = Int(suffix[i + 1] + w[i]);
                return wq_holds(w, tk, suffix, to_cut(high_cut), to_cut(low_quota), std::size_t{0},
                                Int(0), Int(0));
            }
            case ProblemKind::WeightSeparation: {
                // max over light sets must stay below min over heavy sets
                std::int64_t max_light = std::numeric_limits<std::int64_t>::min();
                std::int64_t min_heavy = std::numeric_limits<std::int64_t>::max();
                ws_scan(w, t.values(), to_cut(low_cut), to_cut(high_cut), std::size_t{0}, Int(0),
                        std::int64_t{0}, max_light, min_heavy);
                return max_light < min_heavy;
            }
        }
        throw std::logic_error("unreachable problem kind");
    };

    return small ? run(std::int64_t{0}) : run(BigInt{0});
}

namespace oracle_detail {

inline std::optional<TicketAssignment> first_valid_composition(const ProblemSpec& problem,
                                                               const WeightDistribution& dist,
                                                               std::vector<std::int64_t>& current,
                                                               std::size_t i, std::int64_t left,
                                                               const OracleBudget& budget) {
    if (i + 1 == current.size()) {
        current[i] = left;
        TicketAssignment candidate{std::vector<std::int64_t>(current)};
        if (brute_validate(problem, dist, candidate, budget)) return candidate;
        return std::nullopt;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
        current[i] = v;
        if (auto found = first_valid_composition(problem, dist, current, i + 1, left - v, budget)) {
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace oracle_detail

/// Exhaustive minimum-total search over ALL assignments (not just the
/// solver's family) up to the budget's ticket cap: the true objective the
/// solver approximates. Returns the lexicographically first minimum-total
/// valid assignment, or nullopt when none exists within the cap.
inline std::optional<TicketAssignment> brute_optimum(const ProblemSpec& problem,
                                                     const WeightDistribution& dist,
                                                     const OracleBudget& budget = {}) {
    if (dist.size() > budget.max_parties_optimum) {
        throw std::length_error("oracle budget exceeded: too many parties for optimum search");
    }
    std::vector<std::int64_t> current(dist.size(), 0);
    for (std::int64_t total = 1; total <= budget.max_total_tickets; ++total) {
        if (auto found = oracle_detail::first_valid_composition(problem, dist, current, 0, total,
                                                                budget)) {
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace swiper
