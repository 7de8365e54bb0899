#pragma once

#include "swiper/family.hpp"
#include "swiper/knapsack.hpp"
#include "swiper/problem.hpp"
#include "swiper/rational.hpp"
#include "swiper/tickets.hpp"
#include "swiper/weights.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swiper {

/// Full mode certifies a local minimum with the exact knapsack check;
/// Linear mode only ever runs the conservative quick check and may stop
/// above the local minimum.
enum class SolveMode { Full, Linear };

inline const char* mode_name(SolveMode m) { return m == SolveMode::Full ? "full" : "linear"; }

struct SolveStats {
    std::int64_t holders = 0;      // parties with at least one ticket
    std::int64_t max_tickets = 0;  // largest single holding

    bool operator==(const SolveStats&) const = default;
};

struct SolveReport {
    TicketAssignment assignment;
    std::int64_t total = 0;
    std::int64_t bound = 0;
    SolveMode mode = SolveMode::Full;
    bool locally_minimal = false;
    SolveStats stats;

    bool operator==(const SolveReport&) const = default;
};

/// Closed-form cap on the tickets needed by the assignment family:
///   WR: ceil(alpha_w (1-alpha_w) / (alpha_n - alpha_w) * n)
///   WQ: ceil(beta_w (1-beta_w) / (beta_w - beta_n) * n)
///   WS: ceil((alpha+beta) (1-alpha) / (beta - alpha) * n)
/// Any family member (built with the matching shift constant) holding at
/// least this many tickets is valid.
inline std::int64_t ticket_bound(const ProblemSpec& problem, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("ticket_bound requires n >= 1");
    Rational factor;
    switch (problem.kind()) {
        case ProblemKind::WeightRestriction: {
            const Rational& aw = problem.low();
            const Rational& an = problem.high();
            factor = aw * (1 - aw) / (an - aw);
            break;
        }
        case ProblemKind::WeightQualification: {
            const Rational& bn = problem.low();
            const Rational& bw = problem.high();
            factor = bw * (1 - bw) / (bw - bn);
            break;
        }
        case ProblemKind::WeightSeparation: {
            const Rational& a = problem.low();
            const Rational& b = problem.high();
            factor = (a + b) * (1 - a) / (b - a);
            break;
        }
    }
    const BigInt bound = rational_ceil(factor * n);
    if (bound > std::numeric_limits<std::int64_t>::max() / 4) {
        throw std::overflow_error("ticket bound does not fit in 64 bits");
    }
    return bound.convert_to<std::int64_t>();
}

/// WQ(beta_w, beta_n) is the same problem as WR(1-beta_w, 1-beta_n);
/// WR and WS pass through unchanged.
inline ProblemSpec normalize(const ProblemSpec& problem) {
    if (problem.kind() != ProblemKind::WeightQualification) return problem;
    return ProblemSpec::weight_restriction(Rational(1) - problem.high(),
                                           Rational(1) - problem.low());
}

namespace detail {

inline void check_alignment(const WeightDistribution& dist, const TicketAssignment& t) {
    if (t.size() != dist.size()) {
        throw std::invalid_argument("ticket/party count mismatch");
    }
}

/// Items (w_i, t_i) for parties holding tickets; zero-profit items never
/// affect a maximum-profit question.
inline std::vector<KnapsackItem> coalition_items(const WeightDistribution& dist,
                                                 const TicketAssignment& t) {
    std::vector<KnapsackItem> items;
    items.reserve(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (t[i] > 0) items.push_back(KnapsackItem{dist.weight(i), t[i]});
    }
    return items;
}

/// Smallest integer profit that violates "t(S) < alpha_n T".
inline std::int64_t violation_profit(const Rational& alpha_n, std::int64_t total) {
    return rational_ceil(alpha_n * total).convert_to<std::int64_t>();
}

struct WsInstances {
    KnapsackInstance light;       // capacity alpha * W (strict)
    KnapsackInstance complement;  // capacity (1 - beta) * W (strict)
};

inline WsInstances ws_instances(const ProblemSpec& p, const WeightDistribution& dist,
                                const TicketAssignment& t) {
    std::vector<KnapsackItem> items = coalition_items(dist, t);
    const Rational& w = dist.total_weight();
    return WsInstances{KnapsackInstance{items, p.low() * w},
                       KnapsackInstance{std::move(items), (Rational(1) - p.high()) * w}};
}

}  // namespace detail

/// Exact validity of an assignment for the given problem. Always runs the
/// exact check; the bound shortcut is reserved for the solver's own family
/// members.
///
/// WR/WQ: valid iff T >= 1 and no coalition with w(S) < alpha_w W reaches
/// t(S) >= alpha_n T, decided through the min-weight-by-profit profile.
/// WS: valid iff KP1 + KP2 < T, where KP1 caps the tickets of light sets
/// and KP2 those of complements of heavy sets.
inline bool validate(const ProblemSpec& problem, const WeightDistribution& dist,
                     const TicketAssignment& t) {
    detail::check_alignment(dist, t);
    const ProblemSpec p = normalize(problem);
    const std::int64_t total = t.total();
    if (total == 0) return false;

    if (p.kind() == ProblemKind::WeightSeparation) {
        const auto inst = detail::ws_instances(p, dist, t);
        return max_profit_exact(inst.light) + max_profit_exact(inst.complement) < total;
    }

    const std::int64_t p_min = detail::violation_profit(p.high(), total);
    if (p_min > total) return true;
    const KnapsackInstance inst{detail::coalition_items(dist, t), p.low() * dist.total_weight()};
    const ProfitProfile profile = dp_min_weight_profile(inst, total);
    for (std::int64_t profit = p_min; profit <= total; ++profit) {
        if (profile.reachable(profit) && profile.min_weight(profit) < inst.capacity) {
            return false;
        }
    }
    return true;
}

namespace detail {

/// Conservative test: Valid only when the fractional upper bound already
/// rules every violating coalition out. May produce false negatives,
/// never false positives.
inline bool conservative_valid(const ProblemSpec& p, const WeightDistribution& dist,
                               const TicketAssignment& t) {
    const std::int64_t total = t.total();
    if (total == 0) return false;
    if (p.kind() == ProblemKind::WeightSeparation) {
        const auto inst = ws_instances(p, dist, t);
        return upper_bound_profit(inst.light) + upper_bound_profit(inst.complement) < total;
    }
    const KnapsackInstance inst{coalition_items(dist, t), p.low() * dist.total_weight()};
    return upper_bound_profit(inst) < violation_profit(p.high(), total);
}

/// Liberal test: Invalid only when the greedy lower bound already exhibits
/// a violating coalition. May produce false positives, never false
/// negatives.
inline bool liberal_invalid(const ProblemSpec& p, const WeightDistribution& dist,
                            const TicketAssignment& t) {
    const std::int64_t total = t.total();
    if (total == 0) return true;
    if (p.kind() == ProblemKind::WeightSeparation) {
        const auto inst = ws_instances(p, dist, t);
        return lower_bound_profit(inst.light) + lower_bound_profit(inst.complement) >= total;
    }
    const KnapsackInstance inst{coalition_items(dist, t), p.low() * dist.total_weight()};
    return lower_bound_profit(inst) >= violation_profit(p.high(), total);
}

}  // namespace detail

/// Quick three-valued check combining the conservative and liberal bounds.
/// Never contradicts validate().
inline Verdict quick_validate(const ProblemSpec& problem, const WeightDistribution& dist,
                              const TicketAssignment& t) {
    detail::check_alignment(dist, t);
    const ProblemSpec p = normalize(problem);
    if (detail::liberal_invalid(p, dist, t)) return Verdict::Invalid;
    if (detail::conservative_valid(p, dist, t)) return Verdict::Valid;
    return Verdict::Uncertain;
}

/// Finds a valid family member by binary search over ticket totals.
///
/// The bracket starts at lo = 0 (the all-zero assignment is never valid)
/// and hi = ticket_bound (a family member with that many tickets is valid
/// without running any check). Full mode resolves Uncertain quick verdicts
/// with the exact DP and therefore lands on a local minimum of the family;
/// Linear mode treats Uncertain as invalid and may stop higher.
inline SolveReport solve(const ProblemSpec& problem, const WeightDistribution& dist,
                         SolveMode mode = SolveMode::Full) {
    const ProblemSpec p = normalize(problem);
    const Rational shift = shift_constant(p);
    const std::int64_t bound = ticket_bound(p, static_cast<std::int64_t>(dist.size()));

    auto accepted = [&](const TicketAssignment& a) {
        if (mode == SolveMode::Linear) {
            return detail::conservative_valid(p, dist, a);
        }
        if (detail::liberal_invalid(p, dist, a)) return false;
        if (detail::conservative_valid(p, dist, a)) return true;
        return validate(p, dist, a);
    };

    std::int64_t lo = 0;
    std::int64_t hi = bound;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (accepted(assignment_with_total(dist, shift, mid))) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    TicketAssignment assignment = assignment_with_total(dist, shift, hi);
    const SolveStats stats{assignment.holders(), assignment.max_tickets()};
    const bool locally_minimal = mode == SolveMode::Full;
    return SolveReport{std::move(assignment), hi, bound, mode, locally_minimal, stats};
}

/// True iff the report's family predecessor fails the exact check (for
/// total 1 the predecessor is the all-zero assignment, invalid by
/// definition). Full-mode reports always certify; Linear-mode ones may not.
inline bool certify_local_minimum(const ProblemSpec& problem, const WeightDistribution& dist,
                                  const SolveReport& report) {
    const ProblemSpec p = normalize(problem);
    if (report.total <= 0) return false;
    if (report.total == 1) return true;
    const TicketAssignment pred = predecessor(dist, shift_constant(p), report.assignment);
    return !validate(p, dist, pred);
}

}  // namespace swiper
