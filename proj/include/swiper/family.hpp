#pragma once

#include "swiper/problem.hpp"
#include "swiper/rational.hpp"
#include "swiper/tickets.hpp"
#include "swiper/weights.hpp"

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace swiper {

/// The scale at which a party gains its ordinal-th ticket: the assignment
/// floor(s*w + c) steps from ordinal-1 to ordinal exactly when s reaches
/// (ordinal - c) / w. Zero-weight parties have no thresholds.
struct TicketThreshold {
    Rational value;
    std::size_t party = 0;
    std::int64_t ordinal = 0;
};

/// Coordinates of a member of the assignment family: tickets are
/// floor(scale * w_i + shift), minus one for every border party
/// (scale * w_i + shift integral) except the kept_border parties that keep
/// theirs under the deterministic tie-break.
struct FamilyPoint {
    Rational scale;
    std::int64_t kept_border = 0;
    Rational shift;
};

struct FamilyMember {
    TicketAssignment assignment;
    FamilyPoint point;
};

/// The additive constant inside the floor, chosen per problem so that the
/// closed-form ticket bounds hold: alpha_w for WR, 1 - beta_w for WQ,
/// (alpha + beta) / 2 for WS. Always in (0, 1).
inline Rational shift_constant(const ProblemSpec& problem) {
    switch (problem.kind()) {
        case ProblemKind::WeightRestriction: return problem.low();
        case ProblemKind::WeightQualification: return Rational(1) - problem.high();
        case ProblemKind::WeightSeparation: return (problem.low() + problem.high()) / 2;
    }
    throw std::logic_error("unreachable problem kind");
}

/// The family member holding exactly `total` tickets: grant the `total`
/// smallest ticket thresholds, breaking value ties by ascending party
/// index (lower index keeps its ticket first). Lazy per-party threshold
/// generation through a min-heap, O(total * log n).
inline FamilyMember family_member(const WeightDistribution& dist, const Rational& shift,
                                  std::int64_t total) {
    if (total < 0) {
        throw std::invalid_argument("ticket total must be non-negative");
    }
    if (!(shift > 0 && shift < 1)) {
        throw std::invalid_argument("shift constant must lie in (0, 1)");
    }

    auto later = [](const TicketThreshold& a, const TicketThreshold& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.party > b.party;
    };
    std::priority_queue<TicketThreshold, std::vector<TicketThreshold>, decltype(later)> next(later);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist.weight(i) > 0) {
            next.push(TicketThreshold{(Rational(1) - shift) / dist.weight(i), i, 1});
        }
    }

    std::vector<std::int64_t> tickets(dist.size(), 0);
    Rational scale = 0;
    std::int64_t granted_at_scale = 0;
    for (std::int64_t granted = 0; granted < total; ++granted) {
        TicketThreshold top = next.top();
        next.pop();
        ++tickets[top.party];
        if (granted > 0 && top.value == scale) {
            ++granted_at_scale;
        } else {
            scale = top.value;
            granted_at_scale = 1;
        }
        next.push(TicketThreshold{(Rational(top.ordinal + 1) - shift) / dist.weight(top.party),
                                  top.party, top.ordinal + 1});
    }
    if (total == 0) {
        scale = 0;
        granted_at_scale = 0;
    }
    return FamilyMember{TicketAssignment(std::move(tickets)),
                        FamilyPoint{scale, granted_at_scale, shift}};
}

inline TicketAssignment assignment_with_total(const WeightDistribution& dist, const Rational& shift,
                                              std::int64_t total) {
    return family_member(dist, shift, total).assignment;
}

/// The adjacent family member with one fewer ticket. The input must itself
/// be the family member for its total.
inline TicketAssignment predecessor(const WeightDistribution& dist, const Rational& shift,
                                    const TicketAssignment& assignment) {
    if (assignment.total() == 0) {
        throw std::invalid_argument("the all-zero assignment has no predecessor");
    }
    return assignment_with_total(dist, shift, assignment.total() - 1);
}

}  // namespace swiper
