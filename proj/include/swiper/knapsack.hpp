#pragma once

#include "swiper/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace swiper {

struct KnapsackItem {
    Rational weight;        // >= 0
    std::int64_t profit;    // >= 0
};

/// 0/1 knapsack with a STRICT capacity: a subset is feasible iff its total
/// weight is strictly below `capacity`. This mirrors the strict coalition
/// bound w(S) < alpha_w * W of the validity question.
struct KnapsackInstance {
    std::vector<KnapsackItem> items;
    Rational capacity;
};

/// min_weight[p] = exact minimum total weight of any item subset with
/// profit exactly p; unreachable profits carry no value.
class ProfitProfile {
  public:
    explicit ProfitProfile(std::vector<std::optional<Rational>> min_weight)
        : min_weight_(std::move(min_weight)) {}

    std::int64_t max_profit() const { return static_cast<std::int64_t>(min_weight_.size()) - 1; }
    bool reachable(std::int64_t p) const { return min_weight_.at(static_cast<std::size_t>(p)).has_value(); }
    const Rational& min_weight(std::int64_t p) const {
        return min_weight_.at(static_cast<std::size_t>(p)).value();
    }
    const std::vector<std::optional<Rational>>& entries() const { return min_weight_; }

  private:
    std::vector<std::optional<Rational>> min_weight_;
};

namespace detail {

inline void check_items(const std::vector<KnapsackItem>& items) {
    for (const KnapsackItem& item : items) {
        if (item.weight < 0) throw std::invalid_argument("negative item weight");
        if (item.profit < 0) throw std::invalid_argument("negative item profit");
    }
}

/// Item order for the greedy bounds: zero-weight items first, then
/// descending profit/weight ratio, ties by ascending item index.
inline std::vector<std::size_t> ratio_order(const std::vector<KnapsackItem>& items) {
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const bool za = items[a].weight == 0;
        const bool zb = items[b].weight == 0;
        if (za != zb) return za;
        if (!za) {
            const Rational lhs = Rational(items[a].profit) * items[b].weight;
            const Rational rhs = Rational(items[b].profit) * items[a].weight;
            if (lhs != rhs) return lhs > rhs;
        }
        return a < b;
    });
    return order;
}

}  // namespace detail

/// Dynamic programming by profits, O(p_max * |items|). Weights are scaled
/// to a common denominator so the inner loop works on integers.
inline ProfitProfile dp_min_weight_profile(const KnapsackInstance& inst, std::int64_t p_max) {
    if (p_max < 0) throw std::invalid_argument("p_max must be non-negative");
    detail::check_items(inst.items);

    BigInt scale = 1;
    for (const KnapsackItem& item : inst.items) {
        scale = boost::multiprecision::lcm(scale, denominator(item.weight));
    }
    std::vector<BigInt> scaled;
    scaled.reserve(inst.items.size());
    for (const KnapsackItem& item : inst.items) {
        scaled.push_back(numerator(item.weight) * (scale / denominator(item.weight)));
    }

    std::vector<std::optional<BigInt>> best(static_cast<std::size_t>(p_max) + 1);
    best[0] = BigInt(0);
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
        const std::int64_t profit = inst.items[i].profit;
        if (profit == 0) continue;  // cannot lower any min weight
        for (std::int64_t p = p_max; p >= profit; --p) {
            const auto& from = best[static_cast<std::size_t>(p - profit)];
            if (!from) continue;
            BigInt candidate = *from + scaled[i];
            auto& slot = best[static_cast<std::size_t>(p)];
            if (!slot || candidate < *slot) slot = std::move(candidate);
        }
    }

    std::vector<std::optional<Rational>> entries(best.size());
    for (std::size_t p = 0; p < best.size(); ++p) {
        if (best[p]) entries[p] = make_rational(*best[p], scale);
    }
    return ProfitProfile(std::move(entries));
}

/// Exact maximum profit over strictly feasible subsets. The empty set is
/// feasible whenever capacity > 0, so the result is at least 0.
inline std::int64_t max_profit_exact(const KnapsackInstance& inst) {
    detail::check_items(inst.items);
    std::int64_t profit_sum = 0;
    for (const KnapsackItem& item : inst.items) profit_sum += item.profit;
    const ProfitProfile profile = dp_min_weight_profile(inst, profit_sum);
    std::int64_t best = 0;
    for (std::int64_t p = 0; p <= profit_sum; ++p) {
        if (profile.reachable(p) && profile.min_weight(p) < inst.capacity) best = p;
    }
    return best;
}

/// Dantzig-style fractional relaxation, computed with the closed capacity
/// (<= capacity). Always >= max_profit_exact; O(|items| log |items|).
inline Rational upper_bound_profit(const KnapsackInstance& inst) {
    detail::check_items(inst.items);
    if (inst.capacity < 0) return 0;
    Rational used = 0;
    Rational bound = 0;
    for (std::size_t idx : detail::ratio_order(inst.items)) {
        const KnapsackItem& item = inst.items[idx];
        if (item.profit == 0) continue;
        if (used + item.weight <= inst.capacity) {
            used += item.weight;
            bound += item.profit;
        } else {
            const Rational room = inst.capacity - used;
            if (room > 0) bound += Rational(item.profit) * room / item.weight;
            break;
        }
    }
    return bound;
}

/// Greedy integral packing in ratio order plus the best single item, both
/// under the strict capacity. Always <= max_profit_exact.
inline std::int64_t lower_bound_profit(const KnapsackInstance& inst) {
    detail::check_items(inst.items);
    Rational used = 0;
    std::int64_t greedy = 0;
    std::int64_t best_single = 0;
    for (std::size_t idx : detail::ratio_order(inst.items)) {
        const KnapsackItem& item = inst.items[idx];
        if (used + item.weight < inst.capacity) {
            used += item.weight;
            greedy += item.profit;
        }
    }
    for (const KnapsackItem& item : inst.items) {
        if (item.weight < inst.capacity) best_single = std::max(best_single, item.profit);
    }
    return std::max(greedy, best_single);
}

}  // namespace swiper
