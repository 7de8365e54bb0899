#pragma once

#include "swiper/tickets.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace swiper {

/// Half-open range of virtual-user indices controlled by one party.
struct SlotRange {
    std::int64_t begin = 0;
    std::int64_t end = 0;

    std::int64_t size() const { return end - begin; }
    bool contains(std::int64_t index) const { return index >= begin && index < end; }
    bool operator==(const SlotRange&) const = default;
};

/// A nominal protocol with T virtual users where party i controls the t_i
/// contiguous indices of its slot. The ranges partition [0, T) in party
/// order.
struct VirtualCommittee {
    TicketAssignment assignment;
    std::vector<SlotRange> slots;
};

inline VirtualCommittee virtual_committee(const TicketAssignment& assignment) {
    if (assignment.total() < 1) {
        throw std::invalid_argument("virtual committee requires at least one ticket");
    }
    std::vector<SlotRange> slots;
    slots.reserve(assignment.size());
    std::int64_t next = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        slots.push_back(SlotRange{next, next + assignment[i]});
        next += assignment[i];
    }
    return VirtualCommittee{assignment, std::move(slots)};
}

}  // namespace swiper
