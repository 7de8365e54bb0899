#pragma once

#include "swiper/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace swiper {

/// The toolkit's one deterministic 64-bit generator (splitmix64). Fixed by
/// documentation so that seeded runs are reproducible bit for bit across
/// platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniformly-ish in [0, n); the tiny modulo bias is irrelevant here,
    /// determinism is the contract.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }
};

inline std::uint64_t splitmix64_scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of one bootstrap resample, derived from the experiment seed and
/// the sample coordinates so results do not depend on execution order.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t size, std::uint64_t index) {
    return splitmix64_scramble(seed ^ splitmix64_scramble(size * 0x9E3779B97F4A7C15ULL + index));
}

/// Draws `size` parties with replacement. Sampled parties keep their weight
/// and get position-suffixed ids to stay unique.
inline WeightDistribution resample_with_replacement(const WeightDistribution& dist,
                                                    std::size_t size, std::uint64_t seed) {
    if (size == 0) {
        throw std::invalid_argument("resample size must be positive");
    }
    SplitMix64 gen{seed};
    std::vector<Party> parties;
    parties.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
        const std::size_t pick = static_cast<std::size_t>(gen.next_below(dist.size()));
        const Party& source = dist.party(pick);
        parties.push_back(Party{source.id + "#" + std::to_string(k), source.weight});
    }
    return WeightDistribution(std::move(parties));
}

}  // namespace swiper
