#pragma once

#include "swiper/committee.hpp"
#include "swiper/rational.hpp"
#include "swiper/resample.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace swiper {

// Desk-scale Shamir sharing over a small prime field. Information-theoretic
// only: no verifiability and no cryptographic hardness claims. The point of
// the demo is the share-count arithmetic of the blunt access structure.

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace field {

inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

inline std::int64_t add(std::int64_t a, std::int64_t b, std::int64_t p) { return (a + b) % p; }

inline std::int64_t sub(std::int64_t a, std::int64_t b, std::int64_t p) {
    return ((a - b) % p + p) % p;
}

inline std::int64_t pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
    if (a % p == 0) throw std::invalid_argument("no inverse of zero");
    return pow(a, p - 2, p);  // p prime
}

}  // namespace field

/// Parameters of the pre-distributed sharing: threshold = ceil(alpha_n * T)
/// shares reconstruct; alpha_n <= 1/2 so the honest complement of any light
/// coalition always qualifies.
struct BluntSharingParams {
    Rational alpha_n;
    std::int64_t total_shares = 0;
    std::int64_t threshold = 0;
    std::int64_t field_modulus = 0;

    static BluntSharingParams make(const Rational& alpha_n, std::int64_t total_shares,
                                   std::int64_t field_modulus) {
        if (!(alpha_n > 0) || alpha_n > Rational(1, 2)) {
            throw std::invalid_argument("alpha_n must lie in (0, 1/2]");
        }
        if (total_shares < 1) {
            throw std::invalid_argument("need at least one share");
        }
        if (field_modulus <= total_shares) {
            throw std::invalid_argument("field modulus must exceed the share count");
        }
        if (!is_prime_u64(static_cast<std::uint64_t>(field_modulus))) {
            throw std::invalid_argument("field modulus must be prime");
        }
        const std::int64_t threshold =
            rational_ceil(alpha_n * total_shares).convert_to<std::int64_t>();
        return BluntSharingParams{alpha_n, total_shares, threshold, field_modulus};
    }
};

struct Share {
    std::int64_t index = 0;  // virtual-user index in [0, T)
    std::int64_t value = 0;  // field element

    bool operator==(const Share&) const = default;
};

/// Shamir split: a polynomial of degree threshold-1 with constant term
/// `secret` and deterministic seeded coefficients; share j is p(j+1).
/// Party i holds the shares of its committee slot.
inline std::vector<Share> deal_blunt_secret(std::int64_t secret, const BluntSharingParams& params,
                                            const VirtualCommittee& committee,
                                            std::uint64_t seed = 0) {
    const std::int64_t p = params.field_modulus;
    if (secret < 0 || secret >= p) {
        throw std::invalid_argument("secret must be a field element");
    }
    if (committee.assignment.total() != params.total_shares) {
        throw std::invalid_argument("committee size does not match share count");
    }
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(params.threshold));
    coeffs[0] = secret;
    SplitMix64 gen{seed};
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        coeffs[i] = static_cast<std::int64_t>(gen.next() % static_cast<std::uint64_t>(p));
    }
    std::vector<Share> shares;
    shares.reserve(static_cast<std::size_t>(params.total_shares));
    for (std::int64_t j = 0; j < params.total_shares; ++j) {
        const std::int64_t x = (j + 1) % p;
        std::int64_t value = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            value = field::add(field::mul(value, x, p), coeffs[k], p);
        }
        shares.push_back(Share{j, value});
    }
    return shares;
}

/// Lagrange interpolation at zero from the first `threshold` distinct
/// shares. Refuses sub-threshold sets: below the threshold every candidate
/// secret is equally consistent, so there is nothing to interpolate.
inline std::int64_t reconstruct_secret(std::span<const Share> shares,
                                       const BluntSharingParams& params) {
    if (static_cast<std::int64_t>(shares.size()) < params.threshold) {
        throw std::invalid_argument("fewer shares than the reconstruction threshold");
    }
    std::unordered_set<std::int64_t> seen;
    for (const Share& s : shares) {
        if (!seen.insert(s.index).second) {
            throw std::invalid_argument("duplicate share index");
        }
        if (s.index < 0 || s.index >= params.total_shares) {
            throw std::invalid_argument("share index out of range");
        }
    }
    const std::int64_t p = params.field_modulus;
    const std::size_t k = static_cast<std::size_t>(params.threshold);
    std::int64_t secret = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t xi = (shares[i].index + 1) % p;
        std::int64_t num = 1;
        std::int64_t den = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            const std::int64_t xj = (shares[j].index + 1) % p;
            num = field::mul(num, xj, p);
            den = field::mul(den, field::sub(xj, xi, p), p);
        }
        const std::int64_t basis = field::mul(num, field::inverse(den, p), p);
        secret = field::add(secret, field::mul(shares[i].value, basis, p), p);
    }
    return secret;
}

}  // namespace swiper
