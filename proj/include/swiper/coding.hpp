#pragma once

#include "swiper/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace swiper {

// Parameter calculators for coded storage and broadcast on top of a WQ
// ticket assignment. Overheads are the worst-case factors of the closed
// forms, not measured values.

/// (k, m) = (ceil(beta_n T), T) erasure coding over T tickets.
/// comm_overhead compares the code rate beta_n with the nominal rate
/// beta_w; comp_overhead additionally pays the worst-case fragments-per-
/// party factor beta_w (1 - beta_w) / (beta_w - beta_n).
struct ErasureParams {
    Rational beta_w;
    Rational beta_n;
    std::int64_t tickets = 0;            // T
    std::int64_t reconstruct_count = 0;  // k
    std::int64_t fragment_count = 0;     // m
    Rational rate;                       // beta_n
    Rational comm_overhead;
    Rational comp_overhead;
};

inline ErasureParams erasure_params(const Rational& beta_w, const Rational& beta_n,
                                    std::int64_t tickets) {
    if (!(beta_n > 0 && beta_n < beta_w && beta_w < 1)) {
        throw std::invalid_argument("erasure coding requires 0 < beta_n < beta_w < 1");
    }
    if (tickets < 1) {
        throw std::invalid_argument("need at least one ticket");
    }
    const Rational worst_fragments = beta_w * (1 - beta_w) / (beta_w - beta_n);
    const Rational comm = beta_w / beta_n;
    return ErasureParams{beta_w,
                         beta_n,
                         tickets,
                         rational_ceil(beta_n * tickets).convert_to<std::int64_t>(),
                         tickets,
                         beta_n,
                         comm,
                         comm * worst_fragments};
}

/// Error-corrected broadcast at code rate r: beta_w = 2/3 and
/// beta_n = r/2 + 1/2, the smallest beta_n with beta_n >= r + (1 - beta_n),
/// so the honest fragments always outnumber the corrupt ones by the code
/// distance. Requires r < 1/3.
struct ErrorCorrectionParams {
    Rational rate;           // r
    Rational beta_w;         // 2/3
    Rational beta_n;         // r/2 + 1/2
    Rational ticket_factor;  // worst-case T / n
    Rational comm_overhead;  // nominal rate (1 - beta_w) over r
    Rational comp_overhead;
};

inline ErrorCorrectionParams error_correction_params(const Rational& rate) {
    if (!(rate > 0 && rate < Rational(1, 3))) {
        throw std::invalid_argument("error correction requires 0 < r < 1/3");
    }
    const Rational beta_w(2, 3);
    const Rational beta_n = rate / 2 + Rational(1, 2);
    const Rational ticket_factor = beta_w * (1 - beta_w) / (beta_w - beta_n);
    const Rational comm = (1 - beta_w) / rate;
    return ErrorCorrectionParams{rate, beta_w, beta_n, ticket_factor, comm, comm * ticket_factor};
}

}  // namespace swiper
