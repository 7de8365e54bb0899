// Prints erasure / error-correction parameters derived from a WQ ticket
// assignment for a few standard threshold choices.

#include "swiper/swiper.hpp"

#include <iostream>

int main() {
    using namespace swiper;

    for (const auto& [bw, bn] : {std::pair{Rational(1, 3), Rational(1, 4)},
                                 std::pair{Rational(2, 3), Rational(1, 2)}}) {
        const ErasureParams p = erasure_params(bw, bn, 120);
        std::cout << "erasure beta_w=" << to_string(p.beta_w) << " beta_n=" << to_string(p.beta_n)
                  << ": (" << p.reconstruct_count << ", " << p.fragment_count << ") code, rate "
                  << to_string(p.rate) << ", comm x" << to_decimal_string(p.comm_overhead, 2)
                  << ", comp x" << to_decimal_string(p.comp_overhead, 2) << "\n";
    }

    const ErrorCorrectionParams ec = error_correction_params(Rational(1, 4));
    std::cout << "error correction r=" << to_string(ec.rate) << ": beta_n=" << to_string(ec.beta_n)
              << ", worst tickets x" << to_decimal_string(ec.ticket_factor, 2) << " per party"
              << ", comp x" << to_decimal_string(ec.comp_overhead, 2) << "\n";
    return 0;
}
