#pragma once

#include "swiper/rational.hpp"

#include <stdexcept>
#include <string>

namespace swiper {

enum class ProblemKind { WeightRestriction, WeightQualification, WeightSeparation };

inline const char* kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::WeightRestriction: return "wr";
        case ProblemKind::WeightQualification: return "wq";
        case ProblemKind::WeightSeparation: return "ws";
    }
    return "?";
}

/// One of the three weight reduction problems with its two thresholds.
/// Storage convention: WR holds (low, high) = (alpha_w, alpha_n),
/// WQ holds (beta_n, beta_w), WS holds (alpha, beta); in all three cases
/// 0 < low < high < 1. Degenerate parameter pairs (zero or negative gap)
/// are rejected here because every downstream bound diverges on them.
class ProblemSpec {
  public:
    static ProblemSpec weight_restriction(const Rational& alpha_w, const Rational& alpha_n) {
        return ProblemSpec(ProblemKind::WeightRestriction, alpha_w, alpha_n, "alpha_w", "alpha_n");
    }

    static ProblemSpec weight_qualification(const Rational& beta_w, const Rational& beta_n) {
        return ProblemSpec(ProblemKind::WeightQualification, beta_n, beta_w, "beta_n", "beta_w");
    }

    static ProblemSpec weight_separation(const Rational& alpha, const Rational& beta) {
        return ProblemSpec(ProblemKind::WeightSeparation, alpha, beta, "alpha", "beta");
    }

    ProblemKind kind() const { return kind_; }
    const Rational& low() const { return low_; }
    const Rational& high() const { return high_; }

    const Rational& alpha_w() const { return expect(ProblemKind::WeightRestriction), low_; }
    const Rational& alpha_n() const { return expect(ProblemKind::WeightRestriction), high_; }
    const Rational& beta_n() const { return expect(ProblemKind::WeightQualification), low_; }
    const Rational& beta_w() const { return expect(ProblemKind::WeightQualification), high_; }
    const Rational& alpha() const { return expect(ProblemKind::WeightSeparation), low_; }
    const Rational& beta() const { return expect(ProblemKind::WeightSeparation), high_; }

    bool operator==(const ProblemSpec& other) const = default;

  private:
    ProblemSpec(ProblemKind kind, const Rational& low, const Rational& high,
                const char* low_name, const char* high_name)
        : kind_(kind), low_(low), high_(high) {
        if (!(low_ > 0 && low_ < 1) || !(high_ > 0 && high_ < 1)) {
            throw std::invalid_argument(std::string(kind_name(kind_)) + ": " + low_name + " and " +
                                        high_name + " must lie in (0, 1)");
        }
        if (!(low_ < high_)) {
            throw std::invalid_argument(std::string(kind_name(kind_)) + ": requires " + low_name +
                                        " < " + high_name);
        }
    }

    void expect(ProblemKind k) const {
        if (kind_ != k) {
            throw std::logic_error("parameter accessor used on wrong problem kind");
        }
    }

    ProblemKind kind_;
    Rational low_;
    Rational high_;
};

/// Result of a quick validity check. Uncertain only ever comes from the
/// quick bounds; exact validation is two-valued.
enum class Verdict { Valid, Invalid, Uncertain };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Valid: return "valid";
        case Verdict::Invalid: return "invalid";
        case Verdict::Uncertain: return "uncertain";
    }
    return "?";
}

}  // namespace swiper
