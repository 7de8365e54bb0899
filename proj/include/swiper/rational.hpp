#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swiper {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. Every weight, threshold and derived parameter in
/// the toolkit is one of these; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);  // truncates toward zero
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) {
        --q;
    }
    return q;
}

inline BigInt rational_ceil(const Rational& r) { return -rational_floor(-r); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    return Rational(num) / Rational(den);
}

namespace detail {

inline BigInt pow10(std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 10;
    return r;
}

inline std::string_view trim(std::string_view text) {
    auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    return text;
}

inline std::string_view take_digits(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
        ++pos;
    }
    return text.substr(start, pos - start);
}

// Explicit base-10 accumulation: BigInt's string constructor would treat a
// leading 0 as an octal prefix.
inline BigInt digits_to_bigint(std::string_view digits) {
    BigInt value = 0;
    for (char ch : digits) {
        value *= 10;
        value += ch - '0';
    }
    return value;
}

}  // namespace detail

/// Parses a decimal literal ("0.25", "8.47e8") or a fraction ("22/7") into
/// the exact rational it denotes. A decimal never rounds: "0.1" is 1/10.
inline Rational parse_rational(std::string_view text) {
    using detail::take_digits;
    const std::string_view full = detail::trim(text);
    std::string_view s = full;
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational literal: '" + std::string(full) + "'");
    };

    if (s.empty()) fail();
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }

    const std::string_view int_digits = take_digits(s, pos);
    if (int_digits.empty()) fail();

    // fraction form p/q
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        const std::string_view den_digits = take_digits(s, pos);
        if (den_digits.empty() || pos != s.size()) fail();
        const BigInt den = detail::digits_to_bigint(den_digits);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in literal: '" + std::string(full) + "'");
        }
        Rational value = make_rational(detail::digits_to_bigint(int_digits), den);
        return negative ? -value : value;
    }

    // decimal form: digits [. digits] [e[+-]digits]
    std::string_view frac_digits;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        frac_digits = take_digits(s, pos);
    }
    long long exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            exp_negative = s[pos] == '-';
            ++pos;
        }
        const std::string_view exp_digits = take_digits(s, pos);
        if (exp_digits.empty() || exp_digits.size() > 6) fail();
        exponent = std::stoll(std::string(exp_digits));
        if (exp_negative) exponent = -exponent;
    }
    if (pos != s.size()) fail();

    BigInt mantissa = detail::digits_to_bigint(int_digits) * detail::pow10(frac_digits.size()) +
                      detail::digits_to_bigint(frac_digits);
    BigInt den = detail::pow10(frac_digits.size());
    if (exponent >= 0) {
        mantissa *= detail::pow10(static_cast<std::size_t>(exponent));
    } else {
        den *= detail::pow10(static_cast<std::size_t>(-exponent));
    }
    Rational value = make_rational(mantissa, den);
    return negative ? -value : value;
}

/// parse_rational restricted to weights: rejects negative values.
inline Rational parse_weight(std::string_view text) {
    Rational value = parse_rational(text);
    if (value < 0) {
        throw std::invalid_argument("negative weight: '" + std::string(detail::trim(text)) + "'");
    }
    return value;
}

/// Canonical text form: "p/q", or just "p" for integers. Round-trips
/// through parse_rational exactly.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Exact decimal rendering with `digits` fractional places, round half up.
inline std::string to_decimal_string(const Rational& r, unsigned digits) {
    const bool negative = r < 0;
    const Rational mag = negative ? Rational(-r) : r;
    const BigInt scale = detail::pow10(digits);
    const BigInt scaled = rational_floor(mag * scale + Rational(1, 2));
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    if (negative && scaled != 0) out.insert(out.begin(), '-');
    return out;
}

/// True when the exact decimal expansion terminates (denominator 2^a 5^b).
inline bool has_terminating_decimal(const Rational& r) {
    BigInt d = denominator(r);
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    return d == 1;
}

/// Shortest exact decimal if one exists, otherwise the "p/q" form.
/// Used for plot-ready CSV columns.
inline std::string to_csv_number(const Rational& r) {
    if (!has_terminating_decimal(r)) {
        return to_string(r);
    }
    BigInt d = denominator(r);
    unsigned digits = 0;
    while (d % 2 == 0) { d /= 2; ++digits; }
    unsigned fives = 0;
    while (d % 5 == 0) { d /= 5; ++fives; }
    digits = digits > fives ? digits : fives;
    return to_decimal_string(r, digits);
}

}  // namespace swiper
