#ifndef MULTICONF_CORE_RATIONAL_HPP
#define MULTICONF_CORE_RATIONAL_HPP

#include <cstdint>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace multiconf {

/// Exact non-negative rational for percentage / average bounds.
/// Comparisons are done by integer cross-multiplication, never floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0) throw std::invalid_argument("rational denominator must be positive");
        normalize();
    }

    /// Converts a decimal literal (as parsed from JSON) to an exact rational.
    /// Exact for up to 9 decimal places, which covers every bound in practice.
    static Rational from_decimal(double x) {
        if (!(x >= 0.0) || x > 1e9) throw std::invalid_argument("rational bound out of range");
        return Rational(static_cast<std::int64_t>(std::llround(x * 1e9)), 1000000000LL);
    }

    void normalize() {
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    // this * k <= t
    bool times_leq(std::int64_t k, std::int64_t t) const {
        return static_cast<__int128>(num) * k <= static_cast<__int128>(t) * den;
    }
    // this * k >= t
    bool times_geq(std::int64_t k, std::int64_t t) const {
        return static_cast<__int128>(num) * k >= static_cast<__int128>(t) * den;
    }

    /// Smallest integer t with t >= this * k.
    std::int64_t ceil_times(std::int64_t k) const {
        const __int128 p = static_cast<__int128>(num) * k;
        return static_cast<std::int64_t>((p + den - 1) / den);
    }
    /// Largest integer t with t <= this * k.
    std::int64_t floor_times(std::int64_t k) const {
        return static_cast<std::int64_t>(static_cast<__int128>(num) * k / den);
    }

    bool operator<=(const Rational& o) const {
        return static_cast<__int128>(num) * o.den <= static_cast<__int128>(o.num) * den;
    }
    bool operator==(const Rational& o) const {
        return num == o.num && den == o.den;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

} // namespace multiconf

#endif
