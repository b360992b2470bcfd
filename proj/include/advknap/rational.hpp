#pragma once

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace advknap {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Arithmetic is carried
/// out in 128 bits and throws std::overflow_error if the normalized result
/// does not fit back into 64 bits, so a comparison is never silently wrong.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    /// Nearest integer, halves rounded away from zero.
    std::int64_t round() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Parses "7", "-3/4", "1.25" or "2.5e-3" exactly.
    static Rational parse(std::string_view text);
    /// Exact value of the shortest decimal that round-trips to `value`.
    static Rational from_double(double value);

    /// "p/q", or "p" when integral.
    std::string str() const;
    /// Decimal text rounded half away from zero to `places` fractional digits.
    std::string decimal(int places = 6) const;

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace advknap
