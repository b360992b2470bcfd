#include "advknap/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>

namespace advknap {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

// Floor division for a positive divisor.
i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

std::string to_string128(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    std::string s;
    while (x != 0) {
        int digit = static_cast<int>(x % 10);
        s.insert(s.begin(), static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        x /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
}

i128 pow10(int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rational Rational::from_wide(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

std::int64_t Rational::floor() const { return static_cast<std::int64_t>(floor_div(num_, den_)); }

std::int64_t Rational::ceil() const { return static_cast<std::int64_t>(-floor_div(-static_cast<i128>(num_), den_)); }

std::int64_t Rational::round() const {
    i128 twice = 2 * static_cast<i128>(num_);
    if (num_ >= 0) return static_cast<std::int64_t>(floor_div(twice + den_, 2 * static_cast<i128>(den_)));
    return static_cast<std::int64_t>(-floor_div(-twice + den_, 2 * static_cast<i128>(den_)));
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) return *this = from_wide(static_cast<i128>(num_) + rhs.num_, den_);
    return *this = from_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                             static_cast<i128>(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    i128 g1 = gcd128(num_, rhs.den_);
    i128 g2 = gcd128(rhs.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return *this = from_wide((num_ / g1) * (rhs.num_ / g2), (den_ / g2) * (rhs.den_ / g1));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= from_wide(rhs.den_, rhs.num_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() { return std::invalid_argument("not a number: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational p = parse(text.substr(0, slash));
        Rational q = parse(text.substr(slash + 1));
        if (q == Rational(0)) throw bad();
        return p / q;
    }

    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') neg = text[pos++] == '-';

    i128 mantissa = 0;
    int scale = 0;
    bool digits = false, dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            digits = true;
            if (mantissa > (static_cast<i128>(1) << 100)) throw std::overflow_error("rational overflow");
            mantissa = mantissa * 10 + (c - '0');
            if (dot) ++scale;
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!digits) throw bad();

    int exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') throw bad();
        ++pos;
        auto tail = text.substr(pos);
        if (!tail.empty() && tail.front() == '+') tail.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
        if (ec != std::errc() || ptr != tail.data() + tail.size()) throw bad();
    }

    int shift = exponent - scale;
    if (shift > 36 || shift < -36) throw std::overflow_error("rational overflow");
    if (neg) mantissa = -mantissa;
    if (shift >= 0) return from_wide(mantissa * pow10(shift), 1);
    return from_wide(mantissa, pow10(-shift));
}

Rational Rational::from_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::invalid_argument("cannot format double");
    return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int places) const {
    if (places < 0 || places > 18) throw std::invalid_argument("decimal places out of range");
    i128 scale = pow10(places);
    i128 scaled = static_cast<i128>(num_) * scale;
    i128 absq = (abs128(scaled) * 2 + den_) / (2 * static_cast<i128>(den_));
    bool neg = num_ < 0 && absq != 0;
    std::string digits = to_string128(absq);
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    return neg ? "-" + digits : digits;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace advknap
