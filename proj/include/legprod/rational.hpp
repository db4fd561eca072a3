#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace legprod {

// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "p/q" or the integer shorthand "p". Throws Error(ParseError).
    static Rational parse(std::string_view text);

    std::string str() const;  // "p/q", lowest terms, q > 0
    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    Rational abs() const { return Rational(::abs(value_)); }
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const;

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
    mpq_class value_;
};

}  // namespace legprod

template <>
struct std::hash<legprod::Rational> {
    std::size_t operator()(const legprod::Rational& r) const { return r.hash(); }
};
