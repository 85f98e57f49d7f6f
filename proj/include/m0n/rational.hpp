#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace m0n {

using Int = boost::multiprecision::cpp_int;

// Exact rational number over arbitrary-precision integers.
//
// Invariants: gcd(num, den) == 1 and den >= 1.  Every arithmetic result is
// renormalized, so equality is plain field-wise comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
    Rational(Int value) : num_(std::move(value)), den_(1) {}
    // Throws std::domain_error if den == 0.
    Rational(Int num, Int den);

    // Accepts "p" or "p/q" with an optional leading sign on p; q must be a
    // positive integer literal.  Anything else (decimals, spaces, empty
    // fields) throws std::invalid_argument.
    static Rational parse(const std::string& text);

    // Renders "p" when den == 1, otherwise "p/q".
    std::string str() const;

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    // -1, 0, or +1.
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    // Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const Int left = lhs.num_ * rhs.den_;
        const Int right = rhs.num_ * lhs.den_;
        if (left < right) return std::strong_ordering::less;
        if (left > right) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& out, const Rational& value);

private:
    void normalize();

    Int num_;
    Int den_;
};

// floor(value): the greatest integer <= value.
Int floor_int(const Rational& value);

}  // namespace m0n
