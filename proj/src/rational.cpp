#include "m0n/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace m0n {

namespace {

// Parses an integer literal: optional sign (only if allow_sign), then one
// or more decimal digits.  Throws std::invalid_argument otherwise.
Int parse_integer(const std::string& text, bool allow_sign, const std::string& whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("invalid rational literal: '" + whole + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("invalid rational literal: '" + whole + "'");
        }
    }
    Int value(text.substr(pos));
    if (negative) value = -value;
    return value;
}

}  // namespace

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text, true, text));
    }
    if (text.find('/', slash + 1) != std::string::npos) {
        throw std::invalid_argument("invalid rational literal: '" + text + "'");
    }
    Int num = parse_integer(text.substr(0, slash), true, text);
    Int den = parse_integer(text.substr(slash + 1), false, text);
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational out(*this);
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("division by zero rational");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
    return out << value.str();
}

Int floor_int(const Rational& value) {
    Int q = value.num() / value.den();
    if (value.num() < 0 && value.num() % value.den() != 0) --q;
    return q;
}

}  // namespace m0n
