#include "m0n/divisor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace m0n {

namespace {

void require_n(int n) {
    if (n < 4) throw std::domain_error("number of marked points must be at least 4");
}

}  // namespace

VitalPartition VitalPartition::sorted(int p, int q, int r, int s) {
    int parts[4] = {p, q, r, s};
    std::sort(parts, parts + 4);
    return VitalPartition{parts[0], parts[1], parts[2], parts[3]};
}

void VitalPartition::validate(int n) const {
    if (a < 1 || a > b || b > c || c > d) {
        throw std::domain_error("partition parts must satisfy 1 <= a <= b <= c <= d");
    }
    if (sum() != n) {
        throw std::domain_error("partition parts must sum to the number of marked points");
    }
}

std::string VitalPartition::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + ")";
}

std::vector<VitalPartition> enumerate_vital_partitions(int n) {
    require_n(n);
    std::vector<VitalPartition> out;
    for (int a = 1; 4 * a <= n; ++a) {
        for (int b = a; a + 3 * b <= n; ++b) {
            for (int c = b; a + b + 2 * c <= n; ++c) {
                out.push_back(VitalPartition{a, b, c, n - a - b - c});
            }
        }
    }
    return out;
}

SymmetricDivisor::SymmetricDivisor(int n) : n_(n) {
    require_n(n);
    coeffs_.assign(static_cast<std::size_t>(n / 2 - 1), Rational(0));
}

SymmetricDivisor::SymmetricDivisor(int n, std::vector<Rational> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
    require_n(n);
    if (coeffs_.size() != static_cast<std::size_t>(n / 2 - 1)) {
        throw std::invalid_argument("expected one coefficient per index 2..floor(n/2)");
    }
}

Rational SymmetricDivisor::coefficient(int i) const {
    if (i < 1 || i > n_ - 1) {
        throw std::out_of_range("coefficient index outside 1..n-1");
    }
    const int j = std::min(i, n_ - i);
    if (j <= 1) return Rational(0);
    return coeffs_[static_cast<std::size_t>(j - 2)];
}

void SymmetricDivisor::set_coefficient(int j, Rational value) {
    if (j < 2 || j > n_ / 2) {
        throw std::out_of_range("stored coefficient index outside 2..floor(n/2)");
    }
    coeffs_[static_cast<std::size_t>(j - 2)] = std::move(value);
}

SymmetricDivisor& SymmetricDivisor::operator+=(const SymmetricDivisor& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("divisor arithmetic requires equal n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

SymmetricDivisor& SymmetricDivisor::operator-=(const SymmetricDivisor& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("divisor arithmetic requires equal n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

SymmetricDivisor& SymmetricDivisor::operator*=(const Rational& scalar) {
    for (auto& coeff : coeffs_) coeff *= scalar;
    return *this;
}

std::string SymmetricDivisor::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].str();
    }
    out += ")";
    return out;
}

SymmetricDivisor canonical_class(int n) {
    require_n(n);
    SymmetricDivisor out(n);
    for (int j = 2; j <= n / 2; ++j) {
        out.set_coefficient(
            j, Rational(Int((j - 2)) * (n - 1) - Int(j) * (j - 1), Int(n - 1)));
    }
    return out;
}

SymmetricDivisor boundary(int n) {
    require_n(n);
    SymmetricDivisor out(n);
    for (int j = 2; j <= n / 2; ++j) out.set_coefficient(j, Rational(1));
    return out;
}

Rational intersect_vital(const SymmetricDivisor& divisor, const VitalPartition& part) {
    part.validate(divisor.n());
    Rational value = divisor.coefficient(part.a + part.b);
    value += divisor.coefficient(part.a + part.c);
    value += divisor.coefficient(part.a + part.d);
    value -= divisor.coefficient(part.a);
    value -= divisor.coefficient(part.b);
    value -= divisor.coefficient(part.c);
    value -= divisor.coefficient(part.d);
    return value;
}

FNefResult f_nef_report(const SymmetricDivisor& divisor) {
    FNefResult result;
    bool first = true;
    for (const VitalPartition& part : enumerate_vital_partitions(divisor.n())) {
        const Rational value = intersect_vital(divisor, part);
        if (first || value < result.min_value) {
            result.min_value = value;
            result.minimizer = part;
            first = false;
        }
        if (value.is_zero()) result.contracted.push_back(part);
    }
    result.f_nef = result.min_value.sign() >= 0;
    return result;
}

bool is_f_nef(const SymmetricDivisor& divisor) { return f_nef_report(divisor).f_nef; }

}  // namespace m0n
