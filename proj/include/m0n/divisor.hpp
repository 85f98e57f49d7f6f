#pragma once

#include "m0n/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace m0n {

// A partition of n into four positive parts a <= b <= c <= d.  Each such
// partition labels a vital curve; the intersection pairing against symmetric
// divisor classes is computed by intersect_vital below.
struct VitalPartition {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    // Builds the partition from four parts in any order.
    static VitalPartition sorted(int p, int q, int r, int s);

    int sum() const { return a + b + c + d; }

    // Throws std::domain_error unless 1 <= a <= b <= c <= d and sum == n.
    void validate(int n) const;

    std::string str() const;

    friend auto operator<=>(const VitalPartition&, const VitalPartition&) = default;
};

// All vital partitions of n in lexicographic order.  Requires n >= 4.
std::vector<VitalPartition> enumerate_vital_partitions(int n);

// An S_n-symmetric divisor class on the moduli space of stable n-pointed
// rational curves, stored by its coefficients r_2..r_m (m = floor(n/2)) on
// the symmetrized boundary basis.  Coefficients for indices above m are
// read through the reflection r_i = r_{n-i}; r_1 = r_{n-1} = 0 always.
class SymmetricDivisor {
public:
    // Zero divisor.  Requires n >= 4.
    explicit SymmetricDivisor(int n);
    // Requires coeffs.size() == floor(n/2) - 1 (entries r_2..r_m).
    SymmetricDivisor(int n, std::vector<Rational> coeffs);

    int n() const { return n_; }
    // Number of stored coefficients, m - 1.
    int size() const { return static_cast<int>(coeffs_.size()); }

    // Coefficient r_i for any 1 <= i <= n-1, folded through the reflection.
    // Throws std::out_of_range outside that range.
    Rational coefficient(int i) const;

    // Stored coefficients r_2..r_m.
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Sets r_j for 2 <= j <= m (stored range only; throws otherwise).
    void set_coefficient(int j, Rational value);

    SymmetricDivisor& operator+=(const SymmetricDivisor& rhs);
    SymmetricDivisor& operator-=(const SymmetricDivisor& rhs);
    SymmetricDivisor& operator*=(const Rational& scalar);

    friend SymmetricDivisor operator+(SymmetricDivisor lhs, const SymmetricDivisor& rhs) {
        return lhs += rhs;
    }
    friend SymmetricDivisor operator-(SymmetricDivisor lhs, const SymmetricDivisor& rhs) {
        return lhs -= rhs;
    }
    friend SymmetricDivisor operator*(SymmetricDivisor lhs, const Rational& scalar) {
        return lhs *= scalar;
    }
    friend SymmetricDivisor operator*(const Rational& scalar, SymmetricDivisor rhs) {
        return rhs *= scalar;
    }

    friend bool operator==(const SymmetricDivisor&, const SymmetricDivisor&) = default;

    // "(r2, r3, ..., rm)"
    std::string str() const;

private:
    int n_;
    std::vector<Rational> coeffs_;
};

// The canonical class: r_j = ((j-2)(n-1) - j(j-1)) / (n-1).
SymmetricDivisor canonical_class(int n);

// The total boundary: every coefficient 1.
SymmetricDivisor boundary(int n);

// Intersection number of the divisor with the vital curve labeled by the
// partition: r_{a+b} + r_{a+c} + r_{a+d} - r_a - r_b - r_c - r_d.
Rational intersect_vital(const SymmetricDivisor& divisor, const VitalPartition& part);

// Outcome of scanning a divisor against every vital curve.
struct FNefResult {
    bool f_nef = false;
    // Minimum intersection value over all vital curves.
    Rational min_value;
    // Lexicographically first partition attaining the minimum.
    VitalPartition minimizer;
    // All partitions with intersection exactly zero.
    std::vector<VitalPartition> contracted;
};

FNefResult f_nef_report(const SymmetricDivisor& divisor);

bool is_f_nef(const SymmetricDivisor& divisor);

}  // namespace m0n
