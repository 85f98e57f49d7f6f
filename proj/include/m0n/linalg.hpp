#pragma once

#include "m0n/rational.hpp"

#include <vector>

namespace m0n {

using IntVec = std::vector<Int>;

// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const IntVec& v);

// v divided by its content.  Keeps orientation (positive scaling only);
// returns the zero vector unchanged.
IntVec primitive(IntVec v);

// primitive(v) with the first nonzero entry made positive; identifies v
// with -v, for hyperplane (span) comparisons.
IntVec sign_normalized(IntVec v);

Int dot(const IntVec& x, const IntVec& y);

bool is_zero_vec(const IntVec& v);

// Rank of the row set, by fraction-free elimination.
int rank(std::vector<IntVec> rows);

// Whether v lies in the rational span of the rows.
bool in_span(const IntVec& v, const std::vector<IntVec>& rows);

// Whether the two row sets span the same rational subspace.
bool same_span(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

// Deterministic basis of {x in Q^dim : <row, x> = 0 for every row}, as
// primitive integer vectors, one per free column of the reduced system in
// ascending column order.
std::vector<IntVec> nullspace_basis(const std::vector<IntVec>& rows, int dim);

// Clears denominators: the primitive integer vector pointing the same way.
IntVec rational_to_primitive(const std::vector<Rational>& v);

std::vector<Rational> to_rational(const IntVec& v);

}  // namespace m0n
