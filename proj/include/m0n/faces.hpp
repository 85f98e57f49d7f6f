#pragma once

#include "m0n/cone.hpp"
#include "m0n/divisor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace m0n {

// The intersection pairing with the vital curve of p, written as an integer
// linear form over the stored coordinates r_2..r_{floor(n/2)} (reflection
// folded in) and reduced to primitive with orientation preserved.
IntVec vital_form(int n, const VitalPartition& p);

// vital_form of the partition (1, 1, i, n-2-i).  Requires 1 <= i <= n-3.
// On stored coordinates, for i <= floor(n/2)-2 this is the recurrence form
// r_2 + 2 r_{i+1} - r_i - r_{i+2}.
IntVec special_hyperplane(int n, int i);

// Vertex p_k of the F-simplex:
//   r_i = (2/(n-1)) * C(i,2)                       for i <= k,
//   r_i = (2/(n-1)) * (C(i,2) - (i-k)(n-1)/2)      for i > k.
// Requires 1 <= k <= floor(n/2).
SymmetricDivisor f_simplex_vertex(int n, int k);

// Least k in 2..floor(n/2) with f_simplex_vertex(n, k) F-nef.
int pk_fnef_threshold(int n);

// Primitive integer direction vector of a divisor (coordinates r_2..r_m).
IntVec ambient_from_divisor(const SymmetricDivisor& divisor);

// Divisor with the given integer stored coefficients.
SymmetricDivisor divisor_from_ambient(int n, const IntVec& coords);

struct SubspaceBasis {
    int ambient_dim = 0;
    std::vector<IntVec> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

// Deterministic basis of the solution space of V_1 = ... = V_{k-2} = 0 in
// coordinates r_2..r_m: the binomial vector (C(2,2), ..., C(k,2), 0, ..., 0)
// followed by the unit vectors e_{k+1}..e_m.  Requires 2 <= k <= floor(n/2).
SubspaceBasis face_subspace(int n, int k);

// The form restricted to the subspace: one dot product per basis vector,
// reduced to primitive (orientation preserved).
IntVec restrict_form(const IntVec& form, const SubspaceBasis& basis);

struct FacetInfo {
    // Reduced-coordinate primitive form.
    IntVec form;
    // Every partition whose restricted vital form equals this form up to
    // positive scaling, in lexicographic order.
    std::vector<VitalPartition> labels;
};

struct FaceReport {
    int n = 0;
    // Slice index for F_k faces; -1 for divisor-derived faces.
    int k = -1;
    SubspaceBasis basis;
    // Dimension of the sliced cone (inside the subspace) and its projective
    // dimension (one less).
    int cone_dim = 0;
    int proj_dim = 0;
    bool pointed = true;
    // Number of distinct nonzero restricted inequality forms.
    int halfspace_count = 0;
    // Facet-inducing forms, sorted by form.
    std::vector<FacetInfo> facets;
    // Extreme rays mapped back to ambient coordinates, primitive, sorted.
    std::vector<IntVec> vertices;
    // Partitions whose forms vanish identically on the subspace.
    std::vector<VitalPartition> contracted;
};

// Facets and extreme rays of the Fulton cone sliced by V_1..V_{k-2} = 0.
FaceReport facets_of_face(int n, int k);

// The smallest face of the Fulton cone containing an F-nef divisor: slice by
// the common zero space of all vital forms the divisor contracts.  Throws
// std::domain_error if the divisor is not F-nef.
FaceReport minimal_face_of(const SymmetricDivisor& divisor);

// True iff facets_of_face(n, k) is a pointed simplicial cone whose extreme
// rays are exactly the canonical vectors of p_k..p_{floor(n/2)}.
bool stable_simplex_check(int n, int k);

// Preferred display name of a facet: "V_i" when one of its labels is the
// special partition (1,1,i,n-2-i), otherwise "V(a,b,c,d)" of its first label.
std::string facet_label(int n, const FacetInfo& facet);

// Display name of a single partition in the same style.
std::string partition_label(int n, const VitalPartition& p);

// One row of the embedded reference table of facet labels, as partitions.
struct TableRow {
    int n = 0;
    // Facet labels of F_{floor(n/2)-1}.
    std::vector<VitalPartition> top;
    // Facet count and labels of F_{floor(n/2)-2}; absent for n = 6, 7 where
    // that face does not exist.
    std::optional<int> second_count;
    std::vector<VitalPartition> second;
};

// The reference row for n: explicit data for 6 <= n <= 13, the stabilized
// pattern {V_{m-2}, V_{m-1}} / {V_{m-3}, V_{m-2}, V_{m-1}} for n >= 14.
TableRow expected_table_row(int n);

struct TableCheck {
    TableRow expected;
    bool top_match = false;
    bool second_match = false;
    FaceReport top_report;
    std::optional<FaceReport> second_report;
    bool ok() const { return top_match && second_match; }
};

// Computes both faces and compares their facet label sets with the
// reference row (bijection between printed partitions and facets).
TableCheck check_table_row(int n);

}  // namespace m0n
