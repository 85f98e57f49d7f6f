#pragma once

#include "m0n/divisor.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace m0n {

// Largest k such that alpha <= 2/(k+1), capped at floor(n/2):
// min(floor(n/2), floor(2/alpha) - 1).  Requires 2/(n-1) <= alpha <= 1.
int threshold_k(int n, const Rational& alpha);

// The interpolation divisor at weight alpha, for 2/(n-1) <= alpha <= 1.
// With k = threshold_k(n, alpha) its stored coefficients are
//   r_j = C(j,2)*alpha - j(j-1)/(n-1)    for j <= k,
//   r_j = alpha + (j-2) - j(j-1)/(n-1)   for j > k.
// At alpha = 2/(n-1) this is the zero divisor.
SymmetricDivisor a_alpha(int n, const Rational& alpha);

// canonical_class(n) + alpha*boundary(n) - a_alpha(n, alpha).  Every
// coefficient is >= 0, and stored coefficients vanish outside 3..k.
SymmetricDivisor exceptional_divisor(int n, const Rational& alpha);

enum class ModelKind { Hassett, GitQuotient };

// Names the birational model attached to a weight alpha, together with the
// half-open weight interval (alpha_low, alpha_high] the label occupies.
struct ModelLabel {
    ModelKind kind = ModelKind::Hassett;
    // Hassett weight denominator (all marked points weighted 1/k); 0 for the
    // GIT quotient.
    int k = 0;
    Rational alpha_low;
    Rational alpha_high;

    // "1/k ×n" for Hassett labels, "GIT (P^1)^n//SL_2" for the quotient.
    std::string str(int n) const;
};

// Requires 2/(n-1) < alpha <= 1.  Weights in (2/(k+2), 2/(k+1)] for
// k = 1..floor((n-1)/2) get the Hassett label with weight 1/k; smaller
// weights get the GIT quotient.  For odd n the lowest Hassett interval and
// the top of the quotient range name the same space; the Hassett label is
// returned there, so the reported intervals tile the domain disjointly.
ModelLabel model_for_alpha(int n, const Rational& alpha);

// Exact convex combination of the two breakpoint divisors enclosing alpha:
// a_alpha(n, alpha) == t * a_alpha(n, alpha_low) + (1-t) * a_alpha(n, alpha_high)
// coefficient-wise, with alpha_low = 2/(k+2), alpha_high = 2/(k+1), t in [0,1].
struct ConvexDecomposition {
    int k = 0;
    Rational t;
    Rational alpha_low;
    Rational alpha_high;
};

// Requires 2/(n-1) <= alpha <= 1.
ConvexDecomposition convex_decompose(int n, const Rational& alpha);

// Piecewise coefficient function of a_alpha(n, 2/(k+1)), extended to the
// full index range 0 <= j <= n:
//   h(j) = f(j)      for j <= k,
//   h(j) = g(j)      for k < j < n-k,
//   h(j) = f(n-j)    for j >= n-k,
// where f(j) = C(j,2)*2/(k+1) - j(j-1)/(n-1), g(j) = 2/(k+1) + (j-2) - j(j-1)/(n-1).
// Agrees with coefficient(a_alpha(n, 2/(k+1)), j) for 1 <= j <= n-1.
Rational h_value(int n, int k, int j);

// h(a+b) + h(a+c) + h(a+d) - h(a) - h(b) - h(c) - h(d): the intersection of
// a_alpha(n, 2/(k+1)) with the vital curve of the partition.
Rational h_sum(int n, int k, const VitalPartition& p);

// Classifies (p, k) into one of 15 mutually exclusive regime cases that
// determine which branch of h each argument lands in.  Returns 1..15 and
// throws std::logic_error if the conditions ever fail to single out exactly
// one case.
int classify_case(int n, int k, const VitalPartition& p);

// Closed-form value of h_sum for a classified case.  Pass the id returned by
// classify_case.  Case 15 cannot occur for k < n/2 and throws
// std::domain_error.
Rational case_closed_form(int n, int k, const VitalPartition& p, int case_id);

// Exhaustive cross-check over k = 2..floor(n/2)-1 and every partition:
// h_sum equals the classified closed form, is >= 0, vanishes exactly when
// a+b+c <= k, and case 15 never occurs.
struct LemmaReport {
    long long checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

LemmaReport verify_lemma(int n);

// Four closed-form bounds on the scale factor c at alpha = 2/(k+1), in the
// order {lower, upper, lower, upper}; the first pair comes from the small
// coefficient indices, the second from the extreme ones.
std::array<Rational, 4> c_interval_bounds(int n, int k);

// Intersection of the four closed-form bounds: [max of lowers, min of
// uppers], or nullopt when empty.  Requires n >= 6, 2 <= k <= floor(n/2).
std::optional<std::pair<Rational, Rational>> c_interval(int n, int k);

// Exact feasibility interval {c : 0 <= c*A_j - K_j <= 1 for every stored
// coefficient index j}, with A = a_alpha(n, 2/(k+1)) and K the canonical
// class; computed by intersecting the per-index affine conditions.
std::optional<std::pair<Rational, Rational>> direct_c_feasible(int n, int k);

}  // namespace m0n
