#pragma once

#include "m0n/linalg.hpp"

#include <vector>

namespace m0n {

// V-description of a polyhedral cone computed from an H-description, with
// per-input-halfspace diagnostics.
struct ConeDescription {
    int ambient_dim = 0;
    // Dimension of the cone: rank of rays plus lineality.
    int cone_dim = 0;
    // Extreme rays modulo lineality, primitive, sorted lexicographically.
    std::vector<IntVec> rays;
    // Deterministic primitive basis of the lineality space.
    std::vector<IntVec> lineality;
    // incidence[i]: ascending ray indices on which halfspace i is tight.
    std::vector<std::vector<int>> incidence;
    // facet[i]: the tight set of halfspace i spans dimension cone_dim - 1.
    std::vector<char> facet;
    // implied_equality[i]: the whole cone lies inside {h_i = 0}.
    std::vector<char> implied_equality;
    // duplicate[i]: h_i repeats an earlier halfspace up to positive scaling;
    // only the first occurrence can carry the facet flag.
    std::vector<char> duplicate;

    bool pointed() const { return lineality.empty(); }
};

// Extreme rays and lineality of {x : <h, x> >= 0 for every h}, by the double
// description method in exact integer arithmetic.  Halfspaces are processed
// in a fixed internal order (ascending support size, then lexicographic) for
// determinism; all reported data refers to the input order.
ConeDescription double_description(int dim, const std::vector<IntVec>& halfspaces);

// The polar cone {y : <y, r> >= 0 for every r}: its extreme rays are the
// irredundant inequalities of cone(rays), and its lineality is the
// orthogonal complement of their span.
ConeDescription polar_cone(int dim, const std::vector<IntVec>& rays);

}  // namespace m0n
