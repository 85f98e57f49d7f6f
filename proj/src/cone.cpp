#include "m0n/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace m0n {

namespace {

// Fixed-width bitset over halfspace indices.
class TightSet {
public:
    explicit TightSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }

    bool test(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & std::uint64_t(1);
    }

    static TightSet intersection(const TightSet& a, const TightSet& b) {
        TightSet out;
        out.words_.resize(a.words_.size());
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            out.words_[w] = a.words_[w] & b.words_[w];
        }
        return out;
    }

    // True if every bit of this set is also set in other.
    bool subset_of(const TightSet& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & ~other.words_[w]) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVec v;
    TightSet tight;
};

IntVec negated(IntVec v) {
    for (Int& x : v) x = -x;
    return v;
}

// v*s - w*t, reduced to primitive.
IntVec combine(const IntVec& v, const Int& s, const IntVec& w, const Int& t) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s - w[i] * t;
    return primitive(std::move(out));
}

std::size_t support_size(const IntVec& v) {
    std::size_t count = 0;
    for (const Int& x : v) {
        if (x != 0) ++count;
    }
    return count;
}

}  // namespace

ConeDescription double_description(int dim, const std::vector<IntVec>& halfspaces) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    for (const IntVec& h : halfspaces) {
        if (static_cast<int>(h.size()) != dim) {
            throw std::invalid_argument("halfspace length does not match dimension");
        }
    }
    const std::size_t count = halfspaces.size();

    // Deterministic processing order: sparsest first, then lexicographic,
    // then input position.
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const std::size_t sa = support_size(halfspaces[a]);
        const std::size_t sb = support_size(halfspaces[b]);
        if (sa != sb) return sa < sb;
        if (halfspaces[a] != halfspaces[b]) return halfspaces[a] < halfspaces[b];
        return a < b;
    });

    std::vector<IntVec> lineality;
    for (int i = 0; i < dim; ++i) {
        IntVec e(static_cast<std::size_t>(dim), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<Ray> rays;
    std::vector<std::size_t> processed;

    // Exact tight set of a ray over the processed halfspaces (current one
    // included once pushed onto `processed`).
    auto evaluate_tight = [&](const IntVec& v) {
        TightSet t(count);
        for (std::size_t idx : processed) {
            if (dot(halfspaces[idx], v) == 0) t.set(idx);
        }
        return t;
    };

    for (std::size_t idx : order) {
        const IntVec& h = halfspaces[idx];
        std::size_t lin_hit = lineality.size();
        Int lin_val = 0;
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            lin_val = dot(h, lineality[i]);
            if (lin_val != 0) {
                lin_hit = i;
                break;
            }
        }
        processed.push_back(idx);

        if (lin_hit != lineality.size()) {
            // The constraint slices the lineality space: one basis vector
            // becomes a ray, the rest are projected into {h = 0}.
            IntVec w = lineality[lin_hit];
            if (lin_val < 0) w = negated(std::move(w));
            const Int s = dot(h, w);
            std::vector<IntVec> next_lineality;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == lin_hit) continue;
                next_lineality.push_back(combine(lineality[i], s, w, dot(h, lineality[i])));
            }
            lineality = std::move(next_lineality);
            for (Ray& r : rays) {
                r.v = combine(r.v, s, w, dot(h, r.v));
                r.tight = evaluate_tight(r.v);
            }
            TightSet w_tight = evaluate_tight(w);
            rays.push_back(Ray{std::move(w), std::move(w_tight)});
        } else {
            std::vector<Int> values(rays.size());
            bool any_negative = false;
            for (std::size_t i = 0; i < rays.size(); ++i) {
                values[i] = dot(h, rays[i].v);
                if (values[i] < 0) any_negative = true;
                if (values[i] == 0) rays[i].tight.set(idx);
            }
            if (any_negative) {
                std::vector<Ray> next;
                for (std::size_t i = 0; i < rays.size(); ++i) {
                    if (values[i] >= 0) next.push_back(rays[i]);
                }
                for (std::size_t p = 0; p < rays.size(); ++p) {
                    if (values[p] <= 0) continue;
                    for (std::size_t q = 0; q < rays.size(); ++q) {
                        if (values[q] >= 0) continue;
                        const TightSet common =
                            TightSet::intersection(rays[p].tight, rays[q].tight);
                        bool adjacent = true;
                        for (std::size_t r = 0; r < rays.size(); ++r) {
                            if (r == p || r == q) continue;
                            if (common.subset_of(rays[r].tight)) {
                                adjacent = false;
                                break;
                            }
                        }
                        if (!adjacent) continue;
                        // values[p] * rays[q] - values[q] * rays[p]: a conic
                        // combination lying on {h = 0}.
                        IntVec v = combine(rays[q].v, values[p], rays[p].v, values[q]);
                        TightSet tight = evaluate_tight(v);
                        next.push_back(Ray{std::move(v), std::move(tight)});
                    }
                }
                rays = std::move(next);
            }
        }

        // Defensive: drop exact duplicates (primitive vectors compare equal).
        std::set<IntVec> seen;
        std::vector<Ray> unique_rays;
        for (Ray& r : rays) {
            if (seen.insert(r.v).second) unique_rays.push_back(std::move(r));
        }
        rays = std::move(unique_rays);
    }

    ConeDescription out;
    out.ambient_dim = dim;
    // Canonical deterministic lineality basis.
    out.lineality = nullspace_basis(halfspaces, dim);

    std::vector<IntVec> final_rays;
    final_rays.reserve(rays.size());
    for (Ray& r : rays) final_rays.push_back(std::move(r.v));
    std::sort(final_rays.begin(), final_rays.end());
    out.rays = std::move(final_rays);

    std::vector<IntVec> span_rows = out.rays;
    span_rows.insert(span_rows.end(), out.lineality.begin(), out.lineality.end());
    out.cone_dim = rank(span_rows);

    out.incidence.resize(count);
    out.facet.assign(count, 0);
    out.implied_equality.assign(count, 0);
    out.duplicate.assign(count, 0);
    std::vector<IntVec> canon;
    canon.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        canon.push_back(primitive(halfspaces[i]));
        for (std::size_t j = 0; j < i; ++j) {
            if (canon[j] == canon[i]) {
                out.duplicate[i] = 1;
                break;
            }
        }
        std::vector<IntVec> tight_rows;
        for (std::size_t r = 0; r < out.rays.size(); ++r) {
            if (dot(halfspaces[i], out.rays[r]) == 0) {
                out.incidence[i].push_back(static_cast<int>(r));
                tight_rows.push_back(out.rays[r]);
            }
        }
        bool lineality_orthogonal = true;
        for (const IntVec& l : out.lineality) {
            if (dot(halfspaces[i], l) != 0) {
                lineality_orthogonal = false;
                break;
            }
        }
        if (lineality_orthogonal && out.incidence[i].size() == out.rays.size()) {
            out.implied_equality[i] = 1;
        }
        if (!out.duplicate[i] && !out.implied_equality[i]) {
            tight_rows.insert(tight_rows.end(), out.lineality.begin(), out.lineality.end());
            if (rank(std::move(tight_rows)) == out.cone_dim - 1) out.facet[i] = 1;
        }
    }
    return out;
}

ConeDescription polar_cone(int dim, const std::vector<IntVec>& rays) {
    return double_description(dim, rays);
}

}  // namespace m0n
