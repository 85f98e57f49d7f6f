#include "m0n/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace m0n {

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x < 0 ? Int(-x) : x);
        if (g == 1) break;
    }
    return g;
}

IntVec primitive(IntVec v) {
    const Int g = content(v);
    if (g > 1) {
        for (Int& x : v) x /= g;
    }
    return v;
}

IntVec sign_normalized(IntVec v) {
    v = primitive(std::move(v));
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0) {
            for (Int& y : v) y = -y;
        }
        break;
    }
    return v;
}

Int dot(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot of unequal-length vectors");
    Int sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
    return sum;
}

bool is_zero_vec(const IntVec& v) {
    for (const Int& x : v) {
        if (x != 0) return false;
    }
    return true;
}

int rank(std::vector<IntVec> rows) {
    if (rows.empty()) return 0;
    const std::size_t dim = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const IntVec& prow = rows[r];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Int factor = rows[i][col];
            for (std::size_t j = 0; j < dim; ++j) {
                rows[i][j] = rows[i][j] * prow[col] - prow[j] * factor;
            }
            rows[i] = primitive(std::move(rows[i]));
        }
        ++r;
    }
    return static_cast<int>(r);
}

bool in_span(const IntVec& v, const std::vector<IntVec>& rows) {
    if (is_zero_vec(v)) return true;
    std::vector<IntVec> extended = rows;
    extended.push_back(v);
    return rank(rows) == rank(std::move(extended));
}

bool same_span(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    const int ra = rank(a);
    const int rb = rank(b);
    if (ra != rb) return false;
    std::vector<IntVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(std::move(both)) == ra;
}

std::vector<IntVec> nullspace_basis(const std::vector<IntVec>& rows, int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    // Reduced row echelon form over the rationals.
    std::vector<std::vector<Rational>> mat;
    mat.reserve(rows.size());
    for (const IntVec& row : rows) {
        if (static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument("row length does not match dimension");
        }
        mat.push_back(to_rational(row));
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int col = 0; col < dim && r < mat.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < mat.size() && mat[pivot][col].is_zero()) ++pivot;
        if (pivot == mat.size()) continue;
        std::swap(mat[r], mat[pivot]);
        const Rational inv = Rational(1) / mat[r][col];
        for (int j = 0; j < dim; ++j) mat[r][j] *= inv;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == r || mat[i][col].is_zero()) continue;
            const Rational factor = mat[i][col];
            for (int j = 0; j < dim; ++j) mat[i][j] -= factor * mat[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int col : pivot_col) is_pivot[static_cast<std::size_t>(col)] = true;
    std::vector<IntVec> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> x(static_cast<std::size_t>(dim), Rational(0));
        x[static_cast<std::size_t>(free)] = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            x[static_cast<std::size_t>(pivot_col[i])] = -mat[i][static_cast<std::size_t>(free)];
        }
        basis.push_back(rational_to_primitive(x));
    }
    return basis;
}

IntVec rational_to_primitive(const std::vector<Rational>& v) {
    Int common = 1;
    for (const Rational& x : v) common = lcm(common, x.den());
    IntVec out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(x.num() * (common / x.den()));
    return primitive(std::move(out));
}

std::vector<Rational> to_rational(const IntVec& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

}  // namespace m0n
