#include "m0n/log_canonical.hpp"

#include <stdexcept>

namespace m0n {

namespace {

void require_alpha_closed(int n, const Rational& alpha) {
    if (alpha < Rational(2, n - 1) || alpha > Rational(1)) {
        throw std::domain_error("weight outside [2/(n-1), 1]");
    }
}

// floor(2/alpha) - 1 for alpha > 0, without the floor(n/2) cap.
int uncapped_threshold(const Rational& alpha) {
    const Int q = (2 * alpha.den()) / alpha.num();
    return static_cast<int>(q) - 1;
}

Rational binom2(int j) { return Rational(Int(j) * (j - 1), 2); }

// C(j,2)*alpha - j(j-1)/(n-1)
Rational low_branch(int n, const Rational& alpha, int j) {
    return binom2(j) * alpha - Rational(Int(j) * (j - 1), Int(n - 1));
}

// alpha + (j-2) - j(j-1)/(n-1)
Rational high_branch(int n, const Rational& alpha, int j) {
    return alpha + Rational(j - 2) - Rational(Int(j) * (j - 1), Int(n - 1));
}

}  // namespace

int threshold_k(int n, const Rational& alpha) {
    if (n < 4) throw std::domain_error("number of marked points must be at least 4");
    require_alpha_closed(n, alpha);
    return std::min(n / 2, uncapped_threshold(alpha));
}

SymmetricDivisor a_alpha(int n, const Rational& alpha) {
    const int k = threshold_k(n, alpha);
    SymmetricDivisor out(n);
    for (int j = 2; j <= n / 2; ++j) {
        out.set_coefficient(j, j <= k ? low_branch(n, alpha, j) : high_branch(n, alpha, j));
    }
    return out;
}

SymmetricDivisor exceptional_divisor(int n, const Rational& alpha) {
    SymmetricDivisor out = canonical_class(n);
    out += alpha * boundary(n);
    out -= a_alpha(n, alpha);
    return out;
}

std::string ModelLabel::str(int n) const {
    if (kind == ModelKind::GitQuotient) {
        return "GIT (P^1)^" + std::to_string(n) + "//SL_2";
    }
    return "1/" + std::to_string(k) + " ×" + std::to_string(n);
}

ModelLabel model_for_alpha(int n, const Rational& alpha) {
    if (n < 4) throw std::domain_error("number of marked points must be at least 4");
    if (alpha <= Rational(2, n - 1) || alpha > Rational(1)) {
        throw std::domain_error("weight outside (2/(n-1), 1]");
    }
    const int kstar = uncapped_threshold(alpha);
    const int kmax = (n - 1) / 2;
    ModelLabel label;
    if (kstar <= kmax) {
        label.kind = ModelKind::Hassett;
        label.k = kstar;
        label.alpha_low = Rational(2, kstar + 2);
        label.alpha_high = Rational(2, kstar + 1);
    } else {
        label.kind = ModelKind::GitQuotient;
        label.k = 0;
        label.alpha_low = Rational(2, n - 1);
        label.alpha_high = Rational(2, kmax + 2);
    }
    return label;
}

ConvexDecomposition convex_decompose(int n, const Rational& alpha) {
    if (n < 4) throw std::domain_error("number of marked points must be at least 4");
    require_alpha_closed(n, alpha);
    ConvexDecomposition out;
    out.k = std::min(n - 3, uncapped_threshold(alpha));
    out.alpha_low = Rational(2, out.k + 2);
    out.alpha_high = Rational(2, out.k + 1);
    // alpha = t*alpha_low + (1-t)*alpha_high has the unique solution below.
    out.t = (out.alpha_high - alpha) * Rational(Int(out.k + 1) * (out.k + 2), 2);
    return out;
}

Rational h_value(int n, int k, int j) {
    if (n < 4) throw std::domain_error("number of marked points must be at least 4");
    if (k < 1 || k > n / 2) throw std::domain_error("piecewise index outside 1..floor(n/2)");
    if (j < 0 || j > n) throw std::out_of_range("coefficient index outside 0..n");
    const Rational alpha(2, k + 1);
    if (j <= k) return low_branch(n, alpha, j);
    if (j >= n - k) return low_branch(n, alpha, n - j);
    return high_branch(n, alpha, j);
}

Rational h_sum(int n, int k, const VitalPartition& p) {
    p.validate(n);
    Rational value = h_value(n, k, p.a + p.b);
    value += h_value(n, k, p.a + p.c);
    value += h_value(n, k, p.a + p.d);
    value -= h_value(n, k, p.a);
    value -= h_value(n, k, p.b);
    value -= h_value(n, k, p.c);
    value -= h_value(n, k, p.d);
    return value;
}

int classify_case(int n, int k, const VitalPartition& p) {
    p.validate(n);
    if (k < 1) throw std::domain_error("case classification requires k >= 1");
    const int a = p.a, b = p.b, c = p.c, d = p.d;
    const bool conds[15] = {
        /* 1*/ a > k,
        /* 2*/ a <= k && b > k,
        /* 3*/ b <= k && c > k && a + b > k,
        /* 4*/ b <= k && c > k && a + b <= k,
        /* 5*/ c <= k && d > k && a + b > k,
        /* 6*/ c <= k && d > k && a + b <= k && a + c > k,
        /* 7*/ c <= k && d > k && a + c <= k && b + c > k,
        /* 8*/ c <= k && d > k && b + c <= k && a + b + c > k,
        /* 9*/ c <= k && d > k && b + c <= k && a + b + c <= k,
        /*10*/ d <= k && a + b > k,
        /*11*/ d <= k && a + b <= k && a + c > k,
        /*12*/ d <= k && a + c <= k && a + d > k && b + c > k,
        /*13*/ d <= k && a + c <= k && a + d <= k && b + c > k,
        /*14*/ d <= k && a + c <= k && a + d > k && b + c <= k,
        /*15*/ d <= k && a + c <= k && a + d <= k && b + c <= k,
    };
    int hit = 0;
    int count = 0;
    for (int i = 0; i < 15; ++i) {
        if (conds[i]) {
            hit = i + 1;
            ++count;
        }
    }
    if (count != 1) {
        throw std::logic_error("case conditions matched " + std::to_string(count) +
                               " regimes for " + p.str() + " at k=" + std::to_string(k));
    }
    return hit;
}

Rational case_closed_form(int n, int k, const VitalPartition& p, int case_id) {
    const Int a = p.a, b = p.b, c = p.c, d = p.d;
    Int value;
    switch (case_id) {
        case 1: value = 2 * Int(k); break;
        case 2: value = a * (2 + k - a); break;
        case 3: value = (b - 2) * (k - b) + a * (2 + k - a); break;
        case 4: value = 2 * a * b; break;
        case 5: value = (k - c) * (c - 2) + (k - b) * (b - 2) + a * (2 + k - a); break;
        case 6: value = 2 * a * b + (c - 2) * (k - c); break;
        case 7: value = a * (a + 2 * b + 2 * c - 2 - k); break;
        case 8: value = (a + b + c - 2) * (a + b + c - k); break;
        case 9: value = 0; break;
        case 10:
            value = (k - d) * (d - 2) + (k - c) * (c - 2) + (k - b) * (b - 2) +
                    a * (2 + k - a);
            break;
        case 11: value = 2 * a * b + (c - 2) * (k - c) + (d - 2) * (k - d); break;
        case 12: value = a * (2 * b + 2 * c + a - 2 - k) + (d - 2) * (k - d); break;
        case 13: value = 2 * a * (n - 2 - k); break;
        case 14: value = (n - 2 * d) * (n - k - 2); break;
        case 15:
            throw std::domain_error("the all-small regime has no closed form (cannot occur for k < n/2)");
        default:
            throw std::domain_error("case id outside 1..15");
    }
    return Rational(value, Int(1 + k));
}

LemmaReport verify_lemma(int n) {
    LemmaReport report;
    const auto partitions = enumerate_vital_partitions(n);
    for (int k = 2; k <= n / 2 - 1; ++k) {
        for (const VitalPartition& p : partitions) {
            ++report.checks;
            const int case_id = classify_case(n, k, p);
            if (case_id == 15) {
                report.violations.push_back("excluded regime reached at k=" + std::to_string(k) +
                                            " " + p.str());
                continue;
            }
            const Rational direct = h_sum(n, k, p);
            const Rational closed = case_closed_form(n, k, p, case_id);
            if (direct != closed) {
                report.violations.push_back("closed form mismatch at k=" + std::to_string(k) +
                                            " " + p.str() + ": " + direct.str() + " vs " +
                                            closed.str());
            }
            if (direct.sign() < 0) {
                report.violations.push_back("negative value at k=" + std::to_string(k) + " " +
                                            p.str() + ": " + direct.str());
            }
            const bool should_vanish = p.a + p.b + p.c <= k;
            if (direct.is_zero() != should_vanish) {
                report.violations.push_back("zero set mismatch at k=" + std::to_string(k) + " " +
                                            p.str() + ": " + direct.str());
            }
        }
    }
    return report;
}

std::array<Rational, 4> c_interval_bounds(int n, int k) {
    if (n < 6) throw std::domain_error("scale bounds require at least 6 marked points");
    if (k < 2 || k > n / 2) throw std::domain_error("scale bounds require 2 <= k <= floor(n/2)");
    const int m = n / 2;
    const Rational alpha(2, k + 1);
    const Rational lower_small = Rational(k + 1, n - 1) + Rational(k + 1, 6);
    const Rational upper_small = Rational(k + 1, n - 1) + Rational(k + 1, k);
    const Rational lower_extreme =
        Rational(Int(m - 2) * (n + m) + 2) / (Rational(n - 1) * (Rational(m - 2) + alpha));
    const Rational upper_extreme =
        Rational(Int(k) * (n - k)) / (Rational(n - 1) * (Rational(k - 1) + alpha));
    return {lower_small, upper_small, lower_extreme, upper_extreme};
}

std::optional<std::pair<Rational, Rational>> c_interval(int n, int k) {
    const auto bounds = c_interval_bounds(n, k);
    const Rational lo = std::max(bounds[0], bounds[2]);
    const Rational hi = std::min(bounds[1], bounds[3]);
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::optional<std::pair<Rational, Rational>> direct_c_feasible(int n, int k) {
    if (n < 6) throw std::domain_error("feasibility scan requires at least 6 marked points");
    if (k < 2 || k > n / 2) {
        throw std::domain_error("feasibility scan requires 2 <= k <= floor(n/2)");
    }
    const SymmetricDivisor a = a_alpha(n, Rational(2, k + 1));
    const SymmetricDivisor canon = canonical_class(n);
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (int j = 2; j <= n / 2; ++j) {
        const Rational aj = a.coefficient(j);
        const Rational kj = canon.coefficient(j);
        if (aj.is_zero()) {
            if (kj > Rational(0) || kj < Rational(-1)) return std::nullopt;
            continue;
        }
        Rational lo_j = kj / aj;
        Rational hi_j = (kj + Rational(1)) / aj;
        if (aj.sign() < 0) std::swap(lo_j, hi_j);
        if (!lo || lo_j > *lo) lo = lo_j;
        if (!hi || hi_j < *hi) hi = hi_j;
    }
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

}  // namespace m0n
