#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m0n/log_canonical.hpp"

#include <vector>

using m0n::Rational;
using m0n::SymmetricDivisor;
using m0n::VitalPartition;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> values) { return values; }

}  // namespace

TEST_CASE("threshold_k matches hand values") {
    CHECK(m0n::threshold_k(10, Rational(1)) == 1);
    CHECK(m0n::threshold_k(10, Rational(2, 3)) == 2);
    CHECK(m0n::threshold_k(10, Rational(1, 2)) == 3);
    CHECK(m0n::threshold_k(10, Rational(2, 9)) == 5);
    CHECK(m0n::threshold_k(9, Rational(1, 4)) == 4);
    CHECK(m0n::threshold_k(6, Rational(1)) == 1);
    CHECK_THROWS_AS(m0n::threshold_k(10, Rational(1, 5)), std::domain_error);
    CHECK_THROWS_AS(m0n::threshold_k(10, Rational(3, 2)), std::domain_error);
}

TEST_CASE("interpolation divisor at frozen points") {
    CHECK(m0n::a_alpha(10, Rational(1, 2)).coefficients() ==
          rats({Rational(5, 18), Rational(5, 6), Rational(7, 6), Rational(23, 18)}));
    CHECK(m0n::a_alpha(6, Rational(1)).coefficients() ==
          rats({Rational(3, 5), Rational(4, 5)}));
    for (int n = 5; n <= 12; ++n) {
        CHECK(m0n::a_alpha(n, Rational(2, n - 1)) == SymmetricDivisor(n));
    }
    // At alpha = 1 the divisor is the log-canonical class itself.
    for (int n = 4; n <= 12; ++n) {
        CHECK(m0n::a_alpha(n, Rational(1)) ==
              m0n::canonical_class(n) + m0n::boundary(n));
    }
}

TEST_CASE("exceptional part of the pullback") {
    CHECK(m0n::exceptional_divisor(10, Rational(1, 2)) == SymmetricDivisor(10));
    CHECK(m0n::exceptional_divisor(10, Rational(2, 9)).coefficients() ==
          rats({Rational(0), Rational(5, 9), Rational(8, 9), Rational(1)}));
    for (int n : {6, 9, 13}) {
        for (int q = 1; q <= 8; ++q) {
            const Rational alpha = Rational(2, n - 1) +
                                   Rational(q, 8) * (Rational(1) - Rational(2, n - 1));
            const SymmetricDivisor e = m0n::exceptional_divisor(n, alpha);
            const int k = m0n::threshold_k(n, alpha);
            // Matches K + alpha*D - A_alpha and is supported on indices 3..k.
            CHECK(e == m0n::canonical_class(n) + alpha * m0n::boundary(n) -
                           m0n::a_alpha(n, alpha));
            for (int j = 2; j <= n / 2; ++j) {
                CHECK(e.coefficient(j).sign() >= 0);
                if (j < 3 || j > k) CHECK(e.coefficient(j).is_zero());
            }
        }
    }
}

TEST_CASE("model labels across the weight range") {
    const m0n::ModelLabel top = m0n::model_for_alpha(10, Rational(1));
    CHECK(top.kind == m0n::ModelKind::Hassett);
    CHECK(top.k == 1);
    CHECK(top.alpha_low == Rational(2, 3));
    CHECK(top.alpha_high == Rational(1));
    CHECK(top.str(10) == "1/1 ×10");

    const m0n::ModelLabel mid = m0n::model_for_alpha(10, Rational(1, 2));
    CHECK(mid.kind == m0n::ModelKind::Hassett);
    CHECK(mid.k == 3);
    CHECK(mid.alpha_low == Rational(2, 5));
    CHECK(mid.alpha_high == Rational(1, 2));

    const m0n::ModelLabel git = m0n::model_for_alpha(10, Rational(1, 4));
    CHECK(git.kind == m0n::ModelKind::GitQuotient);
    CHECK(git.k == 0);
    CHECK(git.alpha_low == Rational(2, 9));
    CHECK(git.alpha_high == Rational(1, 3));
    CHECK(git.str(10) == "GIT (P^1)^10//SL_2");

    CHECK(m0n::model_for_alpha(10, Rational(1, 3)).kind == m0n::ModelKind::GitQuotient);
    CHECK(m0n::model_for_alpha(10, Rational(31, 90)).k == 4);

    // Odd n: the lowest Hassett interval takes precedence at its endpoints.
    CHECK(m0n::model_for_alpha(9, Rational(7, 24)).kind == m0n::ModelKind::GitQuotient);
    CHECK(m0n::model_for_alpha(9, Rational(1, 3)).kind == m0n::ModelKind::GitQuotient);
    CHECK(m0n::model_for_alpha(9, Rational(17, 48)).k == 4);

    // n = 5 never reaches the quotient chamber.
    CHECK(m0n::model_for_alpha(5, Rational(51, 100)).k == 2);
    CHECK(m0n::model_for_alpha(5, Rational(1)).k == 1);

    CHECK_THROWS_AS(m0n::model_for_alpha(10, Rational(2, 9)), std::domain_error);
    CHECK_THROWS_AS(m0n::model_for_alpha(10, Rational(6, 5)), std::domain_error);
}

TEST_CASE("model intervals contain their weight and tile") {
    for (int n = 5; n <= 14; ++n) {
        Rational prev_low;
        Rational prev_high;
        bool first = true;
        // Walk the breakpoints from the bottom of the range upward; intervals
        // seen along the way must either repeat or abut the previous one.
        for (int k = 2 * ((n - 1) / 2); k >= 1; --k) {
            const Rational alpha(2, k + 1);
            if (alpha <= Rational(2, n - 1)) continue;
            const m0n::ModelLabel label = m0n::model_for_alpha(n, alpha);
            CHECK(label.alpha_low < alpha);
            CHECK(alpha <= label.alpha_high);
            if (first) {
                CHECK(label.alpha_low == Rational(2, n - 1));
                first = false;
            } else {
                const bool repeats =
                    label.alpha_low == prev_low && label.alpha_high == prev_high;
                const bool abuts = label.alpha_low == prev_high;
                CHECK((repeats || abuts));
            }
            prev_low = label.alpha_low;
            prev_high = label.alpha_high;
        }
        CHECK(prev_high == Rational(1));
    }
}

TEST_CASE("convex decomposition between breakpoints") {
    const m0n::ConvexDecomposition d = m0n::convex_decompose(10, Rational(9, 20));
    CHECK(d.k == 3);
    CHECK(d.t == Rational(1, 2));
    CHECK(d.alpha_low == Rational(2, 5));
    CHECK(d.alpha_high == Rational(1, 2));

    const m0n::ConvexDecomposition top = m0n::convex_decompose(10, Rational(1));
    CHECK(top.k == 1);
    CHECK(top.t == Rational(0));
    CHECK(top.alpha_high == Rational(1));

    const m0n::ConvexDecomposition bottom = m0n::convex_decompose(6, Rational(2, 5));
    CHECK(bottom.k == 3);
    CHECK(bottom.t == Rational(1));

    for (int n : {8, 11}) {
        for (int num = 1; num <= 12; ++num) {
            const Rational alpha = Rational(2, n - 1) +
                                   Rational(num, 12) * (Rational(1) - Rational(2, n - 1));
            const m0n::ConvexDecomposition dec = m0n::convex_decompose(n, alpha);
            CHECK(Rational(0) <= dec.t);
            CHECK(dec.t <= Rational(1));
            CHECK(dec.alpha_low == Rational(2, dec.k + 2));
            CHECK(dec.alpha_high == Rational(2, dec.k + 1));
            CHECK(dec.alpha_low <= alpha);
            CHECK(alpha <= dec.alpha_high);
            const SymmetricDivisor lhs = m0n::a_alpha(n, alpha);
            const SymmetricDivisor rhs = dec.t * m0n::a_alpha(n, dec.alpha_low) +
                                         (Rational(1) - dec.t) * m0n::a_alpha(n, dec.alpha_high);
            CHECK(lhs == rhs);
        }
    }
    CHECK_THROWS_AS(m0n::convex_decompose(10, Rational(1, 5)), std::domain_error);
}

TEST_CASE("piecewise h agrees with the breakpoint divisor") {
    for (int n : {8, 9, 10, 13}) {
        for (int k = 1; k <= n / 2; ++k) {
            const SymmetricDivisor a = m0n::a_alpha(n, Rational(2, k + 1));
            for (int j = 1; j <= n - 1; ++j) {
                CHECK(m0n::h_value(n, k, j) == a.coefficient(j));
            }
            CHECK(m0n::h_value(n, k, 0) == Rational(0));
            CHECK(m0n::h_value(n, k, n) == Rational(0));
            for (const VitalPartition& p : m0n::enumerate_vital_partitions(n)) {
                CHECK(m0n::h_sum(n, k, p) == m0n::intersect_vital(a, p));
            }
        }
    }
    CHECK_THROWS_AS(m0n::h_value(10, 0, 2), std::domain_error);
    CHECK_THROWS_AS(m0n::h_value(10, 6, 2), std::domain_error);
    CHECK_THROWS_AS(m0n::h_value(10, 3, -1), std::out_of_range);
    CHECK_THROWS_AS(m0n::h_value(10, 3, 11), std::out_of_range);
}

TEST_CASE("regime classification on known partitions") {
    CHECK(m0n::classify_case(13, 2, {3, 3, 3, 4}) == 1);
    CHECK(m0n::classify_case(14, 3, {2, 4, 4, 4}) == 2);
    CHECK(m0n::classify_case(10, 2, {2, 2, 3, 3}) == 3);
    CHECK(m0n::classify_case(10, 5, {1, 1, 1, 7}) == 9);
    CHECK(m0n::classify_case(12, 5, {3, 3, 3, 3}) == 10);
    CHECK(m0n::classify_case(12, 5, {2, 2, 3, 5}) == 14);
    CHECK(m0n::classify_case(12, 6, {3, 3, 3, 3}) == 15);
}

TEST_CASE("closed forms at spot values") {
    CHECK(m0n::case_closed_form(13, 2, {3, 3, 3, 4}, 1) == Rational(4, 3));
    CHECK(m0n::case_closed_form(14, 3, {2, 4, 4, 4}, 2) == Rational(3, 2));
    CHECK(m0n::case_closed_form(10, 5, {1, 1, 1, 7}, 9) == Rational(0));
    CHECK(m0n::case_closed_form(12, 5, {2, 2, 3, 5}, 14) == Rational(5, 3));
    CHECK(m0n::h_sum(12, 5, {2, 2, 3, 5}) == Rational(5, 3));
    CHECK_THROWS_AS(m0n::case_closed_form(12, 6, {3, 3, 3, 3}, 15), std::domain_error);
    CHECK_THROWS_AS(m0n::case_closed_form(10, 2, {2, 2, 3, 3}, 16), std::domain_error);
}

TEST_CASE("exhaustive lemma verification stays clean") {
    const m0n::LemmaReport ten = m0n::verify_lemma(10);
    CHECK(ten.ok());
    CHECK(ten.checks > 0);
    for (int n = 6; n <= 16; ++n) {
        const m0n::LemmaReport report = m0n::verify_lemma(n);
        CHECK_MESSAGE(report.ok(), "n = ", n, ", first violation: ",
                      report.violations.empty() ? "" : report.violations.front());
    }
}

TEST_CASE("closed-form scale bounds at n = 20") {
    const auto bounds = m0n::c_interval_bounds(20, 5);
    CHECK(bounds[0] == Rational(25, 19));
    CHECK(bounds[1] == Rational(144, 95));
    CHECK(bounds[2] == Rational(726, 475));
    CHECK(bounds[3] == Rational(225, 247));
    for (int k = 2; k <= 6; ++k) {
        CHECK_FALSE(m0n::c_interval(20, k).has_value());
    }
    CHECK_THROWS_AS(m0n::c_interval_bounds(5, 2), std::domain_error);
    CHECK_THROWS_AS(m0n::c_interval_bounds(20, 1), std::domain_error);
}

TEST_CASE("direct scale feasibility at n = 20") {
    const auto k2 = m0n::direct_c_feasible(20, 2);
    REQUIRE(k2.has_value());
    CHECK(k2->first == Rational(93, 112));
    CHECK(k2->second == Rational(243, 224));

    const auto k3 = m0n::direct_c_feasible(20, 3);
    REQUIRE(k3.has_value());
    CHECK(k3->first == Rational(124, 143));
    CHECK(k3->second == Rational(162, 143));

    const auto k4 = m0n::direct_c_feasible(20, 4);
    REQUIRE(k4.has_value());
    CHECK(k4->first == Rational(155, 174));
    CHECK(k4->second == Rational(135, 116));

    const auto k5 = m0n::direct_c_feasible(20, 5);
    REQUIRE(k5.has_value());
    CHECK(k5->first == Rational(1));
    CHECK(k5->second == Rational(243, 205));

    CHECK_FALSE(m0n::direct_c_feasible(20, 6).has_value());

    const auto small = m0n::direct_c_feasible(6, 2);
    REQUIRE(small.has_value());
    CHECK(small->first == Rational(-3, 7));
    CHECK(small->second == Rational(12, 7));
}
