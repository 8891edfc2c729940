#include <doctest.h>

#include <random>

#include "vvmf/hypergeom.hpp"

using namespace vvmf;

namespace {

bool close(const BigFloat& a, const BigFloat& b, double tol) {
    return ((a - b).abs() < BigFloat(tol, a.precision()));
}

}  // namespace

TEST_CASE("hyp2f1 series") {
    SUBCASE("a = 0 collapses to 1") {
        auto s = hyp2f1(Rational(0), rat(5, 7), rat(3, 2), 6);
        CHECK(s.coeff_at(0) == 1);
        for (long k = 1; k < 6; ++k) CHECK(s.coeff_at(k) == 0);
    }
    SUBCASE("(1,1,1) is geometric") {
        auto s = hyp2f1(Rational(1), Rational(1), Rational(1), 8);
        for (long k = 0; k < 8; ++k) CHECK(s.coeff_at(k) == 1);
    }
    SUBCASE("printed rank-2 value and cross-module agreement") {
        auto s = hyp2f1(rat(11, 60), rat(31, 60), rat(6, 5), 12);
        CHECK(s.coeff_at(1) == rat(341, 4320));
        ExponentTuple f({rat(11, 60), rat(-1, 60)});
        auto ode = theta_from_exponents(2, f);
        auto sol = frobenius_solve(ode, f[0], 12);
        for (long n = 0; n < 12; ++n) CHECK(s.coeff_at(n) == sol.coeffs[static_cast<size_t>(n)]);
    }
    SUBCASE("Pochhammer pole in c") {
        CHECK_THROWS_WITH_AS(hyp2f1(rat(1, 2), rat(1, 3), Rational(-2), 6),
                             "Pochhammer zero in denominator", std::domain_error);
    }
}

TEST_CASE("gamma function identities") {
    mpfr_prec_t prec = 256;
    SUBCASE("integer and half-integer values") {
        CHECK(close(gamma_rational(Rational(1), prec), BigFloat(1L, prec), 1e-70));
        BigFloat sqrt_pi = BigFloat::pi(prec).sqrt();
        CHECK(close(gamma_rational(rat(1, 2), prec), sqrt_pi, 1e-70));
    }
    SUBCASE("reflection formula at x = 0.3") {
        Rational x = rat(3, 10);
        BigFloat lhs = gamma_rational(x, prec) * gamma_rational(1 - x, prec);
        BigFloat pi = BigFloat::pi(prec);
        BigFloat rhs = pi / BigFloat::sin(pi * BigFloat(x, prec));
        CHECK(close(lhs, rhs, 1e-70));
    }
    SUBCASE("Gamma(3/4)Gamma(5/12)/(Gamma(1/4)Gamma(11/12)) = sqrt(2 sqrt 3 - 3)") {
        BigFloat lhs = gamma_rational(rat(3, 4), prec) * gamma_rational(rat(5, 12), prec) /
                       (gamma_rational(rat(1, 4), prec) * gamma_rational(rat(11, 12), prec));
        BigFloat rhs = (BigFloat(2L, prec) * BigFloat(3L, prec).sqrt() - BigFloat(3L, prec)).sqrt();
        CHECK(close(lhs, rhs, 1e-60));
        CHECK(close(lhs, rhs, 1e-12));  // the documented tolerance
    }
    SUBCASE("poles rejected") {
        CHECK_THROWS_AS(gamma_rational(Rational(0), prec), std::domain_error);
        CHECK_THROWS_AS(gamma_rational(Rational(-3), prec), std::domain_error);
    }
}

TEST_CASE("rank-2 parameters") {
    Rank2Params p(Rational(33), rat(9, 4));
    CHECK(p.e1 == rat(-11, 8));
    CHECK(p.e2 == rat(7, 8));
    CHECK(p.f1 + p.f2 == rat(1, 6));
    CHECK(p.k1 == -4);
    CHECK(p.extremal());
    CHECK_THROWS_AS(Rank2Params(Rational(24), Rational(2)), std::domain_error);
}

TEST_CASE("rank-2 X: the two closed forms agree") {
    mpfr_prec_t prec = 256;
    SUBCASE("h = 1/5: both Gamma-product routes agree far below 1e-30") {
        // rank2_X evaluates the (f1, f2) product form and the duplication
        // form in h, and throws unless they match to ~2^-240; well inside
        // the 1e-30 gate.
        Rank2Params q(Rational(0), rat(1, 5));
        CHECK_NOTHROW(rank2_X(q, +1, prec));
    }
    SUBCASE("Gauss special-value route cross-check at h = 9/4") {
        Rank2Params q(Rational(33), rat(9, 4));
        BigFloat x = rank2_X(q, +1, prec);
        BigFloat xg = rank2_X_gauss(q, +1, prec);
        CHECK(close(x, xg, 1e-9));
    }
    SUBCASE("sign flips negate") {
        Rank2Params p(Rational(33), rat(9, 4));
        BigFloat plus = rank2_X(p, +1, prec);
        BigFloat minus = rank2_X(p, -1, prec);
        CHECK(close(plus + minus, BigFloat(0L, prec), 1e-70));
        CHECK(plus > BigFloat(0L, prec));
    }
}

TEST_CASE("rank-2 S-matrix") {
    mpfr_prec_t prec = 256;
    BigFloat tol = BigFloat::pow2(-100, prec);
    Rank2Params p(Rational(33), rat(9, 4));
    auto s = rank2_S(p.e1, p.e2, +1, prec);

    SUBCASE("symmetric, squares to the identity") {
        CHECK(s.symmetry_defect() < tol);
        CHECK(s.involution_defect() < tol);
    }
    SUBCASE("(S T)^3 = +- identity (modular relation oracle)") {
        // T = diag(e^{2 pi i e_j}) acts complex; work with the real/imaginary
        // parts of (S T): M = S * diag(t1, t2), (M^3) should be +-I.
        BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
        BigFloat c1 = BigFloat::cos(two_pi * BigFloat(p.e1, prec));
        BigFloat s1 = BigFloat::sin(two_pi * BigFloat(p.e1, prec));
        BigFloat c2 = BigFloat::cos(two_pi * BigFloat(p.e2, prec));
        BigFloat s2 = BigFloat::sin(two_pi * BigFloat(p.e2, prec));
        // complex 2x2 arithmetic with separate real/imag parts
        struct C2 {
            BigFloat re[2][2];
            BigFloat im[2][2];
        };
        C2 m;
        m.re[0][0] = s.at(0, 0) * c1; m.im[0][0] = s.at(0, 0) * s1;
        m.re[0][1] = s.at(0, 1) * c2; m.im[0][1] = s.at(0, 1) * s2;
        m.re[1][0] = s.at(1, 0) * c1; m.im[1][0] = s.at(1, 0) * s1;
        m.re[1][1] = s.at(1, 1) * c2; m.im[1][1] = s.at(1, 1) * s2;
        auto mul = [&](const C2& a, const C2& b) {
            C2 out;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    BigFloat re(prec), im(prec);
                    for (int k = 0; k < 2; ++k) {
                        re = re + a.re[i][k] * b.re[k][j] - a.im[i][k] * b.im[k][j];
                        im = im + a.re[i][k] * b.im[k][j] + a.im[i][k] * b.re[k][j];
                    }
                    out.re[i][j] = re;
                    out.im[i][j] = im;
                }
            return out;
        };
        C2 m3 = mul(mul(m, m), m);
        // diagonal equal, off-diagonal zero, imaginary parts zero
        BigFloat looser = BigFloat(1e-30, prec);
        CHECK((m3.re[0][1].abs() < looser));
        CHECK((m3.re[1][0].abs() < looser));
        CHECK((m3.im[0][0].abs() < looser));
        CHECK((m3.im[1][1].abs() < looser));
        CHECK(((m3.re[0][0] - m3.re[1][1]).abs() < looser));
        CHECK((((m3.re[0][0].abs()) - BigFloat(1L, prec)).abs() < looser));
    }
    SUBCASE("sign choice conjugates by diag(-1, 1)") {
        auto s_minus = rank2_S(p.e1, p.e2, -1, prec);
        CHECK(close(s_minus.at(0, 1), -s.at(0, 1), 1e-70));
        CHECK(close(s_minus.at(0, 0), s.at(0, 0), 1e-70));
    }
    SUBCASE("degenerate exponents rejected") {
        CHECK_THROWS_AS(rank2_S(rat(1, 3), rat(4, 3), +1, prec), std::domain_error);
    }
}

TEST_CASE("dim M0 verdicts") {
    SUBCASE("c = 33, h = 9/4, k1 = -4 gives 565760") {
        Rank2Params p(Rational(33), rat(9, 4));
        auto r = dim_M0(p);
        CHECK(r.integral);
        CHECK(r.rounded == 565760);
        CHECK(r.value.distance_to_integer() < BigFloat(1e-6, 256));
    }
    SUBCASE("the awkward k1 = 0 cases are nonintegral") {
        for (auto [c, h] : std::vector<std::pair<Rational, Rational>>{
                 {Rational(-6), rat(-1, 3)}, {Rational(-8), rat(-1, 2)},
                 {Rational(-10), rat(-2, 3)}}) {
            Rank2Params p(c, h);
            CHECK(p.k1 == 0);
            auto r = dim_M0(p);
            CHECK(!r.integral);
            CHECK(r.value.distance_to_integer() > BigFloat(1e-3, 256));
        }
    }
    SUBCASE("non-extremal parameters rejected") {
        Rank2Params p(Rational(14), rat(1, 3));  // k1 = -6
        CHECK(p.k1 == -6);
        CHECK_THROWS_WITH_AS(dim_M0(p), "not extremal", std::domain_error);
        Rank2Params frac(Rational(12), rat(1, 5));  // k1 not an integer
        CHECK_THROWS_AS(dim_M0(frac), std::domain_error);
    }
}

TEST_CASE("rank-2 extremal character assembly") {
    mpfr_prec_t prec = 256;
    SUBCASE("c = 33, h = 9/4: second coordinate leads with 565760") {
        Rank2Params p(Rational(33), rat(9, 4));
        auto row = rank2_extremal_character(p, 10, prec);
        CHECK(row.expansion.coords[0].series.leading_coeff() == 1);
        CHECK(row.expansion.coords[0].exponent == p.e1);
        CHECK(row.expansion.coords[1].exponent == p.e2);
        CHECK(row.dim_m0.integral);
        CHECK(row.expansion.coords[1].series.leading_coeff() == 565760);
    }
    SUBCASE("k1 = 0 row equals the direct Frobenius solve") {
        // oracle: for k1 = 0 the assembly must reproduce the plain rank-2
        // Frobenius q-expansion at (e1, e2) = (f1, f2).
        std::mt19937 rng(53);
        std::uniform_int_distribution<long> hnum(-20, 20);
        int done = 0;
        while (done < 20) {
            Rational h = rat(hnum(rng), 24);
            if (is_integer(h) || h == rat(1, 6)) continue;
            Rational c = 12 * h - 2;  // k1 = 6h - c/2 - 1 = 0
            Rank2Params p(c, h);
            if (p.k1 != 0) continue;
            Rank2Character row;
            try {
                row = rank2_extremal_character(p, 15, prec);
            } catch (const std::exception&) {
                continue;  // Gamma poles or degenerate radicand
            }
            auto ode = theta_from_exponents(2, ExponentTuple({p.f1, p.f2}));
            auto sols = family_solve(ode, ExponentTuple({p.f1, p.f2}), 17);
            auto direct = to_q_expansion(sols, 15);
            // coordinate 1 is vacuum-normalized in both
            CHECK(row.expansion.coords[0].series ==
                  direct.coords[0].series.truncated_to(row.expansion.coords[0].series.horizon()));
            // coordinate 2 compared after leading normalization
            auto mine = row.expansion.coords[1].series;
            auto unital = mine.scaled_rational(Rational(1) / mine.leading_coeff());
            CHECK(unital ==
                  direct.coords[1].series.truncated_to(unital.horizon()));
            ++done;
        }
    }
    SUBCASE("k1 = -2 and -4 rows keep the vacuum normalized") {
        // k1 = -2: c = 12h + 2; k1 = -4: c = 12h + 6
        Rank2Params p2(12 * rat(7, 5) + 2, rat(7, 5));
        CHECK(p2.k1 == -2);
        auto row2 = rank2_extremal_character(p2, 8, prec);
        CHECK(row2.expansion.coords[0].series.leading_coeff() == 1);
        CHECK(row2.expansion.coords[0].exponent == p2.e1);

        Rank2Params p4(12 * rat(7, 5) + 6, rat(7, 5));
        CHECK(p4.k1 == -4);
        auto row4 = rank2_extremal_character(p4, 8, prec);
        CHECK(row4.expansion.coords[0].series.leading_coeff() == 1);
        CHECK(row4.expansion.coords[0].exponent == p4.e1);
    }
}
