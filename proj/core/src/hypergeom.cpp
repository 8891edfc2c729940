#include "vvmf/hypergeom.hpp"

#include <sstream>
#include <stdexcept>

namespace vvmf {

namespace {

// sin(pi x) for rational x; exact zero detection at integers.
BigFloat sin_pi(const Rational& x, mpfr_prec_t prec) {
    if (is_integer(x)) return BigFloat(0L, prec);
    return BigFloat::sin(BigFloat::pi(prec) * BigFloat(x, prec));
}

BigFloat sqrt_checked(const BigFloat& radicand, const std::string& what) {
    if (radicand.is_negative()) throw std::domain_error("negative radicand in " + what);
    if (radicand.is_zero()) throw std::domain_error("zero radicand in " + what);
    return radicand.sqrt();
}

}  // namespace

RationalSeries hyp2f1(const Rational& a, const Rational& b, const Rational& c, size_t n_terms) {
    if (n_terms == 0) throw std::domain_error("hyp2f1 needs at least one term");
    std::vector<Rational> coeffs(n_terms);
    coeffs[0] = 1;
    Rational term(1);
    for (size_t n = 0; n + 1 < n_terms; ++n) {
        Rational cn = c + static_cast<long>(n);
        if (cn == 0) throw std::domain_error("Pochhammer zero in denominator");
        term *= (a + static_cast<long>(n)) * (b + static_cast<long>(n));
        term /= cn * Rational(static_cast<long>(n) + 1);
        coeffs[n + 1] = term;
    }
    return RationalSeries::make(0, 1, std::move(coeffs), Rational(static_cast<long>(n_terms)));
}

BigFloat gamma_rational(const Rational& x, mpfr_prec_t prec) {
    if (is_integer(x) && x <= 0) throw std::domain_error("gamma pole at " + to_string(x));
    return BigFloat::gamma(BigFloat(x, prec));
}

Rank2Params::Rank2Params(const Rational& c_in, const Rational& h_in) : c(c_in), h(h_in) {
    if (is_integer(h)) throw std::domain_error("integral conformal weight: exponents collide mod Z");
    e1 = -c / 24;
    e2 = h - c / 24;
    f1 = Rational(1, 12) - h / 2;
    f2 = Rational(1, 12) + h / 2;
    k1 = 6 * h - c / 2 - 1;
}

long Rank2Params::k1_int() const {
    if (!is_integer(k1)) throw std::domain_error("minimal weight is not an integer");
    return k1.get_num().get_si();
}

BigFloat rank2_X(const Rank2Params& p, int sign, mpfr_prec_t prec) {
    // Corollary form in h.
    BigFloat four(4L, prec);
    BigFloat pref_c = BigFloat::pow(four, BigFloat(-p.h, prec)) * gamma_rational(-p.h, prec) *
                      gamma_rational(Rational(5, 6) + p.h, prec) /
                      (gamma_rational(p.h, prec) * gamma_rational(Rational(5, 6) - p.h, prec));
    BigFloat rad_c = sin_pi(p.h - Rational(1, 6), prec) / sin_pi(p.h + Rational(1, 6), prec);
    BigFloat x_c = pref_c * sqrt_checked(rad_c, "rank-2 X (h form)");

    // Gamma-product form in (f_1, f_2).
    BigFloat pref_t = gamma_rational(p.f1 - p.f2, prec) * gamma_rational(1 - p.f1, prec) *
                      gamma_rational(Rational(2, 3) - p.f1, prec) /
                      (gamma_rational(p.f2 - p.f1, prec) * gamma_rational(1 - p.f2, prec) *
                       gamma_rational(Rational(2, 3) - p.f2, prec));
    BigFloat rad_t = -(sin_pi(p.f1, prec) * sin_pi(p.f1 + Rational(1, 3), prec)) /
                     (sin_pi(p.f2, prec) * sin_pi(p.f2 + Rational(1, 3), prec));
    BigFloat x_t = pref_t * sqrt_checked(rad_t, "rank-2 X (f form)");

    // The two routes agree up to the square-root branch; their magnitudes
    // must match to working precision.
    BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) + 16, prec) *
                   (BigFloat(1L, prec) + x_c.abs());
    if ((x_c.abs() - x_t.abs()).abs() > tol)
        throw std::runtime_error("rank-2 X evaluation routes disagree");

    BigFloat out = x_c.abs();
    if (sign < 0) out = -out;
    return out;
}

BigFloat rank2_X_gauss(const Rank2Params& p, int sign, mpfr_prec_t prec) {
    if (!(p.h > Rational(-5, 6))) throw std::domain_error("Gauss route needs h > -5/6");
    // 2F1(-2h, -5/6; -h; 1) by direct summation; the tail decays like
    // n^-(1 + h + 5/6).
    BigFloat a(-2 * p.h, prec), b(Rational(-5, 6), prec), c(-p.h, prec);
    BigFloat sum(1L, prec), term(1L, prec);
    BigFloat cutoff = BigFloat::pow2(-static_cast<long>(prec) - 8, prec);
    for (long n = 0; n < 400000; ++n) {
        BigFloat nn(n, prec);
        term = term * (a + nn) * (b + nn) / ((c + nn) * (nn + BigFloat(1L, prec)));
        sum = sum + term;
        if (term.abs() < cutoff * sum.abs() && n > 8) break;
    }
    BigFloat four(4L, prec);
    BigFloat rad = sin_pi(p.h - Rational(1, 6), prec) / sin_pi(p.h + Rational(1, 6), prec);
    BigFloat out = BigFloat::pow(four, BigFloat(-p.h, prec)) * sum *
                   sqrt_checked(rad, "rank-2 X (Gauss form)");
    out = out.abs();
    if (sign < 0) out = -out;
    return out;
}

SMatrix rank2_S(const Rational& e1, const Rational& e2, int sign, mpfr_prec_t prec) {
    if (is_integer(e1) || is_integer(e2) || is_integer(e1 - e2))
        throw std::domain_error("degenerate rank-2 exponents");
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
    BigFloat rad = BigFloat(1L, prec) -
                   BigFloat(2L, prec) * BigFloat::cos(two_pi * BigFloat(e1 - e2, prec));
    BigFloat s = sqrt_checked(rad, "rank-2 S-matrix");
    if (sign < 0) s = -s;

    // (e^{2 pi i (2e1+e2)} - e^{2 pi i (e1+2e2)})^{-1} must be real.
    BigFloat re = BigFloat::cos(two_pi * BigFloat(2 * e1 + e2, prec)) -
                  BigFloat::cos(two_pi * BigFloat(e1 + 2 * e2, prec));
    BigFloat im = BigFloat::sin(two_pi * BigFloat(2 * e1 + e2, prec)) -
                  BigFloat::sin(two_pi * BigFloat(e1 + 2 * e2, prec));
    BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
    if (!(im.abs() < tol) || re.is_zero())
        throw std::domain_error("rank-2 S-matrix prefactor is not real for these exponents");
    BigFloat kappa = BigFloat(1L, prec) / re;

    SMatrix out(2, prec);
    out.at(0, 0) = kappa;
    out.at(0, 1) = kappa * s;
    out.at(1, 0) = kappa * s;
    out.at(1, 1) = -kappa;
    return out;
}

DimM0Result dim_M0(const Rank2Params& p, mpfr_prec_t prec) {
    long k1 = p.k1_int();
    if (!p.extremal()) throw std::domain_error("not extremal");
    BigFloat x = rank2_X(p, +1, prec);
    BigFloat value = BigFloat::pow(BigFloat(1728L, prec), BigFloat(p.h, prec)) * x;
    if (k1 == -2) {
        if (p.h == Rational(1, 6)) throw std::domain_error("degenerate parameter h = 1/6");
        value = value * BigFloat((1 + 6 * p.h) / (1 - 6 * p.h), prec);
    }
    if (value.is_negative()) value = -value;  // sign of X chosen for positivity

    DimM0Result out{value, false, Integer(0)};
    out.rounded = value.round_to_integer();
    BigFloat dist = value.distance_to_integer();
    out.integral = !(dist > BigFloat(1e-6, prec));
    return out;
}

Rank2Character rank2_extremal_character(const Rank2Params& p, size_t n_terms,
                                        mpfr_prec_t prec) {
    if (!p.extremal()) throw std::domain_error("not extremal");
    long k1 = p.k1_int();
    size_t work = n_terms + 4;

    auto [j_form, kappa_form] = j_and_kappa(work);
    RationalSeries kq = kappa_form.series;

    auto coordinate = [&](const Rational& f, const Rational& other_f,
                          const Rational& hyp_c) -> RationalSeries {
        RationalSeries front = j_form.series.pow_frac(-f);
        RationalSeries tail = substitute(hyp2f1(f, f + Rational(1, 3), hyp_c, work), kq);
        return front * tail;
    };
    RationalSeries v1 = coordinate(p.f1, p.f2, 1 - p.h);
    RationalSeries v2 = coordinate(p.f2, p.f1, 1 + p.h);

    std::vector<RationalSeries> row = {v1, v2};
    if (k1 == -4) {
        RationalSeries e4 = eisenstein(4, work).series;
        RationalSeries eta8 = eta_quotient({{Rational(1), -8}}, work);
        for (auto& f : row) f = f * e4 * eta8;
    } else if (k1 == -2) {
        if (p.h == Rational(1, 6)) throw std::domain_error("degenerate parameter h = 1/6");
        RationalSeries eta4 = eta_quotient({{Rational(1), -4}}, work);
        Rational scalar = Rational(12) / (1 - 6 * p.h);
        for (auto& f : row) f = (f.theta_q() * eta4).scaled_rational(scalar);
    }

    // First coordinate is vacuum-normalized by construction.
    if (row[0].is_zero() || row[0].leading_coeff() != 1)
        throw std::runtime_error("rank-2 assembly lost vacuum normalization");
    // Second coordinate: strip the rational part of the leading value; the
    // numeric dim M_0 carries the rest.
    Rational lead2 = row[1].leading_coeff();
    RationalSeries unital2 = row[1].scaled_rational(Rational(1) / lead2);

    DimM0Result verdict = dim_M0(p, prec);

    Rank2Character out{CharacterVectorExpansion{}, verdict};
    CharacterCoordinate c1;
    c1.exponent = row[0].lead_exp();
    c1.rescale = Rational(1);
    c1.series = row[0].truncated_terms(n_terms);
    out.expansion.coords.push_back(std::move(c1));

    CharacterCoordinate c2;
    c2.exponent = unital2.lead_exp();
    if (verdict.integral) {
        c2.rescale = Rational(verdict.rounded);
        c2.series = unital2.scaled_rational(Rational(verdict.rounded)).truncated_terms(n_terms);
    } else {
        c2.series = unital2.truncated_terms(n_terms);
    }
    out.expansion.coords.push_back(std::move(c2));
    return out;
}

}  // namespace vvmf
