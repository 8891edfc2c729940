#pragma once

#include <optional>

#include "vvmf/conformal.hpp"

namespace vvmf {

// Gauss hypergeometric series 2F1(a, b; c; K) as an exact K-series with
// n_terms coefficients. Throws when (c)_n vanishes inside the window.
RationalSeries hyp2f1(const Rational& a, const Rational& b, const Rational& c, size_t n_terms);

// Gamma at a rational argument. Relative error is well inside
// 2^-(precision-8) for |x| <= 50 (correctly rounded by the backend).
BigFloat gamma_rational(const Rational& x, mpfr_prec_t prec);

// Central charge / conformal weight bookkeeping for a rank-2 VOA candidate
// with exponents e_1 = -c/24, e_2 = h - c/24.
struct Rank2Params {
    Rational c;
    Rational h;
    Rational e1, e2;  // cusp exponents
    Rational f1, f2;  // eta-stripped exponents, f_1 + f_2 = 1/6
    Rational k1;      // minimal weight 6 Tr(L) - 1 = 6h - c/2 - 1

    Rank2Params(const Rational& c_in, const Rational& h_in);
    bool extremal() const { return k1 == 0 || k1 == -2 || k1 == -4; }
    long k1_int() const;
};

// Symmetrization scalar of the rank-2 S-matrix, evaluated two independent
// ways (the Gamma-product form in the (f_1, f_2) variables and its
// duplication-formula simplification in h); both are computed and must agree.
// sign picks the square root branch. Throws at Gamma poles and on a negative
// radicand.
BigFloat rank2_X(const Rank2Params& p, int sign, mpfr_prec_t prec);

// Third evaluation route via the hypergeometric value at 1, valid h > -5/6.
BigFloat rank2_X_gauss(const Rank2Params& p, int sign, mpfr_prec_t prec);

// Symmetric 2x2 S-matrix for exponents (e_1, e_2):
//   (e^{2 pi i (2e1+e2)} - e^{2 pi i (e1+2e2)})^{-1} [[1, s],[s, -1]],
// s = sqrt(1 - 2 cos(2 pi (e1 - e2))). Errors when the prefactor fails to be
// real or the radicand is negative. rho(T) is diag(e^{2 pi i e_j}), carried
// by the exponents themselves.
SMatrix rank2_S(const Rational& e1, const Rational& e2, int sign, mpfr_prec_t prec);

// dim M_0 of the nontrivial module in the extremal cases:
//   1728^h X               (k1 = 0 or -4)
//   (1+6h)/(1-6h) 1728^h X (k1 = -2)
// with the sign of X chosen to make the value positive.
struct DimM0Result {
    BigFloat value;
    bool integral = false;
    Integer rounded;
};
DimM0Result dim_M0(const Rank2Params& p, mpfr_prec_t prec = BigFloat::kDefaultPrecision);

// Extremal character vector assembly (the closed rank-2 table): coordinate 1
// is exact and vacuum-normalized; coordinate 2 is the unital rational series
// whose true leading coefficient is the numeric dim M_0, folded in exactly
// when the integrality verdict holds.
struct Rank2Character {
    CharacterVectorExpansion expansion;
    DimM0Result dim_m0;
};
Rank2Character rank2_extremal_character(const Rank2Params& p, size_t n_terms,
                                        mpfr_prec_t prec = BigFloat::kDefaultPrecision);

}  // namespace vvmf
