#pragma once

#include <functional>
#include <string>

#include "vvmf/hypergeom.hpp"

namespace vvmf {

// The induced rank-4 family attached to Gamma_0(3). Coordinates are computed
// from the eta-quotient Hauptmoduls with all arithmetic in Q: the complex
// root-of-unity twists of the q^(1/3)-line reduce to picking residue classes
// of exponents mod 1, and the irrational scalar 3^(6 lambda + 1/2) stays out
// of band as a prefactor.
struct Gamma03Family {
    Rational lambda;
    bool irreducible = true;        // 12*lambda not divisible by 3
    bool rational_scalars = true;   // 12*lambda an odd integer
    Rational a, b, c;               // monic MLDE parameters at this lambda
    CharacterVectorExpansion F;     // exponents (-l, l/3, (l+1)/3, (l+2)/3)
};

// MLDE parameters of the family: the (a, b, c) of
// D^4 + a E4 D^2 + b E6 D + c E4^2 at exponents (-l, l/3, (l+1)/3, (l+2)/3).
void gamma03_abc(const Rational& lambda, Rational& a, Rational& b, Rational& c);

// Same, symbolically over Q(lambda).
void gamma03_abc_symbolic(RatFun& a, RatFun& b, RatFun& c);

ExponentTuple gamma03_exponents(const Rational& lambda);

Gamma03Family gamma03_family(const Rational& lambda, size_t n_terms);

// G = eta^-4 D_0 F: exponents shift by -1/6, S-matrix negates.
Gamma03Family gamma03_G(const Rational& lambda, size_t n_terms);

// The conformal candidate obtained from G(-1/12) by the frozen permutation
// and rescales, with its closed-form S-matrix.
struct Gamma03H {
    CharacterVectorExpansion expansion;
    SMatrix smatrix;
};
Gamma03H gamma03_H(size_t n_terms, mpfr_prec_t prec = BigFloat::kDefaultPrecision);

// Degree-4 cover relation j z1^3 - (z1 + 27)(z1 + 243)^3 as a q-series; the
// caller asserts it vanishes to truncation.
RationalSeries belyi_residual(size_t n_terms);

// f1 = -D(z1)/z1, the weight-2 eigenform on Gamma_0(3).
WeightedForm gamma03_f1(size_t n_terms);

// z1 = (eta(q)/eta(q^3))^12 and the unital part of z2/729 on the q^(1/3) grid.
RationalSeries gamma03_z1(size_t n_terms);
RationalSeries gamma03_z2_unital(size_t n_terms);

// S-matrix of the diagonalized family (rows/columns in coordinate order of F).
SMatrix gamma03_family_smatrix(const Rational& lambda, mpfr_prec_t prec);

// Closed-form S-matrices printed with the rank-4 instances.
SMatrix hard_hexagon_smatrix(mpfr_prec_t prec);
SMatrix rank4_quasi_smatrix(mpfr_prec_t prec);
SMatrix table3_smatrix_s1(mpfr_prec_t prec);
SMatrix table3_smatrix_s2(mpfr_prec_t prec);
SMatrix h_smatrix(mpfr_prec_t prec);

// Reference data for the known rank-4 instances: exponents, the monic MLDE,
// the presentation rescales, the published leading Fourier coefficients per
// coordinate, and the attached S-matrix builder.
struct BuiltinInstance {
    std::string name;
    ExponentTuple exponents;
    MonicMlde mlde;
    std::vector<Rational> rescale;
    std::vector<std::vector<Integer>> reference_coeffs;
    std::function<SMatrix(mpfr_prec_t)> smatrix;
};

// Known names: "hard-hexagon", "rank4-quasi", "table3-row-1" .. "table3-row-4".
BuiltinInstance builtin_instance(const std::string& name);

}  // namespace vvmf
