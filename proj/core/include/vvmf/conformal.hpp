#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vvmf/bigfloat.hpp"
#include "vvmf/frobenius.hpp"

namespace vvmf {

// Real d x d matrix representing rho(S) in the character basis.
class SMatrix {
  public:
    SMatrix(size_t dim, mpfr_prec_t prec)
        : dim_(dim), prec_(prec), entries_(dim * dim, BigFloat(prec)) {}

    size_t dim() const { return dim_; }
    mpfr_prec_t precision() const { return prec_; }
    const BigFloat& at(size_t i, size_t j) const { return entries_[i * dim_ + j]; }
    BigFloat& at(size_t i, size_t j) { return entries_[i * dim_ + j]; }

    // max |S_ij - S_ji|.
    BigFloat symmetry_defect() const;
    // max |(S^2 - I)_ij|.
    BigFloat involution_defect() const;

  private:
    size_t dim_;
    mpfr_prec_t prec_;
    std::vector<BigFloat> entries_;
};

// Rank-3 Verlinde tensor N^nu_{lambda mu}.
class FusionTensor {
  public:
    FusionTensor(size_t dim, mpfr_prec_t prec)
        : dim_(dim), entries_(dim * dim * dim, BigFloat(prec)) {}

    size_t dim() const { return dim_; }
    const BigFloat& at(size_t l, size_t m, size_t n) const {
        return entries_[(l * dim_ + m) * dim_ + n];
    }
    BigFloat& at(size_t l, size_t m, size_t n) {
        return entries_[(l * dim_ + m) * dim_ + n];
    }

    // All entries within tol of a nonnegative integer.
    bool nonnegative_integral(const BigFloat& tol, std::string* witness = nullptr) const;
    // Some entry within tol of a negative integer.
    bool has_negative_rule(const BigFloat& tol, std::string* witness = nullptr) const;

  private:
    size_t dim_;
    std::vector<BigFloat> entries_;
};

// N^nu_{lambda mu} = sum_sigma S_{lambda sigma} S_{mu sigma} S_{nu sigma} / S_{v sigma}
// for a real symmetric S, with v the vacuum row. Throws when the vacuum row
// has an entry below tolerance ("Verlinde denominator vanishes").
FusionTensor fusion(const SMatrix& s, size_t vacuum_index = 0);

struct ConformalOptions {
    size_t vacuum_index = 0;
    // Numeric tolerances: matrix identities at 256-bit default precision,
    // fusion integrality as its own coarser gate.
    long matrix_tol_log2 = -66;   // ~1e-20
    double fusion_tol = 1e-9;
};

// Verdicts for the five quasi-conformal conditions plus the fusion gate;
// every failed condition names a witness.
struct ConformalReport {
    bool integral_nonnegative = false;  // (1) exact, after the declared rescale
    bool vacuum_normalized = false;     // (2) leading coefficient exactly 1
    bool s_real_symmetric = false;      // (3) numeric symmetry check
    bool s_first_row_nonzero = false;   // (4) vacuum row of S
    bool t_finite_order = false;        // (5) rational exponents
    bool quasi_conformal = false;
    std::optional<bool> fusion_nonnegative;  // set by the conformal check
    bool conformal = false;
    std::string witness;  // first failure, human-readable
};

ConformalReport check_quasi_conformal(const CharacterVectorExpansion& expansion,
                                      const SMatrix& s, const ConformalOptions& opts = {});

ConformalReport check_conformal(const CharacterVectorExpansion& expansion, const SMatrix& s,
                                const ConformalOptions& opts = {});

// Smallest positive rational scale (at most max_scale) making every stored
// coefficient a nonnegative integer, together with the scaled coefficients.
// Absence (not an error) when no such scale exists.
struct IntegralityResult {
    Rational scale;
    std::vector<Integer> coeffs;
};
std::optional<IntegralityResult> integrality_scale(const RationalSeries& series,
                                                   size_t n_terms, const Integer& max_scale);

// Cheap two-coefficient sign gate: the first Fourier corrections of every
// coordinate must not force mixed signs (a global per-coordinate sign flip is
// free, so with a_0 = 1 the requirement is b_1, b_2 >= 0).
struct SignPrescreen {
    struct Coordinate {
        Rational b1;
        Rational b2;
        bool consistent = false;
    };
    std::vector<Coordinate> coords;
    bool all_consistent = false;
};

SignPrescreen sign_prescreen(const ExponentTuple& e, const ThetaOde<Rational>& ode,
                             const std::optional<RationalSeries>& kappa = std::nullopt);

}  // namespace vvmf
