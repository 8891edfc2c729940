#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vvmf/families.hpp"

namespace vvmf {

// Exhaustive rank-4 exponent search: rational tuples with trace 1, bounded
// common denominator, pairwise distinct mod Z, collapsed to sorted tuples.
// Tuples pass a cheap sign gate, then the exact Frobenius pipeline with
// per-coordinate integrality scaling and the denominator-stabilization
// heuristic.
struct ScanConfig {
    long denominator_bound = 60;
    std::vector<long> denominators;  // explicit list; empty = 1..denominator_bound
    Rational exp_min = Rational(-2);
    Rational exp_max = Rational(2);
    size_t n_terms = 25;
    Integer rescale_bound = Integer(10000000);
    bool use_sign_prescreen = true;
    bool use_denominator_stabilization = true;
    size_t stabilization_terms = 40;
    size_t stabilization_window = 10;
    size_t workers = 1;
};

struct CharacterCandidate {
    std::vector<Rational> exponents;              // sorted ascending
    std::vector<Rational> scales;                 // minimal integrality scales
    std::vector<std::vector<Integer>> coeffs;     // scaled integer q-coefficients
    bool denominators_stable = true;
};

std::vector<CharacterCandidate> rank4_scan(const ScanConfig& cfg);

// Restriction of the search to the Gamma_0(3) line lambda = n/12: the family
// coordinates themselves (F, or G = eta^-4 D_0 F), their sign and integrality
// gates, and the fusion rules of the family S-matrix with the vacuum tried at
// every coordinate.
struct LineScanConfig {
    bool family_g = false;  // false: F line, true: G line
    long numerator_min = -8;
    long numerator_max = -1;
    bool irreducible_only = true;
    // Demand one sign per coordinate (forced flips); the G line relaxes this
    // and gates on integrality and fusion alone.
    bool require_nonnegative = true;
    size_t n_terms = 25;
    Integer rescale_bound = Integer(10000000);
    mpfr_prec_t prec = BigFloat::kDefaultPrecision;
};

struct LineCandidate {
    Rational lambda;
    bool sign_ok = false;
    bool integral = false;       // every coordinate clears within the bound
    bool conformal = false;      // some vacuum passes the full check
    std::optional<size_t> vacuum;
    std::vector<Rational> scales;
    std::vector<std::vector<Integer>> coeffs;
    std::string witness;         // first failure reason, when not conformal
};

std::vector<LineCandidate> gamma03_line_scan(const LineScanConfig& cfg);

}  // namespace vvmf
