#pragma once

#include <optional>
#include <vector>

#include "vvmf/mlde.hpp"

namespace vvmf {

// One Frobenius solution f(K) = K^e (1 + sum_{n>=1} a_n K^n), exponent and
// coefficients living in the ODE's coefficient ring.
template <class R>
struct FrobeniusSolution {
    R exponent;
    std::vector<R> coeffs;  // a_0 = 1 first
};

// Cleared form of the recurrence: numer[n] / denom[n] = a_n where
// denom[n] = prod_{m=1..n} Q_0(e + m). Avoids ring division entirely, which
// keeps the symbolic-parameter runs polynomial.
template <class R>
struct ClearedSolution {
    R exponent;
    std::vector<R> numer;
    std::vector<R> denom;
};

template <class R>
ClearedSolution<R> frobenius_cleared(const ThetaOde<R>& ode, const R& e, size_t n_terms) {
    long d = ode.degree();
    if (d < 1) throw std::domain_error("degenerate operator");
    auto q_polys = indicial_data(ode);
    R q0_at_e = eval_poly(q_polys[0], e);
    if (!(q0_at_e == R(0)))
        throw std::domain_error("exponent is not a root of the indicial polynomial");

    ClearedSolution<R> out;
    out.exponent = e;
    out.numer.reserve(n_terms);
    out.denom.reserve(n_terms);
    out.numer.push_back(R(1));
    out.denom.push_back(R(1));

    // q0_shift[m] = Q_0(e + m), m >= 1.
    std::vector<R> q0_shift = {R(1)};
    for (size_t n = 1; n < n_terms; ++n) {
        R arg = e + R(static_cast<long>(n));
        R q0n = eval_poly(q_polys[0], arg);
        if (q0n == R(0)) throw std::domain_error("resonant exponent");
        q0_shift.push_back(q0n);
        out.denom.push_back(out.denom.back() * q0n);

        // N_n = -sum_k Q_k(e+n-k) N_{n-k} prod_{m=n-k+1..n-1} Q_0(e+m).
        R acc(0);
        for (long k = 1; k <= std::min<long>(d, static_cast<long>(n)); ++k) {
            R arg_k = e + R(static_cast<long>(n) - k);
            R qk = eval_poly(q_polys[static_cast<size_t>(k)], arg_k);
            if (qk == R(0)) continue;
            R prod = qk * out.numer[n - static_cast<size_t>(k)];
            for (long m = static_cast<long>(n) - k + 1; m <= static_cast<long>(n) - 1; ++m)
                prod = prod * q0_shift[static_cast<size_t>(m)];
            acc = acc + prod;
        }
        out.numer.push_back(-acc);
    }
    return out;
}

// Normalized Frobenius recurrence: a_0 = 1 and
// a_n = -sum_k Q_k(e+n-k)/Q_0(e+n) a_{n-k}.
template <class R>
FrobeniusSolution<R> frobenius_solve(const ThetaOde<R>& ode, const R& e, size_t n_terms) {
    long d = ode.degree();
    if (d < 1) throw std::domain_error("degenerate operator");
    auto q_polys = indicial_data(ode);
    R q0_at_e = eval_poly(q_polys[0], e);
    if (!(q0_at_e == R(0)))
        throw std::domain_error("exponent is not a root of the indicial polynomial");

    FrobeniusSolution<R> out;
    out.exponent = e;
    out.coeffs.reserve(n_terms);
    out.coeffs.push_back(R(1));
    for (size_t n = 1; n < n_terms; ++n) {
        R arg = e + R(static_cast<long>(n));
        R q0n = eval_poly(q_polys[0], arg);
        if (q0n == R(0)) throw std::domain_error("resonant exponent");
        R acc(0);
        for (long k = 1; k <= std::min<long>(d, static_cast<long>(n)); ++k) {
            R arg_k = e + R(static_cast<long>(n) - k);
            R qk = eval_poly(q_polys[static_cast<size_t>(k)], arg_k);
            acc = acc + qk * out.coeffs[n - static_cast<size_t>(k)];
        }
        out.coeffs.push_back(-(acc / q0n));
    }
    return out;
}

// Solves one coordinate per exponent, deterministic input order.
std::vector<FrobeniusSolution<Rational>> family_solve(const ThetaOde<Rational>& ode,
                                                      const ExponentTuple& e, size_t n_terms);

// K-expansion of a rational solution as a series, K^e stripped to exponent 0:
// 1 + a_1 K + a_2 K^2 + ...
RationalSeries unital_k_series(const FrobeniusSolution<Rational>& sol);

// One coordinate of a character vector: exponent, unital rational q-series,
// and the out-of-band leading scalar. Before rescaling the true leading
// coefficient is prefactor = 1728^e; a supplied rescale replaces it and is
// folded into the stored coefficients.
struct CharacterCoordinate {
    Rational exponent;
    std::optional<Prefactor> prefactor;
    std::optional<Rational> rescale;
    RationalSeries series;
};

struct CharacterVectorExpansion {
    std::vector<CharacterCoordinate> coords;
};

// q-expansion of a Frobenius solution vector by substituting K = 1728/j.
// With no rescale, coordinate j is 1728^(e_j) q^(e_j) (1 + O(q)) and the
// stored series is the unital rational factor. With a rescale vector, the
// stored series is rescale_j * (unital factor) and no prefactor is attached.
// kappa may carry a precomputed K/1728 series to share across calls.
CharacterVectorExpansion to_q_expansion(const std::vector<FrobeniusSolution<Rational>>& sols,
                                        size_t n_terms,
                                        const std::optional<std::vector<Rational>>& rescale
                                            = std::nullopt,
                                        const std::optional<RationalSeries>& kappa
                                            = std::nullopt);

// Denominator growth diagnostics. Characters clear to integers on the q-side
// after leading normalization, so their running denominator lcm freezes; junk
// specializations keep growing. The K-side coefficients of genuine characters
// can still grow (the composition with K(q) is what clears them), so the
// scan gates on q-expansions.
struct DenominatorProfile {
    std::vector<Integer> lcm_by_term;  // running lcm of coefficient denominators
    bool stabilized = false;           // lcm unchanged over the trailing window
};

DenominatorProfile denominator_profile(const std::vector<Rational>& coeffs,
                                       size_t window = 10);
DenominatorProfile denominator_profile(const RationalSeries& series, size_t window = 10);
DenominatorProfile denominator_profile(const FrobeniusSolution<Rational>& sol,
                                       size_t window = 10);

}  // namespace vvmf
