#include "vvmf/frobenius.hpp"

#include <stdexcept>

namespace vvmf {

std::vector<FrobeniusSolution<Rational>> family_solve(const ThetaOde<Rational>& ode,
                                                      const ExponentTuple& e, size_t n_terms) {
    std::vector<FrobeniusSolution<Rational>> out;
    out.reserve(e.size());
    for (size_t j = 0; j < e.size(); ++j) out.push_back(frobenius_solve(ode, e[j], n_terms));
    return out;
}

RationalSeries unital_k_series(const FrobeniusSolution<Rational>& sol) {
    std::vector<Rational> coeffs = sol.coeffs;
    auto n = static_cast<long>(coeffs.size());
    return RationalSeries::make(0, 1, std::move(coeffs), Rational(n));
}

CharacterVectorExpansion to_q_expansion(const std::vector<FrobeniusSolution<Rational>>& sols,
                                        size_t n_terms,
                                        const std::optional<std::vector<Rational>>& rescale,
                                        const std::optional<RationalSeries>& kappa) {
    if (rescale && rescale->size() != sols.size())
        throw std::domain_error("rescale length does not match coordinate count");
    RationalSeries w = kappa ? *kappa : kappa_over_1728(n_terms + 2);

    CharacterVectorExpansion out;
    out.coords.reserve(sols.size());
    for (size_t j = 0; j < sols.size(); ++j) {
        const auto& sol = sols[j];
        if (sol.coeffs.size() < n_terms)
            throw std::domain_error("solution truncation shorter than requested q-expansion");
        // f(K) = K^e (1 + sum a_n K^n) = 1728^e w^e sum (a_n 1728^n) w^n.
        std::vector<Rational> scaled(n_terms);
        Rational p1728(1);
        for (size_t n = 0; n < n_terms; ++n) {
            scaled[n] = sol.coeffs[n] * p1728;
            p1728 *= 1728;
        }
        auto outer = RationalSeries::make(sol.exponent, 1, std::move(scaled),
                                          sol.exponent + static_cast<long>(n_terms));
        RationalSeries qser = substitute(outer, w);
        // Report exactly the requested window.
        qser = qser.truncated_to(sol.exponent + static_cast<long>(n_terms));

        CharacterCoordinate coord;
        coord.exponent = sol.exponent;
        if (rescale) {
            coord.rescale = (*rescale)[j];
            coord.series = qser.scaled_rational((*rescale)[j]);
        } else {
            coord.prefactor = Prefactor{Rational(1728), sol.exponent};
            coord.series = std::move(qser);
        }
        out.coords.push_back(std::move(coord));
    }
    return out;
}

DenominatorProfile denominator_profile(const std::vector<Rational>& coeffs, size_t window) {
    DenominatorProfile out;
    Integer acc(1);
    for (const auto& c : coeffs) {
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
        out.lcm_by_term.push_back(acc);
    }
    size_t n = out.lcm_by_term.size();
    if (n > window)
        out.stabilized = (out.lcm_by_term[n - 1] == out.lcm_by_term[n - 1 - window]);
    return out;
}

DenominatorProfile denominator_profile(const RationalSeries& series, size_t window) {
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : series.terms()) coeffs.push_back(c);
    return denominator_profile(coeffs, window);
}

DenominatorProfile denominator_profile(const FrobeniusSolution<Rational>& sol, size_t window) {
    return denominator_profile(sol.coeffs, window);
}

}  // namespace vvmf
