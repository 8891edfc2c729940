#include "vvmf/mlde.hpp"

#include <stdexcept>

namespace vvmf {

namespace {
bool distinct_mod_integers(const std::vector<Rational>& e) {
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
            if (is_integer(e[i] - e[j])) return false;
    return true;
}
}  // namespace

ExponentTuple::ExponentTuple(std::vector<Rational> exps) : exps_(std::move(exps)) {
    if (exps_.empty()) throw std::domain_error("empty exponent tuple");
    if (!distinct_mod_integers(exps_))
        throw std::domain_error("logarithmic case unsupported");
}

Rational ExponentTuple::trace() const {
    Rational t(0);
    for (const auto& x : exps_) t += x;
    return t;
}

ThetaOde<Rational> theta_from_exponents(int rank, const ExponentTuple& e) {
    if (rank == 2) {
        if (e.size() != 2) throw std::domain_error("rank 2 needs two exponents");
        if (e.trace() != Rational(1, 6)) throw std::domain_error("exponent trace mismatch");
        return rank2_theta_ode<Rational>(e[0] * e[1]);
    }
    if (rank == 4) {
        if (e.size() != 4) throw std::domain_error("rank 4 needs four exponents");
        if (e.trace() != 1) throw std::domain_error("exponent trace mismatch");
        Rational a, b, c;
        rank4_symmetric_map(e.values(), a, b, c);
        return rank4_theta_ode(a, b, c);
    }
    throw std::domain_error("unsupported rank for theta-form construction");
}

MonicMlde monic_from_symmetric(int rank, const ExponentTuple& e) {
    MonicMlde out;
    if (rank == 4) {
        if (e.size() != 4) throw std::domain_error("rank 4 needs four exponents");
        if (e.trace() != 1) throw std::domain_error("exponent trace mismatch");
        Rational a, b, c;
        rank4_symmetric_map(e.values(), a, b, c);
        out.degree = 4;
        out.terms = {{2, a, 1, 0}, {1, b, 0, 1}, {0, c, 2, 0}};
        return out;
    }
    if (rank == 3) {
        if (e.size() != 3) throw std::domain_error("rank 3 needs three exponents");
        if (e.trace() != Rational(1, 2)) throw std::domain_error("exponent trace mismatch");
        // Indicial cubic X(X-1/6)(X-1/3) + aX + b with roots e_1, e_2, e_3.
        auto sigma = elementary_symmetric(e.values());
        Rational a = sigma[2] - Rational(1, 18);
        Rational b = -sigma[3];
        out.degree = 3;
        out.terms = {{1, a, 1, 0}, {0, b, 0, 1}};
        return out;
    }
    throw std::domain_error("unsupported rank for monic MLDE construction");
}

std::vector<RationalSeries> mlde_residual(const MonicMlde& mlde,
                                          const std::vector<RationalSeries>& candidates) {
    // Generators long enough that truncation is governed by the candidates.
    size_t gen_terms = 4;
    for (const auto& f : candidates) {
        if (f.is_zero()) continue;
        if (!f.horizon()) {
            gen_terms = std::max(gen_terms, f.term_count() + 4);
        } else {
            Rational span = *f.horizon() - f.lead_exp();
            gen_terms = std::max(gen_terms, static_cast<size_t>(floor_int(span).get_ui()) + 4);
        }
    }
    WeightedForm e4 = eisenstein(4, gen_terms);
    WeightedForm e6 = eisenstein(6, gen_terms);

    std::vector<RationalSeries> residuals;
    residuals.reserve(candidates.size());
    for (const auto& f : candidates) {
        if (!f.is_zero() && f.term_count() < static_cast<size_t>(mlde.degree))
            throw std::domain_error("candidate truncation too short for residual check");
        std::vector<WeightedForm> d_powers;
        d_powers.emplace_back(0, f);
        for (long k = 1; k <= mlde.degree; ++k)
            d_powers.push_back(mod_derivative(d_powers.back()));

        RationalSeries acc = d_powers[static_cast<size_t>(mlde.degree)].series;
        for (const auto& term : mlde.terms) {
            RationalSeries part = d_powers[static_cast<size_t>(term.order)].series;
            for (int i = 0; i < term.e4_pow; ++i) part = part * e4.series;
            for (int i = 0; i < term.e6_pow; ++i) part = part * e6.series;
            acc = acc + part.scaled_rational(term.scalar);
        }
        residuals.push_back(acc);
    }
    return residuals;
}

}  // namespace vvmf
