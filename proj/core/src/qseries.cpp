#include "vvmf/qseries.hpp"

#include <stdexcept>

namespace vvmf {

WeightedForm operator*(const WeightedForm& f, const WeightedForm& g) {
    return {f.weight + g.weight, f.series * g.series};
}

WeightedForm operator+(const WeightedForm& f, const WeightedForm& g) {
    if (f.weight != g.weight) throw std::domain_error("adding forms of different weight");
    return {f.weight, f.series + g.series};
}

WeightedForm operator-(const WeightedForm& f, const WeightedForm& g) {
    if (f.weight != g.weight) throw std::domain_error("adding forms of different weight");
    return {f.weight, f.series - g.series};
}

WeightedForm eisenstein(int k, size_t n_terms) {
    if (n_terms == 0) throw std::domain_error("eisenstein needs at least one term");
    Rational factor;  // -2k / B_k
    switch (k) {
        case 2: factor = rat(-24); break;   // B_2 = 1/6
        case 4: factor = rat(240); break;   // B_4 = -1/30
        case 6: factor = rat(-504); break;  // B_6 = 1/42
        default: throw std::domain_error("unsupported Eisenstein weight");
    }
    std::vector<Rational> coeffs(n_terms, Rational(0));
    coeffs[0] = 1;
    for (size_t n = 1; n < n_terms; ++n)
        coeffs[n] = factor * Rational(sigma(k - 1, static_cast<long>(n)));
    auto series = RationalSeries::make(0, 1, std::move(coeffs), Rational(static_cast<long>(n_terms)));
    return {k, std::move(series), "E" + std::to_string(k)};
}

RationalSeries eta_quotient(const std::vector<std::pair<Rational, int>>& factors,
                            size_t n_terms) {
    if (n_terms == 0) throw std::domain_error("eta_quotient needs at least one term");
    Rational lead(0);
    Integer step_den(1);
    for (const auto& [scale, power] : factors) {
        if (scale <= 0) throw std::domain_error("eta scale must be positive");
        lead += scale * power / 24;
        mpz_lcm(step_den.get_mpz_t(), step_den.get_mpz_t(), scale.get_den_mpz_t());
    }
    Rational step(Integer(1), step_den);
    step.canonicalize();

    // Unital part: product over factors of prod_n (1 - q^(scale n))^power,
    // each factor expanded by the integer binomial theorem (sparse in q).
    Rational span = step * static_cast<long>(n_terms);
    RationalSeries acc = RationalSeries::constant(Rational(1)).truncated_to(span);
    for (const auto& [scale, power] : factors) {
        long abs_p = power < 0 ? -power : power;
        bool inverted = power < 0;
        for (long n = 1; scale * n < span; ++n) {
            Rational e = scale * n;
            long max_k = 1;
            while (e * (max_k + 1) < span) ++max_k;
            // (1 - x)^p expanded in x = q^(scale n): finite for p >= 0,
            // C(|p| + k - 1, k) x^k for p < 0.
            std::vector<Rational> coeffs;
            long top = inverted ? max_k : std::min(max_k, abs_p);
            coeffs.reserve(static_cast<size_t>(top) + 1);
            for (long kk = 0; kk <= top; ++kk) {
                Rational c = inverted ? binomial(Rational(abs_p + kk - 1), kk)
                                      : binomial(Rational(abs_p), kk);
                if (!inverted && (kk % 2 == 1)) c = -c;
                coeffs.push_back(c);
            }
            auto factor_series = RationalSeries::make(0, e, std::move(coeffs), span);
            acc = acc * factor_series;
        }
    }
    return acc.shifted(lead).truncated_to(lead + span);
}

WeightedForm delta(size_t n_terms) {
    return {12, eta_quotient({{Rational(1), 24}}, n_terms), "Delta"};
}

std::pair<WeightedForm, WeightedForm> j_and_kappa(size_t n_terms) {
    size_t m = n_terms + 2;
    auto e4 = eisenstein(4, m);
    auto d = delta(m);
    auto e4cubed = e4.series * e4.series * e4.series;
    auto j = (e4cubed / d.series).truncated_to(Rational(static_cast<long>(n_terms)) - 1);
    auto kappa = (RationalSeries::constant(Rational(1728)) / j)
                     .truncated_to(Rational(static_cast<long>(n_terms)) + 1);
    return {WeightedForm{0, std::move(j), "j"}, WeightedForm{0, std::move(kappa), "K"}};
}

RationalSeries kappa_over_1728(size_t n_terms) {
    auto [j, kappa] = j_and_kappa(n_terms);
    return kappa.series.scaled_rational(Rational(1, 1728));
}

WeightedForm mod_derivative(const WeightedForm& f) {
    RationalSeries theta = f.series.theta_q();
    if (f.weight == 0) return {2, std::move(theta)};
    if (f.series.is_zero()) return {f.weight + 2, theta};
    // E_2 needs enough terms that the product is as valid as f itself.
    Rational lead = f.series.lead_exp();
    size_t need = 1;
    if (f.series.horizon()) {
        Rational span = *f.series.horizon() - lead;
        need = static_cast<size_t>(floor_int(span).get_ui()) + 2;
    } else {
        need = f.series.term_count() + 2;
    }
    auto e2 = eisenstein(2, need);
    RationalSeries correction = (e2.series * f.series).scaled_rational(rat(-f.weight, 12));
    return {f.weight + 2, theta + correction};
}

}  // namespace vvmf
