#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vvmf/puiseux.hpp"

namespace vvmf {

// Formal composition outer(inner): outer is read as a series in K on an
// integer-step grid (fractional leading exponent allowed), inner is the
// q-expansion substituted for K. The leading exponent of inner must be
// positive, and fractional powers of inner go through pow_frac on its unital
// part.
template <class R>
PuiseuxSeries<R> substitute(const PuiseuxSeries<R>& outer, const PuiseuxSeries<R>& inner,
                            std::optional<size_t> n_terms = std::nullopt) {
    using S = PuiseuxSeries<R>;
    using Traits = ring_traits<R>;
    if (inner.is_zero() || inner.lead_exp() <= 0)
        throw std::domain_error("composition diverges at cusp");

    typename S::Horizon cap;
    if (outer.horizon()) cap = *outer.horizon() * inner.lead_exp();

    if (outer.is_zero()) {
        if (outer.is_exact()) return S::zero(inner.step(), std::nullopt);
        return S::zero(inner.step(), cap);
    }
    if (!is_integer(outer.step()))
        throw std::domain_error("unsupported composition grid");

    long stride = static_cast<long>(outer.step().get_num().get_si());
    S base = stride == 1 ? inner : inner.pow_int(stride);

    const auto& a = outer.coeffs();
    S acc = S::constant(a.back());
    for (size_t i = a.size() - 1; i-- > 0;) {
        acc = acc * base + S::constant(a[i]);
    }

    Rational alpha = outer.lead_exp();
    if (is_integer(alpha)) {
        long p = static_cast<long>(alpha.get_num().get_si());
        if (p != 0) acc = acc * inner.pow_int(p);
    } else {
        R lead = inner.leading_coeff();
        R one = Traits::one(lead);
        if (!Traits::is_zero(lead - one))
            throw std::domain_error("non-unital base");
        acc = acc * inner.pow_frac(alpha);
    }
    acc = acc.truncated_to(cap);
    if (n_terms && !acc.is_zero()) acc = acc.truncated_terms(*n_terms);
    return acc;
}

// Modular form tagged with its weight; multiplication adds weights and the
// modular derivative raises the weight by two.
struct WeightedForm {
    int weight = 0;
    RationalSeries series;
    std::string tag;

    WeightedForm() = default;
    WeightedForm(int w, RationalSeries s, std::string t = "")
        : weight(w), series(std::move(s)), tag(std::move(t)) {}
};

WeightedForm operator*(const WeightedForm& f, const WeightedForm& g);
WeightedForm operator+(const WeightedForm& f, const WeightedForm& g);
WeightedForm operator-(const WeightedForm& f, const WeightedForm& g);

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n with
// n_terms stored coefficients. Only k in {2, 4, 6} is supported.
WeightedForm eisenstein(int k, size_t n_terms);

// Product of eta(q^scale)^power factors as an exact Puiseux series with
// n_terms stored terms. Scales are positive rationals; the q^(scale/24)
// prefactors are absorbed into the leading exponent.
RationalSeries eta_quotient(const std::vector<std::pair<Rational, int>>& factors, size_t n_terms);

// Discriminant cusp form Delta = eta(q)^24, weight 12.
WeightedForm delta(size_t n_terms);

// (j, K) with j = E4^3 / Delta and K = 1728 / j; both carry weight 0; j has
// n_terms coefficients from q^-1 and K has n_terms coefficients from q^1.
std::pair<WeightedForm, WeightedForm> j_and_kappa(size_t n_terms);

// K/1728 = q (1 + O(q)), the unital series substituted for K in q-expansions.
RationalSeries kappa_over_1728(size_t n_terms);

// k-th modular derivative D_k f = q df/dq - (k/12) E_2 f, weight k -> k+2.
WeightedForm mod_derivative(const WeightedForm& f);

}  // namespace vvmf
