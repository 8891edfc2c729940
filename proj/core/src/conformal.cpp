#include "vvmf/conformal.hpp"

#include <sstream>
#include <stdexcept>

namespace vvmf {

BigFloat SMatrix::symmetry_defect() const {
    BigFloat worst(prec_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = i + 1; j < dim_; ++j) {
            BigFloat d = (at(i, j) - at(j, i)).abs();
            if (d > worst) worst = d;
        }
    return worst;
}

BigFloat SMatrix::involution_defect() const {
    BigFloat worst(prec_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            BigFloat acc(prec_);
            for (size_t k = 0; k < dim_; ++k) acc = acc + at(i, k) * at(k, j);
            if (i == j) acc = acc - BigFloat(1L, prec_);
            if (acc.abs() > worst) worst = acc.abs();
        }
    return worst;
}

bool FusionTensor::nonnegative_integral(const BigFloat& tol, std::string* witness) const {
    for (size_t l = 0; l < dim_; ++l)
        for (size_t m = 0; m < dim_; ++m)
            for (size_t n = 0; n < dim_; ++n) {
                const BigFloat& v = at(l, m, n);
                if (v.distance_to_integer() > tol || v.round_to_integer() < 0) {
                    if (witness) {
                        std::ostringstream os;
                        os << "fusion N^" << n << "_{" << l << "," << m
                           << "} = " << v.to_decimal(12);
                        *witness = os.str();
                    }
                    return false;
                }
            }
    return true;
}

bool FusionTensor::has_negative_rule(const BigFloat& tol, std::string* witness) const {
    for (size_t l = 0; l < dim_; ++l)
        for (size_t m = 0; m < dim_; ++m)
            for (size_t n = 0; n < dim_; ++n) {
                const BigFloat& v = at(l, m, n);
                if (v.distance_to_integer() <= tol && v.round_to_integer() < 0) {
                    if (witness) {
                        std::ostringstream os;
                        os << "fusion N^" << n << "_{" << l << "," << m
                           << "} = " << v.to_decimal(12);
                        *witness = os.str();
                    }
                    return true;
                }
            }
    return false;
}

FusionTensor fusion(const SMatrix& s, size_t vacuum_index) {
    size_t d = s.dim();
    if (vacuum_index >= d) throw std::domain_error("vacuum index out of range");
    BigFloat tol = BigFloat::pow2(-static_cast<long>(s.precision()) / 2, s.precision());
    for (size_t j = 0; j < d; ++j)
        if (s.at(vacuum_index, j).abs() <= tol)
            throw std::domain_error("Verlinde denominator vanishes");

    FusionTensor out(d, s.precision());
    for (size_t l = 0; l < d; ++l)
        for (size_t m = l; m < d; ++m) {
            for (size_t n = 0; n < d; ++n) {
                BigFloat acc(s.precision());
                for (size_t sig = 0; sig < d; ++sig)
                    acc = acc + s.at(l, sig) * s.at(m, sig) * s.at(n, sig) / s.at(vacuum_index, sig);
                out.at(l, m, n) = acc;
                out.at(m, l, n) = acc;
            }
        }
    return out;
}

namespace {

bool coefficients_nonneg_integral(const RationalSeries& series, std::string* witness,
                                  size_t coord_index) {
    for (const auto& [exp, c] : series.terms()) {
        if (!is_integer(c) || c < 0) {
            if (witness) {
                std::ostringstream os;
                os << "coordinate " << coord_index << ", coefficient of q^" << to_string(exp)
                   << " is " << to_string(c);
                *witness = os.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace

ConformalReport check_quasi_conformal(const CharacterVectorExpansion& expansion,
                                      const SMatrix& s, const ConformalOptions& opts) {
    ConformalReport rep;
    size_t d = expansion.coords.size();
    if (d != s.dim()) throw std::domain_error("candidate and S-matrix dimensions differ");
    if (opts.vacuum_index >= d) throw std::domain_error("vacuum index out of range");

    // (1) nonnegative integer Fourier coefficients, checked exactly on the
    // stored (rescaled) coefficients.
    rep.integral_nonnegative = true;
    for (size_t j = 0; j < d && rep.integral_nonnegative; ++j) {
        std::string w;
        if (!coefficients_nonneg_integral(expansion.coords[j].series, &w, j)) {
            rep.integral_nonnegative = false;
            if (rep.witness.empty()) rep.witness = w;
        }
    }

    // (2) vacuum coordinate leads with exactly 1.
    const auto& vac = expansion.coords[opts.vacuum_index].series;
    rep.vacuum_normalized = !vac.is_zero() && vac.leading_coeff() == 1;
    if (!rep.vacuum_normalized && rep.witness.empty())
        rep.witness = "vacuum coordinate leading coefficient is not 1";

    // (3) real symmetric within tolerance.
    BigFloat mtol = BigFloat::pow2(opts.matrix_tol_log2, s.precision());
    rep.s_real_symmetric = !(s.symmetry_defect() > mtol);
    if (!rep.s_real_symmetric && rep.witness.empty())
        rep.witness = "S-matrix symmetry defect " + s.symmetry_defect().to_decimal(8);

    // (4) vacuum row of S has no zero entry.
    rep.s_first_row_nonzero = true;
    for (size_t j = 0; j < d; ++j) {
        if (s.at(opts.vacuum_index, j).abs() <= mtol) {
            rep.s_first_row_nonzero = false;
            if (rep.witness.empty())
                rep.witness = "S vacuum row entry " + std::to_string(j) + " vanishes";
            break;
        }
    }

    // (5) rho(T) of finite order: exponents are rational by representation.
    rep.t_finite_order = true;

    rep.quasi_conformal = rep.integral_nonnegative && rep.vacuum_normalized &&
                          rep.s_real_symmetric && rep.s_first_row_nonzero && rep.t_finite_order;
    return rep;
}

ConformalReport check_conformal(const CharacterVectorExpansion& expansion, const SMatrix& s,
                                const ConformalOptions& opts) {
    ConformalReport rep = check_quasi_conformal(expansion, s, opts);
    BigFloat ftol(Rational(1), s.precision());
    ftol = ftol * BigFloat(opts.fusion_tol, s.precision());
    try {
        FusionTensor n = fusion(s, opts.vacuum_index);
        std::string w;
        rep.fusion_nonnegative = n.nonnegative_integral(ftol, &w);
        if (!*rep.fusion_nonnegative && rep.witness.empty()) rep.witness = w;
    } catch (const std::domain_error& err) {
        rep.fusion_nonnegative = false;
        if (rep.witness.empty()) rep.witness = err.what();
    }
    rep.conformal = rep.quasi_conformal && rep.fusion_nonnegative.value_or(false);
    return rep;
}

std::optional<IntegralityResult> integrality_scale(const RationalSeries& series,
                                                   size_t n_terms, const Integer& max_scale) {
    std::vector<Rational> coeffs;
    if (!series.is_zero()) {
        auto window = series.truncated_terms(n_terms);
        for (const auto& [exp, c] : window.terms()) coeffs.push_back(c);
    }
    if (coeffs.empty()) return IntegralityResult{Rational(1), {}};

    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : coeffs) {
        if (c < 0) return std::nullopt;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        Integer num = c.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    if (num_gcd == 0) return IntegralityResult{Rational(1), std::vector<Integer>(coeffs.size(), 0)};
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale > Rational(max_scale)) return std::nullopt;

    IntegralityResult out;
    out.scale = scale;
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Rational v = c * scale;
        out.coeffs.push_back(Integer(v.get_num()));
    }
    return out;
}

SignPrescreen sign_prescreen(const ExponentTuple& e, const ThetaOde<Rational>& ode,
                             const std::optional<RationalSeries>& kappa) {
    RationalSeries w = kappa ? kappa->truncated_terms(3) : kappa_over_1728(3);
    SignPrescreen out;
    out.all_consistent = true;
    for (size_t j = 0; j < e.size(); ++j) {
        auto sol = frobenius_solve(ode, e[j], 3);
        auto expansion = to_q_expansion({sol}, 3, std::nullopt, w);
        const auto& ser = expansion.coords[0].series;
        SignPrescreen::Coordinate c;
        c.b1 = ser.coeff_at(e[j] + 1);
        c.b2 = ser.coeff_at(e[j] + 2);
        c.consistent = (c.b1 >= 0) && (c.b2 >= 0);
        out.all_consistent = out.all_consistent && c.consistent;
        out.coords.push_back(std::move(c));
    }
    return out;
}

}  // namespace vvmf
