#pragma once

#include <string>
#include <vector>

#include "vvmf/qseries.hpp"

namespace vvmf {

// Rational local exponents (e_1, ..., e_d) at the cusp, pairwise distinct
// mod Z (the non-logarithmic regime).
class ExponentTuple {
  public:
    explicit ExponentTuple(std::vector<Rational> exps);

    size_t size() const { return exps_.size(); }
    const Rational& operator[](size_t i) const { return exps_[i]; }
    const std::vector<Rational>& values() const { return exps_; }
    Rational trace() const;

    bool operator==(const ExponentTuple&) const = default;

  private:
    std::vector<Rational> exps_;
};

// Fuchsian operator sum_j A_j(K) theta^j on the K-line, theta = K d/dK.
// A_j is stored as its K-coefficient list; the recurrence polynomials
// Q_k(X) = sum_j [K^k] A_j(K) X^j are derived on demand.
template <class R>
struct ThetaOde {
    // theta_coeffs[j][k] = coefficient of K^k in A_j.
    std::vector<std::vector<R>> theta_coeffs;

    long degree() const { return static_cast<long>(theta_coeffs.size()) - 1; }

    long k_degree() const {
        size_t d = 0;
        for (const auto& p : theta_coeffs) d = std::max(d, p.size());
        return static_cast<long>(d) - 1;
    }

    // Q_k(X) coefficients, X^0 first. Instantiated over exact rings
    // (Rational, RatFun), where R(0) is the additive identity.
    std::vector<R> indicial_poly(long k) const {
        std::vector<R> q;
        for (const auto& a_j : theta_coeffs) {
            if (k < static_cast<long>(a_j.size()))
                q.push_back(a_j[static_cast<size_t>(k)]);
            else
                q.push_back(R(0));
        }
        return q;
    }
};

template <class R>
R eval_poly(const std::vector<R>& coeffs, const R& x) {
    if (coeffs.empty()) throw std::domain_error("evaluating empty polynomial");
    R acc = coeffs.back();
    for (size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// All Q_k, k = 0..degree.
template <class R>
std::vector<std::vector<R>> indicial_data(const ThetaOde<R>& ode) {
    std::vector<std::vector<R>> out;
    for (long k = 0; k <= ode.degree(); ++k) out.push_back(ode.indicial_poly(k));
    return out;
}

// Degree-2 weight-0 operator (6-6K) theta^2 - (2K+1) theta + 6 alpha with
// alpha the product of the two exponents (their sum must be 1/6).
template <class R>
ThetaOde<R> rank2_theta_ode(const R& alpha) {
    ThetaOde<R> ode;
    R six = R(6), one = R(1), two = R(2);
    ode.theta_coeffs = {
        {alpha * six},
        {-one, -two},
        {six, -six},
    };
    return ode;
}

// Degree-4 weight-0 operator with scalar parameters (a, b, c) of the monic
// MLDE D^4 + a E4 D^2 + b E6 D + c E4^2.
template <class R>
ThetaOde<R> rank4_theta_ode(const R& a, const R& b, const R& c) {
    ThetaOde<R> ode;
    auto q = [](long num, long den) { return rat(num, den); };
    R a0k0 = c;
    R a1k0 = a * q(-1, 6) + b - R(q(1, 36));
    R a1k1 = a * q(-1, 3) + b * R(-1) - R(q(1, 9));
    R a1k2 = R(q(2, 9));
    R a2k0 = a + R(q(11, 36));
    R a2k1 = a * R(-1) - R(q(7, 9));
    R a2k2 = R(q(11, 9));
    ode.theta_coeffs = {
        {a0k0},
        {a1k0, a1k1, a1k2},
        {a2k0, a2k1, a2k2},
        {R(-1), R(-1), R(2)},
        {R(1), R(-2), R(1)},
    };
    return ode;
}

// Elementary symmetric polynomials of the entries.
template <class R>
std::vector<R> elementary_symmetric(const std::vector<R>& xs) {
    std::vector<R> sigma(xs.size() + 1, R(0));
    sigma[0] = R(1);
    size_t used = 0;
    for (const auto& x : xs) {
        ++used;
        for (size_t k = used; k >= 1; --k) sigma[k] = sigma[k] + sigma[k - 1] * x;
    }
    return sigma;
}

// Map from a trace-1 exponent 4-tuple to the (a, b, c) of the monic MLDE:
// a = sigma_2 - 11/36, b = a/6 + 1/36 - sigma_3, c = sigma_4.
template <class R>
void rank4_symmetric_map(const std::vector<R>& e, R& a, R& b, R& c) {
    auto sigma = elementary_symmetric(e);
    a = sigma[2] - R(Rational(11, 36));
    b = a * R(Rational(1, 6)) + R(Rational(1, 36)) - sigma[3];
    c = sigma[4];
}

// Scalar coefficient attached to one D^order term of a monic MLDE, as a
// monomial in E4 and E6 whose weight fills the operator to weight 2*degree.
struct MldeTerm {
    long order = 0;
    Rational scalar;
    int e4_pow = 0;
    int e6_pow = 0;
};

// Monic weight-0 MLDE D^d + sum scalar * E4^i E6^j * D^order.
struct MonicMlde {
    long degree = 0;
    std::vector<MldeTerm> terms;
};

// Builds the degree-2 or degree-4 theta-form operator from cusp exponents.
// Rank 2 takes the eta-stripped exponents (f_1, f_2) with f_1 + f_2 = 1/6;
// rank 4 requires trace 1.
ThetaOde<Rational> theta_from_exponents(int rank, const ExponentTuple& e);

// Monic D-form from exponents: rank 4 is D^4 + a E4 D^2 + b E6 D + c E4^2
// (trace 1); rank 3 is the weight-consistent D^3 + a E4 D + b E6 (trace 1/2).
MonicMlde monic_from_symmetric(int rank, const ExponentTuple& e);

// Applies the operator to weight-0 q-series candidates via the modular
// derivative; the caller asserts the residuals vanish to truncation.
std::vector<RationalSeries> mlde_residual(const MonicMlde& mlde,
                                          const std::vector<RationalSeries>& candidates);

}  // namespace vvmf
