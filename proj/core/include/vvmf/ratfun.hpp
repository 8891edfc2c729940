#pragma once

#include <string>
#include <vector>

#include "vvmf/rational.hpp"

namespace vvmf {

// Dense univariate polynomial over Q in a formal parameter (written "lambda"
// throughout). Coefficients are stored from degree 0 upward with no trailing
// zeros; the zero polynomial has an empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) { if (c != 0) coeffs_.push_back(c); }  // NOLINT: implicit
    Poly(long c) : Poly(Rational(c)) {}                            // NOLINT: implicit
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long k) const {
        return (k >= 0 && k < static_cast<long>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

    Rational evaluate(const Rational& x) const;

    // Quotient and remainder by a nonzero divisor.
    static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);
    static Poly gcd(const Poly& a, const Poly& b);

    // True when every coefficient is an integer.
    bool has_integer_coefficients() const;
    // lcm of coefficient denominators (1 for the zero polynomial).
    Integer denominator_lcm() const;

    std::string to_string(const std::string& var = "lambda") const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// Element of Q(lambda), kept normalized: reduced by the gcd, denominator monic
// and nonzero.
class RatFun {
  public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT: implicit
    RatFun(long c) : num_(Rational(c)), den_(Rational(1)) {}   // NOLINT: implicit
    RatFun(const Poly& p) : num_(p), den_(Rational(1)) {}      // NOLINT: implicit
    RatFun(Poly num, Poly den);

    static RatFun variable() { return RatFun(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& rhs) const;
    RatFun operator-(const RatFun& rhs) const;
    RatFun operator*(const RatFun& rhs) const;
    RatFun operator/(const RatFun& rhs) const;
    bool operator==(const RatFun& rhs) const;

    // Specialization at a rational point; throws if the denominator vanishes.
    Rational evaluate(const Rational& x) const;

    std::string to_string(const std::string& var = "lambda") const;

  private:
    Poly num_;
    Poly den_;
};

}  // namespace vvmf
