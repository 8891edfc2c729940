#pragma once

#include <mpfr.h>

#include <string>

#include "vvmf/rational.hpp"

namespace vvmf {

// Arbitrary-precision binary float. Precision is carried by the value and is
// always set explicitly at construction; binary operations work at the larger
// of the operand precisions. Immutable in spirit: every operation returns a
// fresh value.
class BigFloat {
  public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;

    BigFloat() : BigFloat(kDefaultPrecision) {}
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(const Rational& value, mpfr_prec_t prec);
    BigFloat(long value, mpfr_prec_t prec);
    BigFloat(double value, mpfr_prec_t prec);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& rhs) const;
    BigFloat operator-(const BigFloat& rhs) const;
    BigFloat operator*(const BigFloat& rhs) const;
    BigFloat operator/(const BigFloat& rhs) const;

    bool operator==(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_) == 0; }
    bool operator<(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_) < 0; }
    bool operator<=(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_) <= 0; }
    bool operator>(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_) > 0; }
    bool operator>=(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_) >= 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    BigFloat abs() const;
    BigFloat sqrt() const;  // throws std::domain_error on negative input

    // Nearest integer, as an exact Integer.
    Integer round_to_integer() const;
    // |x - nearest integer|.
    BigFloat distance_to_integer() const;

    // Decimal rendering with the given number of significant digits.
    std::string to_decimal(int digits = 40) const;

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat sin(const BigFloat& x);
    static BigFloat cos(const BigFloat& x);
    // Gamma function; throws std::domain_error at nonpositive integers.
    static BigFloat gamma(const BigFloat& x);
    static BigFloat pow(const BigFloat& base, const BigFloat& exponent);
    static BigFloat exp(const BigFloat& x);
    static BigFloat log(const BigFloat& x);
    // 2^(-k) at the given precision, for tolerance constants.
    static BigFloat pow2(long k, mpfr_prec_t prec);

  private:
    mpfr_t v_;
};

inline BigFloat bf(const Rational& r, mpfr_prec_t prec = BigFloat::kDefaultPrecision) {
    return BigFloat(r, prec);
}

}  // namespace vvmf
