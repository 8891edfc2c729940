#include "vvmf/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vvmf {

namespace {
mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator+(const BigFloat& rhs) const {
    BigFloat out(max_prec(*this, rhs));
    mpfr_add(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-(const BigFloat& rhs) const {
    BigFloat out(max_prec(*this, rhs));
    mpfr_sub(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator*(const BigFloat& rhs) const {
    BigFloat out(max_prec(*this, rhs));
    mpfr_mul(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator/(const BigFloat& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("BigFloat division by zero");
    BigFloat out(max_prec(*this, rhs));
    mpfr_div(out.v_, v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision());
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt() const {
    if (is_negative()) throw std::domain_error("BigFloat sqrt of negative value");
    BigFloat out(precision());
    mpfr_sqrt(out.v_, v_, MPFR_RNDN);
    return out;
}

Integer BigFloat::round_to_integer() const {
    mpfr_t rounded;
    mpfr_init2(rounded, precision());
    mpfr_rint(rounded, v_, MPFR_RNDN);
    Integer out;
    mpfr_get_z(out.get_mpz_t(), rounded, MPFR_RNDN);
    mpfr_clear(rounded);
    return out;
}

BigFloat BigFloat::distance_to_integer() const {
    BigFloat nearest(Rational(round_to_integer()), precision());
    return (*this - nearest).abs();
}

std::string BigFloat::to_decimal(int digits) const {
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    if (s == nullptr) throw std::runtime_error("mpfr_get_str failed");
    std::string mantissa(s);
    mpfr_free_str(s);

    bool neg = !mantissa.empty() && mantissa[0] == '-';
    std::string d = neg ? mantissa.substr(1) : mantissa;
    std::string out;
    if (d.empty() || d.find_first_not_of('0') == std::string::npos) {
        out = "0";
    } else if (exp <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + d;
    } else if (static_cast<size_t>(exp) >= d.size()) {
        out = d + std::string(static_cast<size_t>(exp) - d.size(), '0');
    } else {
        out = d.substr(0, static_cast<size_t>(exp)) + "." + d.substr(static_cast<size_t>(exp));
    }
    return neg ? "-" + out : out;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sin(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_sin(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_cos(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::gamma(const BigFloat& x) {
    if (mpfr_integer_p(x.v_) && mpfr_sgn(x.v_) <= 0)
        throw std::domain_error("gamma pole at nonpositive integer");
    BigFloat out(x.precision());
    mpfr_gamma(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow(const BigFloat& base, const BigFloat& exponent) {
    BigFloat out(max_prec(base, exponent));
    mpfr_pow(out.v_, base.v_, exponent.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::exp(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_exp(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::log(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_log(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow2(long k, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_ui_2exp(out.v_, 1, static_cast<mpfr_exp_t>(k), MPFR_RNDN);
    return out;
}

}  // namespace vvmf
