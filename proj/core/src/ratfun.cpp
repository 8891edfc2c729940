#include "vvmf/ratfun.hpp"

#include <stdexcept>

namespace vvmf {

Poly Poly::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return Poly(std::move(out));
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = num.coeffs_;
    long dd = den.degree();
    Rational lead = den.leading();
    std::vector<Rational> q;
    if (num.degree() >= dd) q.assign(static_cast<size_t>(num.degree() - dd) + 1, Rational(0));
    for (long k = num.degree(); k >= dd; --k) {
        if (r[static_cast<size_t>(k)] == 0) continue;
        Rational f = r[static_cast<size_t>(k)] / lead;
        q[static_cast<size_t>(k - dd)] = f;
        for (long i = 0; i <= dd; ++i)
            r[static_cast<size_t>(k - dd + i)] -= f * den.coeffs_[static_cast<size_t>(i)];
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
        // Keep coefficients small: make the leading coefficient 1 each round.
        if (!y.is_zero()) {
            Rational inv = Rational(1) / y.leading();
            y = y * inv;
        }
    }
    if (x.is_zero()) return x;
    return x * (Rational(1) / x.leading());
}

bool Poly::has_integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

Integer Poly::denominator_lcm() const {
    Integer l(1);
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        bool unit = (a == 1) && k > 0;
        if (!unit) out += vvmf::to_string(a);
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational inv = Rational(1) / den_.leading();
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RatFun RatFun::operator-() const {
    RatFun out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFun RatFun::operator+(const RatFun& rhs) const {
    return RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun RatFun::operator-(const RatFun& rhs) const { return *this + (-rhs); }

RatFun RatFun::operator*(const RatFun& rhs) const {
    return RatFun(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun RatFun::operator/(const RatFun& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFun(num_ * rhs.den_, den_ * rhs.num_);
}

bool RatFun::operator==(const RatFun& rhs) const {
    return (num_ * rhs.den_) == (rhs.num_ * den_);
}

Rational RatFun::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d == 0) throw std::domain_error("rational function pole at specialization point");
    return num_.evaluate(x) / d;
}

std::string RatFun::to_string(const std::string& var) const {
    if (den_ == Poly(Rational(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace vvmf
