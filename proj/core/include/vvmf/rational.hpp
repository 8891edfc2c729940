#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vvmf {

// Arbitrary-precision rational, the exact coefficient ring used everywhere a
// verdict depends on integrality.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

// Renders as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Largest integer n with n <= r.
inline Integer floor_int(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// gcd of two nonnegative rationals: the positive generator of a Z + b Z.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rational g(num, den);
    g.canonicalize();
    return g;
}

inline Rational pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to negative power");
        return Rational(1) / pow(base, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

// Rising factorial (x)_n = x (x+1) ... (x+n-1).
inline Rational pochhammer(const Rational& x, long n) {
    Rational out(1);
    Rational t = x;
    for (long i = 0; i < n; ++i, t += 1) out *= t;
    return out;
}

inline Rational factorial(long n) {
    Rational out(1);
    for (long i = 2; i <= n; ++i) out *= i;
    return out;
}

// Generalized binomial coefficient C(x, k) for rational x, integer k >= 0.
inline Rational binomial(const Rational& x, long k) {
    if (k < 0) return Rational(0);
    Rational out(1);
    for (long i = 0; i < k; ++i) out *= (x - i) / (i + 1);
    return out;
}

// Divisor power sum sigma_k(n) = sum_{d | n} d^k, n >= 1.
inline Integer sigma(long k, long n) {
    Integer total(0);
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        total += p;
    }
    return total;
}

}  // namespace vvmf
