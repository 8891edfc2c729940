#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vvmf/bigfloat.hpp"
#include "vvmf/ratfun.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

// Irrational scalar kept out of band as base^exp (e.g. 1728^(1/40)), so that
// stored series coefficients stay in the exact ring.
struct Prefactor {
    Rational base;
    Rational exp;
    bool operator==(const Prefactor&) const = default;
};

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational from_rational(const Rational& q, const Rational&) { return q; }
};

template <>
struct ring_traits<RatFun> {
    static RatFun zero(const RatFun&) { return RatFun(); }
    static RatFun one(const RatFun&) { return RatFun(Rational(1)); }
    static bool is_zero(const RatFun& x) { return x.is_zero(); }
    static RatFun from_rational(const Rational& q, const RatFun&) { return RatFun(q); }
};

template <>
struct ring_traits<BigFloat> {
    static BigFloat zero(const BigFloat& like) { return BigFloat(like.precision()); }
    static BigFloat one(const BigFloat& like) { return BigFloat(1L, like.precision()); }
    static bool is_zero(const BigFloat& x) { return x.is_zero(); }
    static BigFloat from_rational(const Rational& q, const BigFloat& like) {
        return BigFloat(q, like.precision());
    }
};

// Truncated Puiseux series: sum of coeff[i] * q^(lead + i*step) for
// 0 <= i < coeffs.size(), known to be complete below the horizon exponent.
// A horizon of nullopt marks an exact (polynomial) value. The zero series
// stores no coefficients. Values are immutable once built; every operation
// returns a fresh series and never extends past the joint validity of its
// inputs. Reading at or past the horizon throws.
template <class R>
class PuiseuxSeries {
  public:
    using Traits = ring_traits<R>;
    using Horizon = std::optional<Rational>;

    PuiseuxSeries() : lead_(0), step_(1), end_(Rational(0)) {}

    static PuiseuxSeries make(Rational lead, Rational step, std::vector<R> coeffs,
                              Horizon end = std::nullopt) {
        if (step <= 0) throw std::domain_error("series step must be positive");
        PuiseuxSeries s;
        s.lead_ = std::move(lead);
        s.step_ = std::move(step);
        s.coeffs_ = std::move(coeffs);
        if (end) {
            s.end_ = end;
        } else {
            s.end_ = std::nullopt;
        }
        s.canonicalize();
        return s;
    }

    static PuiseuxSeries zero(Rational step = Rational(1), Horizon end = Rational(0)) {
        PuiseuxSeries s;
        s.step_ = std::move(step);
        s.end_ = std::move(end);
        return s;
    }

    static PuiseuxSeries constant(const R& value) {
        PuiseuxSeries s;
        if (!Traits::is_zero(value)) {
            s.lead_ = 0;
            s.coeffs_ = {value};
        }
        s.end_ = std::nullopt;
        return s;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return !end_.has_value(); }

    // Exponent of the first stored (nonzero) term; for the zero series this is
    // the horizon, the exponent where knowledge stops.
    Rational lead_exp() const {
        if (!coeffs_.empty()) return lead_;
        if (end_) return *end_;
        throw std::domain_error("zero series has no leading exponent");
    }
    const Rational& step() const { return step_; }
    size_t term_count() const { return coeffs_.size(); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const Horizon& horizon() const { return end_; }

    const R& leading_coeff() const {
        if (coeffs_.empty()) throw std::domain_error("zero series has no leading coefficient");
        return coeffs_.front();
    }

    // Coefficient of q^e. Exact zero off the stored grid; throws once e
    // reaches the horizon ("truncation exceeded": reading past validity is an
    // error, never a zero-fill).
    R coeff_at(const Rational& e) const {
        if (end_ && e >= *end_) throw std::out_of_range("truncation exceeded");
        R zero_val = coeffs_.empty() ? R() : Traits::zero(coeffs_.front());
        if (coeffs_.empty()) return zero_val;
        Rational offset = e - lead_;
        if (offset < 0) return zero_val;
        Rational idx = offset / step_;
        if (!is_integer(idx)) return zero_val;
        long i = static_cast<long>(idx.get_num().get_si());
        if (i >= static_cast<long>(coeffs_.size())) return zero_val;
        return coeffs_[static_cast<size_t>(i)];
    }

    std::vector<std::pair<Rational, R>> terms() const {
        std::vector<std::pair<Rational, R>> out;
        out.reserve(coeffs_.size());
        for (size_t i = 0; i < coeffs_.size(); ++i)
            out.emplace_back(lead_ + step_ * static_cast<long>(i), coeffs_[i]);
        return out;
    }

    PuiseuxSeries operator-() const {
        PuiseuxSeries s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    PuiseuxSeries operator+(const PuiseuxSeries& rhs) const {
        Horizon end = min_horizon(end_, rhs.end_);
        if (is_zero() && rhs.is_zero())
            return zero(rational_gcd(step_, rhs.step_), end);
        if (is_zero()) return rhs.truncated_to(end);
        if (rhs.is_zero()) return truncated_to(end);

        Rational step = rational_gcd(rational_gcd(step_, rhs.step_), abs_rat(lead_ - rhs.lead_));
        Rational lo = std::min(lead_, rhs.lead_);
        size_t n = 0;
        if (end) {
            Rational span = (*end - lo) / step;
            if (span <= 0) return zero(step, end);
            n = ceil_count(span);
        } else {
            Rational hi = std::max(last_exp(), rhs.last_exp()) + step;
            n = ceil_count((hi - lo) / step);
        }
        R like = coeffs_.front();
        std::vector<R> out(n, Traits::zero(like));
        accumulate(out, lo, step, *this, end);
        accumulate(out, lo, step, rhs, end);
        return make(lo, step, std::move(out), end);
    }

    PuiseuxSeries operator-(const PuiseuxSeries& rhs) const { return *this + (-rhs); }

    PuiseuxSeries operator*(const PuiseuxSeries& rhs) const {
        if ((is_zero() && is_exact()) || (rhs.is_zero() && rhs.is_exact()))
            return zero(rational_gcd(step_, rhs.step_), std::nullopt);
        Horizon end = mul_horizon(rhs);
        if (is_zero() || rhs.is_zero())
            return zero(rational_gcd(step_, rhs.step_), end);
        Rational step = rational_gcd(step_, rhs.step_);
        Rational lo = lead_ + rhs.lead_;
        size_t n;
        if (end) {
            Rational span = (*end - lo) / step;
            if (span <= 0) return zero(step, end);
            n = ceil_count(span);
        } else {
            n = ceil_count((last_exp() + rhs.last_exp() - lo) / step) + 1;
        }
        R like = coeffs_.front();
        std::vector<R> out(n, Traits::zero(like));
        long stride_a = stride_in(step);
        long stride_b = rhs.stride_in(step);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (Traits::is_zero(coeffs_[i])) continue;
            size_t base = static_cast<size_t>(stride_a) * i;
            if (base >= n) break;
            for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                size_t k = base + static_cast<size_t>(stride_b) * j;
                if (k >= n) break;
                out[k] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return make(lo, step, std::move(out), end);
    }

    PuiseuxSeries scaled(const R& c) const {
        if (Traits::is_zero(c)) return zero(step_, end_);
        PuiseuxSeries s = *this;
        for (auto& x : s.coeffs_) x = x * c;
        s.canonicalize();
        return s;
    }

    PuiseuxSeries scaled_rational(const Rational& c) const {
        if (coeffs_.empty()) return *this;
        return scaled(Traits::from_rational(c, coeffs_.front()));
    }

    // Multiplies by q^delta.
    PuiseuxSeries shifted(const Rational& delta) const {
        PuiseuxSeries s = *this;
        s.lead_ += delta;
        if (s.end_) *s.end_ += delta;
        return s;
    }

    PuiseuxSeries truncated_to(const Horizon& end) const {
        Horizon e = min_horizon(end_, end);
        if (!e) return *this;
        PuiseuxSeries s = *this;
        s.end_ = e;
        if (!s.coeffs_.empty()) {
            Rational span = (*e - s.lead_) / s.step_;
            if (span <= 0) {
                s.coeffs_.clear();
            } else {
                size_t keep = ceil_count(span);
                if (keep < s.coeffs_.size()) s.coeffs_.resize(keep);
            }
        }
        s.canonicalize();
        return s;
    }

    // Keeps the first n stored grid positions from the leading exponent.
    PuiseuxSeries truncated_terms(size_t n) const {
        if (is_zero()) return *this;
        return truncated_to(lead_ + step_ * static_cast<long>(n));
    }

    // Multiplicative inverse; requires a nonzero leading coefficient.
    PuiseuxSeries inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero series");
        R like = coeffs_.front();
        if (coeffs_.size() == 1 && !end_) {
            // Exact monomial: invert exactly.
            return make(-lead_, step_, {Traits::one(like) / coeffs_.front()}, std::nullopt);
        }
        size_t n = known_count();
        std::vector<R> inv(n, Traits::zero(like));
        R lead_inv = Traits::one(like) / coeffs_.front();
        inv[0] = lead_inv;
        for (size_t k = 1; k < n; ++k) {
            R acc = Traits::zero(like);
            for (size_t m = 1; m <= k && m < coeffs_.size(); ++m)
                acc = acc + coeffs_[m] * inv[k - m];
            inv[k] = -(acc * lead_inv);
        }
        Rational cap = -lead_ + step_ * static_cast<long>(n);
        if (end_) {
            Rational cap2 = *end_ - lead_ - lead_;
            if (cap2 < cap) cap = cap2;
        }
        return make(-lead_, step_, std::move(inv), cap);
    }

    PuiseuxSeries operator/(const PuiseuxSeries& rhs) const { return *this * rhs.inverse(); }

    PuiseuxSeries pow_int(long k) const {
        if (k == 0) {
            R like = coeffs_.empty() ? R() : coeffs_.front();
            return constant(Traits::one(like));
        }
        if (k < 0) return inverse().pow_int(-k);
        PuiseuxSeries acc = *this;
        for (long i = 1; i < k; ++i) acc = acc * *this;
        return acc;
    }

    // (q^a (1 + u))^e for rational e, via the generalized binomial series,
    // requiring the leading coefficient to be exactly 1. For exact inputs,
    // n_terms fixes the truncation; otherwise the horizon does.
    PuiseuxSeries pow_frac(const Rational& e, std::optional<size_t> n_terms = std::nullopt) const {
        if (is_zero()) throw std::domain_error("non-unital base");
        R like = coeffs_.front();
        if (!Traits::is_zero(coeffs_.front() - Traits::one(like)))
            throw std::domain_error("non-unital base");
        if (coeffs_.size() == 1 && !end_)
            return make(lead_ * e, step_, {Traits::one(like)}, std::nullopt);
        size_t n;
        if (end_) {
            n = known_count();
            if (n_terms) n = std::min(n, *n_terms);
        } else if (n_terms) {
            n = *n_terms;
        } else {
            throw std::domain_error("pow_frac of exact series requires a term budget");
        }
        // y = (1+u)^e satisfies (1+u) y' = e u' y, solved coefficientwise on
        // the step grid.
        std::vector<R> y(n, Traits::zero(like));
        y[0] = Traits::one(like);
        for (size_t k = 1; k < n; ++k) {
            R acc = Traits::zero(like);
            for (size_t m = 1; m <= k && m < coeffs_.size(); ++m) {
                Rational w = e * static_cast<long>(m) - static_cast<long>(k - m);
                acc = acc + Traits::from_rational(w, like) * coeffs_[m] * y[k - m];
            }
            acc = acc * Traits::from_rational(Rational(1, static_cast<long>(k)), like);
            y[k] = acc;
        }
        Horizon end;
        if (end_) {
            Rational cap = lead_ * e + (*end_ - lead_);
            end = cap;
        }
        if (n_terms) {
            Rational cap2 = lead_ * e + step_ * static_cast<long>(n);
            end = end ? std::min(*end, cap2) : cap2;
        }
        return make(lead_ * e, step_, std::move(y), end);
    }

    // exponent-weighted derivative q d/dq.
    PuiseuxSeries theta_q() const {
        PuiseuxSeries s = *this;
        for (size_t i = 0; i < s.coeffs_.size(); ++i) {
            Rational e = s.lead_ + s.step_ * static_cast<long>(i);
            s.coeffs_[i] = s.coeffs_[i] * Traits::from_rational(e, s.coeffs_[i]);
        }
        s.canonicalize();
        return s;
    }

    bool operator==(const PuiseuxSeries& rhs) const {
        Horizon end = min_horizon(end_, rhs.end_);
        PuiseuxSeries a = truncated_to(end);
        PuiseuxSeries b = rhs.truncated_to(end);
        if (a.is_zero() != b.is_zero()) return false;
        if (a.is_zero()) return true;
        if (a.lead_ != b.lead_) return false;
        PuiseuxSeries d = a - b;
        return d.is_zero();
    }

  private:
    static Rational abs_rat(const Rational& x) { return x < 0 ? Rational(-x) : x; }

    static size_t ceil_count(const Rational& x) {
        if (x <= 0) return 0;
        Integer fl = floor_int(x);
        Rational back(fl);
        size_t n = static_cast<size_t>(fl.get_ui());
        return (back == x) ? n : n + 1;
    }

    static Horizon min_horizon(const Horizon& a, const Horizon& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    Horizon mul_horizon(const PuiseuxSeries& rhs) const {
        // f known mod O(q^E1), g mod O(q^E2): fg known mod
        // O(q^min(E1 + lead g, E2 + lead f)). A zero series acts with lead
        // equal to its horizon. Exact zeros are handled before this is called.
        Horizon a, b;
        if (end_) a = *end_ + (rhs.is_zero() ? *rhs.end_ : rhs.lead_);
        if (rhs.end_) b = *rhs.end_ + (is_zero() ? *end_ : lead_);
        return min_horizon(a, b);
    }

    Rational last_exp() const {
        return lead_ + step_ * static_cast<long>(coeffs_.empty() ? 0 : coeffs_.size() - 1);
    }

    // Number of grid positions known from lead_ to the horizon.
    size_t known_count() const {
        if (!end_) return coeffs_.size();
        return ceil_count((*end_ - lead_) / step_);
    }

    long stride_in(const Rational& finer) const {
        Rational r = step_ / finer;
        return static_cast<long>(r.get_num().get_si());
    }

    static void accumulate(std::vector<R>& out, const Rational& lo, const Rational& step,
                           const PuiseuxSeries& src, const Horizon& end) {
        long stride = src.stride_in(step);
        Rational off = (src.lead_ - lo) / step;
        long base = static_cast<long>(off.get_num().get_si());
        for (size_t i = 0; i < src.coeffs_.size(); ++i) {
            long k = base + stride * static_cast<long>(i);
            if (k < 0 || static_cast<size_t>(k) >= out.size()) continue;
            if (end && src.lead_ + src.step_ * static_cast<long>(i) >= *end) break;
            out[static_cast<size_t>(k)] += src.coeffs_[i];
        }
    }

    void canonicalize() {
        size_t skip = 0;
        while (skip < coeffs_.size() && Traits::is_zero(coeffs_[skip])) ++skip;
        if (skip > 0) {
            lead_ += step_ * static_cast<long>(skip);
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
        }
        while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
        if (end_ && !coeffs_.empty()) {
            // Stored terms must sit strictly below the horizon.
            Rational span = (*end_ - lead_) / step_;
            size_t keep = ceil_count(span);
            if (keep < coeffs_.size()) coeffs_.resize(keep);
            while (!coeffs_.empty() && Traits::is_zero(coeffs_.back())) coeffs_.pop_back();
        }
    }

    Rational lead_;
    Rational step_;
    std::vector<R> coeffs_;
    Horizon end_;
};

using RationalSeries = PuiseuxSeries<Rational>;

}  // namespace vvmf
