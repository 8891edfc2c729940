#include "vvmf/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace vvmf {

namespace {

struct TupleJob {
    long den;
    std::array<long, 4> nums;  // sorted ascending
};

// All sorted numerator tuples with the given common denominator, trace 1,
// entries in [lo, hi], pairwise distinct mod den, gcd(tuple, den) = 1.
std::vector<TupleJob> enumerate_tuples(const ScanConfig& cfg) {
    std::vector<long> dens = cfg.denominators;
    if (dens.empty())
        for (long d = 1; d <= cfg.denominator_bound; ++d) dens.push_back(d);

    std::vector<TupleJob> jobs;
    for (long den : dens) {
        if (den <= 0) continue;
        long lo_l = static_cast<long>(floor_int(cfg.exp_min * den).get_si());
        long hi_l = static_cast<long>(floor_int(cfg.exp_max * den).get_si());
        for (long k1 = lo_l; k1 <= hi_l; ++k1)
            for (long k2 = k1 + 1; k2 <= hi_l; ++k2) {
                // smallest admissible k3, k4 already overshoot the trace
                if (k1 + 3 * k2 + 3 > den) break;
                for (long k3 = k2 + 1; k3 <= hi_l; ++k3) {
                    long k4 = den - k1 - k2 - k3;
                    if (k4 <= k3 || k4 > hi_l) continue;
                    std::array<long, 4> k = {k1, k2, k3, k4};
                    // distinct mod den
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i)
                        for (int j = i + 1; j < 4 && ok; ++j)
                            if ((k[i] - k[j]) % den == 0) ok = false;
                    if (!ok) continue;
                    // enumerate each tuple once, at its reduced denominator
                    Integer g(den);
                    for (long v : k) {
                        Integer vz(v);
                        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), vz.get_mpz_t());
                    }
                    if (g != 1) continue;
                    jobs.push_back({den, k});
                }
            }
    }
    return jobs;
}

// Closed-form first two q-side Fourier corrections from the K-side
// recurrence, avoiding series machinery in the hot path: with
// K/1728 = q (1 + u1 q + u2 q^2 + ...),
//   b1 = e u1 + c1,
//   b2 = e u2 + C(e,2) u1^2 + (e u1 + u1) c1 + c2,
// where c_i = 1728^i a_i.
struct QsideGate {
    Rational u1, u2;

    explicit QsideGate(const RationalSeries& kappa3) {
        RationalSeries unital = kappa3.shifted(-1);
        u1 = unital.coeff_at(1);
        u2 = unital.coeff_at(2);
    }

    bool admissible(const ThetaOde<Rational>& ode, const Rational& e) const {
        auto sol = frobenius_solve(ode, e, 3);
        Rational c1 = sol.coeffs[1] * 1728;
        Rational c2 = sol.coeffs[2] * 1728 * 1728;
        Rational b1 = e * u1 + c1;
        if (b1 < 0) return false;
        Rational b2 = e * u2 + e * (e - 1) / 2 * u1 * u1 + (e + 1) * u1 * c1 + c2;
        return b2 >= 0;
    }
};

// First n+1 unital q-coefficients of K^e (1 + a_1 K + ... ) / (1728^e q^e),
// from the K-side coefficients and the unital part v of K/(1728 q). Plain
// vector convolutions; no series objects in the scan's hot path.
std::vector<Rational> unital_q_prefix(const Rational& e, const std::vector<Rational>& a,
                                      const std::vector<Rational>& v, size_t n) {
    // A = v^e by the binomial differential recurrence.
    std::vector<Rational> pow_v(n + 1, Rational(0));
    pow_v[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        Rational acc(0);
        for (size_t m = 1; m <= k && m < v.size(); ++m)
            acc += (e * static_cast<long>(m) - Rational(static_cast<long>(k - m))) * v[m] *
                   pow_v[k - m];
        pow_v[k] = acc / static_cast<long>(k);
    }
    // B = sum_i a_i 1728^i (q v)^i / q^i accumulated by Horner in w = q v.
    std::vector<Rational> b(n + 1, Rational(0));
    size_t top = std::min(a.size() - 1, n);
    b[0] = a[top];
    Rational p1728 = pow(Rational(1728), static_cast<long>(top));
    b[0] *= p1728;
    for (size_t i = top; i-- > 0;) {
        // b <- b * (q v) + a_i 1728^i
        std::vector<Rational> next(n + 1, Rational(0));
        for (size_t k = 0; k + 1 <= n; ++k) {
            if (b[k] == 0) continue;
            for (size_t m = 0; m + k + 1 <= n && m < v.size(); ++m)
                next[k + 1 + m] += b[k] * v[m];
        }
        p1728 /= 1728;
        next[0] += a[i] * p1728;
        b = std::move(next);
    }
    // unital prefix = A * B
    std::vector<Rational> out(n + 1, Rational(0));
    for (size_t k = 0; k <= n; ++k)
        for (size_t m = 0; m <= k; ++m) out[k] += pow_v[m] * b[k - m];
    return out;
}

std::optional<CharacterCandidate> evaluate_tuple(const TupleJob& job, const ScanConfig& cfg,
                                                 const QsideGate& gate,
                                                 const RationalSeries& kappa_full) {
    std::vector<Rational> exps;
    exps.reserve(4);
    for (long k : job.nums) exps.emplace_back(Rational(k, job.den));
    for (auto& e : exps) e.canonicalize();

    ExponentTuple tuple(exps);
    ThetaOde<Rational> ode = theta_from_exponents(4, tuple);

    if (cfg.use_sign_prescreen) {
        try {
            for (const auto& e : exps)
                if (!gate.admissible(ode, e)) return std::nullopt;
        } catch (const std::domain_error&) {
            return std::nullopt;  // resonant exponents cannot carry characters here
        }
    }

    size_t solve_terms = cfg.n_terms;
    if (cfg.use_denominator_stabilization)
        solve_terms = std::max(solve_terms, cfg.stabilization_terms);

    // Shallow stage: a cheap window of the q-expansion rejects most tuples.
    // Negative coefficients are fatal, and so is any coefficient denominator
    // beyond the rescale bound: the minimal clearing scale is at least the
    // denominator lcm, so such a tuple can never clear.
    std::vector<Rational> v;  // unital part of K/(1728 q)
    {
        RationalSeries shifted = kappa_full.shifted(-1);
        for (const auto& [ex, c] : shifted.terms()) v.push_back(c);
    }
    std::vector<FrobeniusSolution<Rational>> sols;
    try {
        size_t shallow = std::min<size_t>(12, solve_terms);
        sols = family_solve(ode, tuple, shallow);
        for (const auto& sol : sols) {
            auto prefix = unital_q_prefix(sol.exponent, sol.coeffs, v, shallow - 2);
            Integer den_lcm(1);
            for (const auto& c : prefix) {
                if (c < 0) return std::nullopt;
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
                if (den_lcm > cfg.rescale_bound) return std::nullopt;
            }
        }
        if (solve_terms > shallow) sols = family_solve(ode, tuple, solve_terms);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }

    CharacterCandidate cand;
    cand.exponents = exps;
    size_t expand_terms =
        cfg.use_denominator_stabilization ? std::max(cfg.n_terms, cfg.stabilization_terms)
                                          : cfg.n_terms;
    auto expansion = to_q_expansion(sols, expand_terms, std::nullopt, kappa_full);
    for (const auto& coord : expansion.coords) {
        if (cfg.use_denominator_stabilization) {
            auto profile = denominator_profile(coord.series, cfg.stabilization_window);
            if (!profile.stabilized) return std::nullopt;
        }
        auto cleared = integrality_scale(coord.series, cfg.n_terms, cfg.rescale_bound);
        if (!cleared) return std::nullopt;
        cand.scales.push_back(cleared->scale);
        cand.coeffs.push_back(cleared->coeffs);
    }
    cand.denominators_stable = true;
    return cand;
}

}  // namespace

std::vector<CharacterCandidate> rank4_scan(const ScanConfig& cfg) {
    std::vector<TupleJob> jobs = enumerate_tuples(cfg);
    QsideGate gate(kappa_over_1728(3));
    size_t expand_terms = cfg.use_denominator_stabilization
                              ? std::max(cfg.n_terms, cfg.stabilization_terms)
                              : cfg.n_terms;
    RationalSeries kappa_full = kappa_over_1728(expand_terms + 2);

    size_t workers = std::max<size_t>(1, cfg.workers);
    std::vector<std::optional<CharacterCandidate>> results(jobs.size());
    if (workers == 1) {
        for (size_t i = 0; i < jobs.size(); ++i)
            results[i] = evaluate_tuple(jobs[i], cfg, gate, kappa_full);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                results[i] = evaluate_tuple(jobs[i], cfg, gate, kappa_full);
            }
        };
        std::vector<std::thread> pool;
        for (size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Deterministic merge in enumeration order, independent of worker count.
    std::vector<CharacterCandidate> out;
    for (auto& r : results)
        if (r) out.push_back(std::move(*r));
    return out;
}

namespace {

// Coordinate with any rational prefactor folded into the stored coefficients.
RationalSeries folded_series(const CharacterCoordinate& coord, size_t n_terms) {
    RationalSeries s = coord.series.truncated_terms(n_terms);
    if (coord.prefactor) {
        const Prefactor& p = *coord.prefactor;
        if (!is_integer(p.exp))
            throw std::domain_error("irrational prefactor cannot be folded");
        s = s.scaled_rational(pow(p.base, p.exp.get_num().get_si()));
    }
    return s;
}

}  // namespace

std::vector<LineCandidate> gamma03_line_scan(const LineScanConfig& cfg) {
    std::vector<LineCandidate> out;
    BigFloat ftol(1e-9, cfg.prec);
    for (long n = cfg.numerator_min; n <= cfg.numerator_max; ++n) {
        if (n % 2 == 0) continue;  // rationality: 12 lambda odd
        if (cfg.irreducible_only && n % 3 == 0) continue;
        Rational lambda(n, 12);
        lambda.canonicalize();

        LineCandidate cand;
        cand.lambda = lambda;
        Gamma03Family fam = cfg.family_g ? gamma03_G(lambda, cfg.n_terms)
                                         : gamma03_family(lambda, cfg.n_terms);

        size_t d = fam.F.coords.size();
        std::vector<RationalSeries> coords;
        coords.reserve(d);
        bool degenerate = false;
        cand.sign_ok = true;
        for (const auto& coord : fam.F.coords) {
            if (coord.series.is_zero()) { degenerate = true; break; }
            RationalSeries s = folded_series(coord, cfg.n_terms);
            bool lead_neg = s.leading_coeff() < 0;
            for (const auto& [e, c] : s.terms())
                if (c != 0 && ((c < 0) != lead_neg)) cand.sign_ok = false;
            coords.push_back(std::move(s));
        }
        if (degenerate) {
            cand.witness = "degenerate coordinate";
            out.push_back(std::move(cand));
            continue;
        }
        if (cfg.require_nonnegative && !cand.sign_ok) {
            cand.witness = "mixed coefficient signs";
            out.push_back(std::move(cand));
            continue;
        }

        SMatrix s_base = gamma03_family_smatrix(lambda, cfg.prec);
        if (cfg.family_g)
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) s_base.at(i, j) = -s_base.at(i, j);

        // Basis changes preserving a symmetric S with this zero pattern are a
        // single positive global scale, coordinate sign flips, and
        // permutations. The global scale is pinned by normalizing a vacuum
        // candidate to leading coefficient 1; sign flips conjugate S and must,
        // when positivity is demanded, turn every coordinate nonnegative.
        std::string fusion_witness;
        std::string scale_witness = "no integral vacuum normalization";
        for (size_t v = 0; v < d && !cand.conformal; ++v) {
            Rational lead = coords[v].leading_coeff();
            Rational scale = 1 / abs(lead);
            if (scale > Rational(cfg.rescale_bound)) continue;
            bool integral = true;
            std::vector<std::vector<Integer>> streams(d);
            for (size_t j = 0; j < d && integral; ++j) {
                for (const auto& [e, c] : coords[j].terms()) {
                    Rational scaled = c * scale;
                    if (!is_integer(scaled)) { integral = false; break; }
                    streams[j].push_back(Integer(scaled.get_num()));
                }
            }
            if (!integral) {
                scale_witness = "global scale at vacuum " + std::to_string(v) + " not integral";
                continue;
            }
            cand.integral = true;
            for (size_t mask = 0; mask < (size_t(1) << d) && !cand.conformal; ++mask) {
                std::vector<int> sign(d);
                bool mask_ok = true;
                for (size_t j = 0; j < d; ++j) {
                    sign[j] = (mask >> j & 1) ? -1 : 1;
                    bool lead_neg = coords[j].leading_coeff() < 0;
                    if (cfg.require_nonnegative && ((sign[j] < 0) != lead_neg)) mask_ok = false;
                }
                if (mask_ok && sign[v] * (lead < 0 ? -1 : 1) != 1) mask_ok = false;
                if (!mask_ok) continue;
                SMatrix s = s_base;
                for (size_t i = 0; i < d; ++i)
                    for (size_t j = 0; j < d; ++j)
                        if (sign[i] * sign[j] < 0) s.at(i, j) = -s.at(i, j);
                try {
                    auto fus = fusion(s, v);
                    std::string w;
                    if (fus.nonnegative_integral(ftol, &w)) {
                        cand.conformal = true;
                        cand.vacuum = v;
                        cand.scales.assign(d, scale);
                        cand.coeffs = streams;
                        for (size_t j = 0; j < d; ++j)
                            if (sign[j] < 0) {
                                cand.scales[j] = -cand.scales[j];
                                for (auto& x : cand.coeffs[j]) x = -x;
                            }
                    } else if (!w.empty()) {
                        fusion_witness = w;
                    }
                } catch (const std::domain_error& e) {
                    if (fusion_witness.empty()) fusion_witness = e.what();
                }
            }
        }
        if (!cand.conformal)
            cand.witness = fusion_witness.empty() ? scale_witness : fusion_witness;
        out.push_back(std::move(cand));
    }
    return out;
}

}  // namespace vvmf
