#include <doctest.h>

#include <random>

#include "vvmf/json_io.hpp"
#include "vvmf/qseries.hpp"

using namespace vvmf;

namespace {

RationalSeries series_of(const Rational& lead, std::vector<long> coeffs) {
    std::vector<Rational> v(coeffs.begin(), coeffs.end());
    auto n = static_cast<long>(v.size());
    return RationalSeries::make(lead, 1, std::move(v), lead + n);
}

// Exact polynomial: no truncation horizon.
RationalSeries exact_of(const Rational& lead, std::vector<long> coeffs) {
    std::vector<Rational> v(coeffs.begin(), coeffs.end());
    return RationalSeries::make(lead, 1, std::move(v), std::nullopt);
}

// Independent oracle: brute-force polynomial product of q prod (1-q^n)^24.
std::vector<Rational> delta_oracle(size_t n_terms) {
    std::vector<Rational> poly(n_terms, Rational(0));
    poly[0] = 1;
    for (size_t n = 1; n < n_terms; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            // multiply by (1 - q^n)
            for (size_t k = n_terms; k-- > n;) poly[k] -= poly[k - n];
        }
    }
    return poly;  // q * this
}

Rational random_rational(std::mt19937& rng, long num_range, long den_range) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("bernoulli numbers match the defining series z/(e^z - 1)") {
    // e^z - 1 = sum_{n>=1} z^n / n!; invert and read off B_k / k!.
    size_t n = 10;
    std::vector<Rational> expm1(n);
    Rational fact(1);
    for (size_t k = 1; k < n; ++k) {
        fact *= static_cast<long>(k);
        expm1[k - 1] = Rational(1) / fact;  // coefficient of z^{k} over z
    }
    auto em = RationalSeries::make(0, 1, std::move(expm1), Rational(static_cast<long>(n - 1)));
    auto inv = em.inverse();  // z / (e^z - 1)
    // B_2 = 1/6, B_4 = -1/30, B_6 = 1/42 give the Eisenstein constants.
    CHECK(inv.coeff_at(2) * factorial(2) == rat(1, 6));
    CHECK(inv.coeff_at(4) * factorial(4) == rat(-1, 30));
    CHECK(inv.coeff_at(6) * factorial(6) == rat(1, 42));
    // -2k/B_k
    CHECK(rat(-4) / rat(1, 6) == rat(-24));
    CHECK(rat(-8) / rat(-1, 30) == rat(240));
    CHECK(rat(-12) / rat(1, 42) == rat(-504));
}

TEST_CASE("eisenstein series against the divisor-sum oracle") {
    auto e4 = eisenstein(4, 3);
    CHECK(e4.weight == 4);
    CHECK(e4.series.coeff_at(0) == 1);
    CHECK(e4.series.coeff_at(1) == 240 * Rational(sigma(3, 1)));
    CHECK(e4.series.coeff_at(1) == 240);
    CHECK(e4.series.coeff_at(2) == 240 * Rational(sigma(3, 2)));
    CHECK(e4.series.coeff_at(2) == 2160);

    auto e6 = eisenstein(6, 3);
    CHECK(e6.series.coeff_at(1) == -504);
    CHECK(e6.series.coeff_at(2) == -504 * Rational(sigma(5, 2)));
    CHECK(e6.series.coeff_at(2) == -16632);

    auto e2 = eisenstein(2, 1);
    CHECK(e2.series.coeff_at(0) == 1);

    CHECK_THROWS_WITH_AS(eisenstein(8, 3), "unsupported Eisenstein weight", std::domain_error);
}

TEST_CASE("eta quotients reproduce the printed hauptmodul expansions") {
    SUBCASE("z1 = (eta(q)/eta(q^3))^12") {
        auto z1 = eta_quotient({{Rational(1), 12}, {Rational(3), -12}}, 9);
        long expected[] = {1, -12, 54, -76, -243, 1188, -1384, -2916, 11934};
        for (int k = 0; k < 9; ++k) CHECK(z1.coeff_at(Rational(k - 1)) == expected[k]);
    }
    SUBCASE("z2/729 on the cube-root grid") {
        auto z2 = eta_quotient({{Rational(1), 12}, {rat(1, 3), -12}}, 8);
        CHECK(z2.lead_exp() == rat(1, 3));
        CHECK(z2.step() == rat(1, 3));
        long expected[] = {1, 12, 90, 508, 2391, 9828, 36428};
        for (int k = 0; k < 7; ++k) CHECK(z2.coeff_at(rat(k + 1, 3)) == expected[k]);
    }
    SUBCASE("eta(q)^24 equals the brute-force product oracle") {
        auto d = eta_quotient({{Rational(1), 24}}, 12);
        auto oracle = delta_oracle(12);
        for (size_t k = 0; k < 12; ++k)
            CHECK(d.coeff_at(Rational(static_cast<long>(k) + 1)) == oracle[k]);
        CHECK(d.coeff_at(1) == 1);
        CHECK(d.coeff_at(2) == -24);
        CHECK(d.coeff_at(3) == 252);
    }
    CHECK_THROWS_AS(eta_quotient({{Rational(0), 12}}, 4), std::domain_error);
    CHECK_THROWS_AS(eta_quotient({{Rational(-2), 2}}, 4), std::domain_error);
}

TEST_CASE("delta from eta matches (E4^3 - E6^2)/1728") {
    size_t n = 14;
    auto d = delta(n);
    auto e4 = eisenstein(4, n).series;
    auto e6 = eisenstein(6, n).series;
    auto alt = (e4 * e4 * e4 - e6 * e6).scaled_rational(rat(1, 1728));
    CHECK(d.series == alt);
}

TEST_CASE("j and K expansions") {
    auto [j, kappa] = j_and_kappa(8);
    CHECK(j.series.coeff_at(-1) == 1);
    CHECK(j.series.coeff_at(0) == 744);
    CHECK(j.series.coeff_at(1) == 196884);

    SUBCASE("K j = 1728 exactly to truncation") {
        auto prod = kappa.series * j.series;
        CHECK(prod.coeff_at(0) == 1728);
        for (long k = 1; k <= 5; ++k) CHECK(prod.coeff_at(k) == 0);
    }
    SUBCASE("series inversion oracle: solve K j = 1728 coefficientwise") {
        // With K = sum_{m>=1} k_m q^m and j_{-1} = 1, comparing q^n
        // coefficients of K j = 1728 gives
        //   k_{n+1} = 1728 [n=0] - sum_{m=1}^{n} k_m j_{n-m}.
        std::vector<Rational> k(6, Rational(0));
        for (long n = 0; n + 1 < 6; ++n) {
            Rational target = (n == 0) ? Rational(1728) : Rational(0);
            Rational acc(0);
            for (long m = 1; m <= n; ++m)
                acc += k[static_cast<size_t>(m)] * j.series.coeff_at(n - m);
            k[static_cast<size_t>(n + 1)] = target - acc;
        }
        CHECK(k[1] == 1728);
        CHECK(k[2] == -1285632);
        for (long m = 1; m <= 5; ++m) CHECK(kappa.series.coeff_at(m) == k[static_cast<size_t>(m)]);
    }
}

TEST_CASE("pow_frac binomial behavior") {
    auto one_plus_q = exact_of(0, {1, 1});

    SUBCASE("(1+q)^(1/2) = 1 + q/2 - q^2/8") {
        auto r = one_plus_q.pow_frac(rat(1, 2), 4);
        CHECK(r.coeff_at(0) == 1);
        CHECK(r.coeff_at(1) == rat(1, 2));
        CHECK(r.coeff_at(2) == rat(-1, 8));
        CHECK(r.coeff_at(3) == rat(1, 16));
    }
    SUBCASE("identity exponent") {
        auto r = one_plus_q.pow_frac(Rational(0), 4);
        CHECK(r.coeff_at(0) == 1);
        CHECK(r.coeff_at(1) == 0);
    }
    SUBCASE("binomial oracle for generic exponent") {
        Rational e = rat(-5, 7);
        auto r = one_plus_q.pow_frac(e, 6);
        for (long k = 0; k < 6; ++k) CHECK(r.coeff_at(k) == binomial(e, k));
    }
    SUBCASE("K^(1/40) as unital series, cross-checked by 40th power") {
        auto kappa = kappa_over_1728(10);  // K/1728 = q(1 + ...)
        auto root = kappa.pow_frac(rat(1, 40));
        CHECK(root.lead_exp() == rat(1, 40));
        CHECK(root.coeff_at(rat(1, 40)) == 1);
        // (K/1728)^{1/40} q-coefficient: -744/40 follows from the binomial
        CHECK(root.coeff_at(rat(1, 40) + 1) == rat(-744, 40));
        auto back = root.pow_int(40);
        CHECK(back == kappa.truncated_to(back.horizon()));
    }
    SUBCASE("roundtrip property: pow_frac(pow_frac(s,a),1/a) = s") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<Rational> coeffs = {Rational(1)};
            for (int k = 0; k < 8; ++k) coeffs.push_back(random_rational(rng, 9, 5));
            auto s = RationalSeries::make(0, 1, coeffs, Rational(9));
            Rational a = random_rational(rng, 7, 6);
            if (a == 0) a = rat(1, 2);
            auto round = s.pow_frac(a).pow_frac(Rational(1) / a);
            CHECK(round == s);
        }
    }
    SUBCASE("non-unital base is rejected") {
        auto two = series_of(0, {2, 1});
        CHECK_THROWS_WITH_AS(two.pow_frac(rat(1, 2)), "non-unital base", std::domain_error);
    }
}

TEST_CASE("modular derivative") {
    size_t n = 20;
    auto e4 = eisenstein(4, n);
    auto e6 = eisenstein(6, n);
    auto d = delta(n);

    SUBCASE("Ramanujan system") {
        CHECK(mod_derivative(e4).series == e6.series.scaled_rational(rat(-1, 3)));
        CHECK(mod_derivative(e6).series == (e4.series * e4.series).scaled_rational(rat(-1, 2)));
        CHECK(mod_derivative(d).series.is_zero());
        CHECK(mod_derivative(d).weight == 14);
    }
    SUBCASE("weight-0 derivative kills constants") {
        WeightedForm one{0, RationalSeries::constant(Rational(1))};
        CHECK(mod_derivative(one).series.is_zero());
    }
    SUBCASE("Leibniz rule on random form products") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            // random M-monomial combinations
            std::uniform_int_distribution<int> p4(0, 2), p6(0, 2);
            auto make_form = [&]() {
                WeightedForm f{0, RationalSeries::constant(random_rational(rng, 20, 7))};
                int a = p4(rng), b = p6(rng);
                for (int i = 0; i < a; ++i) f = f * e4;
                for (int i = 0; i < b; ++i) f = f * e6;
                return f;
            };
            WeightedForm f = make_form(), g = make_form();
            auto lhs = mod_derivative(f * g);
            auto rhs = mod_derivative(f) * g + f * mod_derivative(g);
            CHECK(lhs.weight == rhs.weight);
            CHECK(lhs.series == rhs.series);
        }
    }
}

TEST_CASE("substitute composes series at the cusp") {
    auto kappa = kappa_over_1728(8).scaled_rational(Rational(1728));  // K(q)
    SUBCASE("identity outer") {
        auto k_outer = exact_of(1, {1});  // K
        auto r = substitute(k_outer, kappa);
        CHECK(r == kappa.truncated_to(r.horizon()));
    }
    SUBCASE("linearity with shifted copy") {
        // outer = K^e (1 + K): pow_frac part plus shifted copy
        Rational e = rat(1, 5);
        auto outer = RationalSeries::make(e, 1, {Rational(1), Rational(1)}, e + 2);
        auto w = kappa.scaled_rational(rat(1, 1728));
        auto direct = substitute(outer, w);
        auto expected = w.pow_frac(e) * (RationalSeries::constant(Rational(1)) +
                                         w.truncated_to(direct.horizon()));
        CHECK(direct == expected);
    }
    SUBCASE("nonpositive inner lead is rejected") {
        auto bad = exact_of(0, {1, 1});
        auto outer = exact_of(1, {1});
        CHECK_THROWS_WITH_AS(substitute(outer, bad), "composition diverges at cusp",
                             std::domain_error);
    }
}

TEST_CASE("truncation semantics") {
    auto s = series_of(0, {1, 2, 3});
    SUBCASE("reading past the horizon is an error, never zero-fill") {
        CHECK(s.coeff_at(2) == 3);
        CHECK_THROWS_WITH_AS(s.coeff_at(3), "truncation exceeded", std::out_of_range);
    }
    SUBCASE("binary operations keep the min-valid truncation") {
        auto t = series_of(0, {1, 1, 1, 1, 1, 1});
        auto sum = s + t;
        CHECK(sum.coeff_at(2) == 4);
        CHECK_THROWS_AS(sum.coeff_at(3), std::out_of_range);
        auto prod = s * t;
        CHECK(prod.coeff_at(2) == 6);
        CHECK_THROWS_AS(prod.coeff_at(3), std::out_of_range);
    }
    SUBCASE("off-grid coefficients below the horizon are exact zeros") {
        CHECK(s.coeff_at(rat(1, 2)) == 0);
    }
}

TEST_CASE("step refinement") {
    auto a = RationalSeries::make(0, rat(1, 2), {Rational(1), Rational(2)}, Rational(1));
    auto b = RationalSeries::make(0, rat(1, 3), {Rational(5), Rational(7)}, rat(2, 3));
    auto sum = a + b;
    CHECK(sum.step() == rat(1, 6));
    CHECK(sum.coeff_at(0) == 6);
    CHECK(sum.coeff_at(rat(1, 3)) == 7);
    CHECK(sum.coeff_at(rat(1, 2)) == 2);

    SUBCASE("refinement associativity on random triples") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            auto mk = [&]() {
                std::uniform_int_distribution<long> den(1, 4), len(1, 5);
                long d = den(rng);
                std::vector<Rational> cs;
                long n = len(rng);
                for (long i = 0; i < n; ++i) cs.push_back(random_rational(rng, 9, 4));
                Rational lead = random_rational(rng, 3, 3);
                return RationalSeries::make(lead, rat(1, d), std::move(cs),
                                            lead + rat(n, d));
            };
            auto x = mk(), y = mk(), z = mk();
            CHECK((x + y) + z == x + (y + z));
        }
    }
}

TEST_CASE("series JSON round trip") {
    auto s = RationalSeries::make(rat(-7, 36), 1, {Rational(1), rat(13, 2), Rational(0), Rational(98)},
                                  rat(-7, 36) + 5);
    auto j = series_to_json(s, Prefactor{Rational(1728), rat(1, 40)});
    CHECK(j.at("lead_exp") == "-7/36");
    CHECK(j.at("step") == "1");
    CHECK(j.at("coeffs").size() == 5);  // padded with the known zero to the horizon
    CHECK(j.at("prefactor").at("exp") == "1/40");
    std::optional<Prefactor> pf;
    auto back = series_from_json(j, &pf);
    CHECK(back == s);
    CHECK(pf.has_value());
    CHECK(pf->base == 1728);

    auto jz = series_to_json(RationalSeries::zero(1, Rational(4)));
    auto zero_back = series_from_json(jz);
    CHECK(zero_back.is_zero());
}
