#include "vvmf/json_io.hpp"

#include <stdexcept>

namespace vvmf {

Json series_to_json(const RationalSeries& s, const std::optional<Prefactor>& prefactor) {
    Json j;
    Json coeffs = Json::array();
    if (s.is_zero()) {
        j["lead_exp"] = to_string(s.horizon() ? *s.horizon() : Rational(0));
        j["step"] = to_string(s.step());
    } else {
        j["lead_exp"] = to_string(s.lead_exp());
        j["step"] = to_string(s.step());
        size_t n = s.term_count();
        if (s.horizon()) {
            Rational span = (*s.horizon() - s.lead_exp()) / s.step();
            Integer fl = floor_int(span);
            size_t full = static_cast<size_t>(fl.get_ui());
            if (Rational(fl) < span) ++full;
            n = std::max(n, full);
        }
        for (size_t i = 0; i < n; ++i)
            coeffs.push_back(to_string(i < s.term_count() ? s.coeffs()[i] : Rational(0)));
    }
    j["coeffs"] = coeffs;
    if (prefactor)
        j["prefactor"] = Json{{"base", to_string(prefactor->base)},
                              {"exp", to_string(prefactor->exp)}};
    else
        j["prefactor"] = nullptr;
    return j;
}

RationalSeries series_from_json(const Json& j, std::optional<Prefactor>* prefactor) {
    Rational lead = parse_rational(j.at("lead_exp").get<std::string>());
    Rational step = parse_rational(j.at("step").get<std::string>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    if (prefactor) {
        *prefactor = std::nullopt;
        if (j.contains("prefactor") && !j.at("prefactor").is_null()) {
            Prefactor p;
            p.base = parse_rational(j.at("prefactor").at("base").get<std::string>());
            p.exp = parse_rational(j.at("prefactor").at("exp").get<std::string>());
            *prefactor = p;
        }
    }
    Rational end = lead + step * static_cast<long>(coeffs.size());
    return RationalSeries::make(lead, step, std::move(coeffs), end);
}

Json theta_ode_to_json(const ThetaOde<Rational>& ode) {
    Json polys = Json::array();
    for (const auto& a_j : ode.theta_coeffs) {
        Json p = Json::array();
        for (const auto& c : a_j) p.push_back(to_string(c));
        polys.push_back(p);
    }
    return Json{{"degree", ode.degree()}, {"P", polys}};
}

ThetaOde<Rational> theta_ode_from_json(const Json& j) {
    ThetaOde<Rational> ode;
    for (const auto& p : j.at("P")) {
        std::vector<Rational> row;
        for (const auto& c : p) row.push_back(parse_rational(c.get<std::string>()));
        ode.theta_coeffs.push_back(std::move(row));
    }
    if (ode.degree() != j.at("degree").get<long>())
        throw std::invalid_argument("theta ODE degree mismatch");
    return ode;
}

Json monic_mlde_to_json(const MonicMlde& mlde) {
    Json terms = Json::array();
    for (const auto& t : mlde.terms) {
        std::string monomial;
        if (t.e4_pow > 0) monomial += "E4" + (t.e4_pow > 1 ? "^" + std::to_string(t.e4_pow) : "");
        if (t.e6_pow > 0) {
            if (!monomial.empty()) monomial += "*";
            monomial += "E6" + (t.e6_pow > 1 ? "^" + std::to_string(t.e6_pow) : "");
        }
        if (monomial.empty()) monomial = "1";
        terms.push_back(Json{{"scalar", to_string(t.scalar)},
                             {"monomial", monomial},
                             {"order", t.order}});
    }
    return Json{{"degree", mlde.degree}, {"coeffs", terms}};
}

Json expansion_to_json(const CharacterVectorExpansion& x) {
    Json coords = Json::array();
    Json exps = Json::array();
    Json rescales = Json::array();
    for (const auto& c : x.coords) {
        coords.push_back(series_to_json(c.series, c.prefactor));
        exps.push_back(to_string(c.exponent));
        rescales.push_back(c.rescale ? Json(to_string(*c.rescale)) : Json(nullptr));
    }
    return Json{{"exponents", exps}, {"rescale", rescales}, {"coordinates", coords}};
}

CharacterVectorExpansion expansion_from_json(const Json& j) {
    CharacterVectorExpansion out;
    const auto& coords = j.at("coordinates");
    const auto& exps = j.at("exponents");
    const auto& rescales = j.at("rescale");
    for (size_t i = 0; i < coords.size(); ++i) {
        CharacterCoordinate c;
        c.exponent = parse_rational(exps.at(i).get<std::string>());
        c.series = series_from_json(coords.at(i), &c.prefactor);
        if (!rescales.at(i).is_null())
            c.rescale = parse_rational(rescales.at(i).get<std::string>());
        out.coords.push_back(std::move(c));
    }
    return out;
}

Json smatrix_to_json(const SMatrix& s, int digits) {
    Json rows = Json::array();
    for (size_t i = 0; i < s.dim(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < s.dim(); ++j) row.push_back(s.at(i, j).to_decimal(digits));
        rows.push_back(row);
    }
    return Json{{"d", s.dim()}, {"entries", rows}};
}

SMatrix smatrix_from_json(const Json& j, mpfr_prec_t prec) {
    size_t d = j.at("d").get<size_t>();
    SMatrix s(d, prec);
    const auto& rows = j.at("entries");
    if (rows.size() != d) throw std::invalid_argument("S-matrix row count mismatch");
    for (size_t i = 0; i < d; ++i) {
        if (rows.at(i).size() != d) throw std::invalid_argument("S-matrix column count mismatch");
        for (size_t k = 0; k < d; ++k) {
            std::string text = rows.at(i).at(k).get<std::string>();
            BigFloat v(prec);
            if (mpfr_set_str(v.raw(), text.c_str(), 10, MPFR_RNDN) != 0)
                throw std::invalid_argument("malformed decimal: " + text);
            s.at(i, k) = v;
        }
    }
    return s;
}

Json report_to_json(const ConformalReport& rep) {
    Json j{{"conditions",
            Json{{"integral_nonnegative", rep.integral_nonnegative},
                 {"vacuum_normalized", rep.vacuum_normalized},
                 {"s_real_symmetric", rep.s_real_symmetric},
                 {"s_first_row_nonzero", rep.s_first_row_nonzero},
                 {"t_finite_order", rep.t_finite_order}}},
           {"quasi_conformal", rep.quasi_conformal},
           {"conformal", rep.conformal}};
    j["fusion_nonnegative"] =
        rep.fusion_nonnegative ? Json(*rep.fusion_nonnegative) : Json(nullptr);
    j["witness"] = rep.witness;
    return j;
}

Json candidate_to_json(const CharacterCandidate& c) {
    Json exps = Json::array(), scales = Json::array(), coeffs = Json::array();
    for (const auto& e : c.exponents) exps.push_back(to_string(e));
    for (const auto& s : c.scales) scales.push_back(to_string(s));
    for (const auto& row : c.coeffs) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        coeffs.push_back(r);
    }
    return Json{{"exponents", exps},
                {"scales", scales},
                {"coefficients", coeffs},
                {"denominators_stable", c.denominators_stable}};
}

Json line_candidate_to_json(const LineCandidate& c) {
    Json j{{"lambda", to_string(c.lambda)},
           {"sign_ok", c.sign_ok},
           {"integral", c.integral},
           {"conformal", c.conformal},
           {"witness", c.witness}};
    j["vacuum"] = c.vacuum ? Json(*c.vacuum) : Json(nullptr);
    Json scales = Json::array(), coeffs = Json::array();
    for (const auto& s : c.scales) scales.push_back(to_string(s));
    for (const auto& row : c.coeffs) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        coeffs.push_back(r);
    }
    j["scales"] = scales;
    j["coefficients"] = coeffs;
    return j;
}

}  // namespace vvmf
