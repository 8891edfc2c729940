// Command line front end: exact modular-form series, MLDE solving, family
// tables, conformality checks, and the rank-4 parameter scans.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "vvmf/json_io.hpp"
#include "vvmf/scan.hpp"

namespace {

using namespace vvmf;

struct Output {
    std::string format = "json";  // json | csv | pretty

    void emit(const Json& j) const {
        if (format == "json") {
            std::cout << j.dump(2) << "\n";
        } else if (format == "csv") {
            emit_csv(j);
        } else {
            std::cout << j.dump(2) << "\n";
        }
    }

    // Flat key,value rows; array entries indexed by position. Same numeric
    // content as the JSON emitter.
    void emit_csv(const Json& j, const std::string& prefix = "") const {
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it)
                emit_csv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else if (j.is_array()) {
            size_t i = 0;
            for (const auto& v : j) emit_csv(v, prefix + "[" + std::to_string(i++) + "]");
        } else {
            std::cout << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump())
                      << "\n";
        }
    }
};

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("config", "cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        out[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

Json expansion_with_mlde(const CharacterVectorExpansion& exp, const MonicMlde& mlde) {
    Json j = expansion_to_json(exp);
    j["mlde"] = monic_mlde_to_json(mlde);
    return j;
}

int cmd_solve(int rank, const std::string& exps_text, size_t terms,
              const std::string& rescale_text, const Output& out) {
    std::vector<Rational> exps = parse_rational_list(exps_text);
    ExponentTuple tuple(exps);
    ThetaOde<Rational> ode = theta_from_exponents(rank, tuple);
    auto sols = family_solve(ode, tuple, terms + 2);
    std::optional<std::vector<Rational>> rescale;
    if (!rescale_text.empty()) rescale = parse_rational_list(rescale_text);
    auto expansion = to_q_expansion(sols, terms, rescale);
    Json j = expansion_to_json(expansion);
    j["theta_ode"] = theta_ode_to_json(ode);
    if (rank == 4) j["mlde"] = monic_mlde_to_json(monic_from_symmetric(4, tuple));
    out.emit(j);
    return 0;
}

int cmd_check(const std::string& candidate_path, const std::string& smatrix_path,
              size_t vacuum, mpfr_prec_t prec, const Output& out) {
    std::ifstream cf(candidate_path);
    if (!cf) throw CLI::ValidationError("check", "cannot open " + candidate_path);
    std::ifstream sf(smatrix_path);
    if (!sf) throw CLI::ValidationError("check", "cannot open " + smatrix_path);
    Json cj = Json::parse(cf), sj = Json::parse(sf);
    CharacterVectorExpansion cand = expansion_from_json(cj);
    SMatrix s = smatrix_from_json(sj, prec);
    ConformalOptions opts;
    opts.vacuum_index = vacuum;
    ConformalReport rep = check_conformal(cand, s, opts);
    out.emit(report_to_json(rep));
    return 0;
}

int cmd_table(const std::string& name, size_t terms, const std::string& c_text,
              const std::string& h_text, mpfr_prec_t prec, const Output& out) {
    if (name == "hard-hexagon" || name == "rank4-quasi") {
        auto inst = builtin_instance(name);
        auto ode = theta_from_exponents(4, inst.exponents);
        auto sols = family_solve(ode, inst.exponents, terms + 2);
        auto expansion = to_q_expansion(sols, terms, inst.rescale);
        out.emit(expansion_with_mlde(expansion, inst.mlde));
        return 0;
    }
    if (name == "table3") {
        Json rows = Json::array();
        for (int k = 1; k <= 4; ++k) {
            auto inst = builtin_instance("table3-row-" + std::to_string(k));
            auto ode = theta_from_exponents(4, inst.exponents);
            auto sols = family_solve(ode, inst.exponents, terms + 2);
            auto expansion = to_q_expansion(sols, terms, inst.rescale);
            Json row = expansion_with_mlde(expansion, inst.mlde);
            row["smatrix"] = smatrix_to_json(inst.smatrix(prec));
            rows.push_back(row);
        }
        out.emit(Json{{"rows", rows}});
        return 0;
    }
    if (name == "H") {
        auto h = gamma03_H(terms, prec);
        Json j = expansion_to_json(h.expansion);
        j["smatrix"] = smatrix_to_json(h.smatrix);
        out.emit(j);
        return 0;
    }
    if (name == "rank2-extremal") {
        if (c_text.empty() || h_text.empty())
            throw CLI::ValidationError("table", "rank2-extremal needs --c and --h");
        Rank2Params p(parse_rational(c_text), parse_rational(h_text));
        auto row = rank2_extremal_character(p, terms, prec);
        Json j = expansion_to_json(row.expansion);
        j["dim_m0"] = Json{{"value", row.dim_m0.value.to_decimal(40)},
                           {"integral", row.dim_m0.integral},
                           {"rounded", row.dim_m0.rounded.get_str()}};
        j["k1"] = p.k1_int();
        out.emit(j);
        return 0;
    }
    throw CLI::ValidationError("table", "unknown table: " + name);
}

int cmd_family(const std::string& lambda_text, size_t terms, const Output& out) {
    Rational lambda = parse_rational(lambda_text);
    Gamma03Family fam = gamma03_family(lambda, terms);
    Json j = expansion_to_json(fam.F);
    j["lambda"] = to_string(fam.lambda);
    j["irreducible"] = fam.irreducible;
    j["rational_scalars"] = fam.rational_scalars;
    j["mlde"] = Json{{"a", to_string(fam.a)}, {"b", to_string(fam.b)}, {"c", to_string(fam.c)}};
    out.emit(j);
    return 0;
}

int cmd_dim_m0(const std::string& c_text, const std::string& h_text, long k1,
               mpfr_prec_t prec, const Output& out) {
    Rank2Params p(parse_rational(c_text), parse_rational(h_text));
    if (p.k1_int() != k1)
        throw std::domain_error("k1 = " + to_string(p.k1) + " does not match --k1");
    auto r = dim_M0(p, prec);
    out.emit(Json{{"c", to_string(p.c)},
                  {"h", to_string(p.h)},
                  {"k1", k1},
                  {"value", r.value.to_decimal(40)},
                  {"integral", r.integral},
                  {"rounded", r.rounded.get_str()}});
    return 0;
}

int cmd_scan(const std::string& config_path, const Output& out) {
    auto kv = read_config(config_path);
    auto get = [&](const std::string& key, const std::string& dflt) {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : it->second;
    };
    std::string mode = get("mode", "tuples");
    if (mode == "gamma03-f" || mode == "gamma03-g") {
        LineScanConfig cfg;
        cfg.family_g = (mode == "gamma03-g");
        cfg.numerator_min = std::stol(get("numerator_min", "-8"));
        cfg.numerator_max = std::stol(get("numerator_max", "-1"));
        cfg.irreducible_only = get("irreducible_only", "true") == "true";
        cfg.require_nonnegative = get("require_nonnegative", cfg.family_g ? "false" : "true")
                                  == "true";
        cfg.n_terms = static_cast<size_t>(std::stoul(get("terms", "25")));
        cfg.rescale_bound = Integer(get("rescale_bound", "10000000"));
        auto results = gamma03_line_scan(cfg);
        for (const auto& cand : results) std::cout << line_candidate_to_json(cand).dump() << "\n";
        return 0;
    }
    ScanConfig cfg;
    cfg.denominator_bound = std::stol(get("denominator_bound", "60"));
    std::string dens = get("denominators", "");
    if (!dens.empty()) {
        std::stringstream ss(dens);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.denominators.push_back(std::stol(item));
    }
    cfg.exp_min = parse_rational(get("exp_min", "-2"));
    cfg.exp_max = parse_rational(get("exp_max", "2"));
    cfg.n_terms = static_cast<size_t>(std::stoul(get("terms", "25")));
    cfg.rescale_bound = Integer(get("rescale_bound", "10000000"));
    cfg.use_sign_prescreen = get("sign_prescreen", "true") == "true";
    cfg.use_denominator_stabilization = get("denom_stabilization", "true") == "true";
    cfg.workers = static_cast<size_t>(std::stoul(get("workers", "1")));
    auto results = rank4_scan(cfg);
    for (const auto& cand : results) std::cout << candidate_to_json(cand).dump() << "\n";
    (void)out;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact vector-valued modular forms from modular linear ODEs"};
    app.require_subcommand(1);
    // --h is a domain option (conformal weight); keep help on --help only.
    app.set_help_flag("--help", "print usage");

    Output out;
    std::string config_file;
    unsigned long precision = 256;
    app.add_option("--format", out.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--precision", precision, "working precision in bits");
    app.add_option("--config", config_file, "flat key=value defaults file");

    auto* solve = app.add_subcommand("solve", "Frobenius-solve an MLDE from cusp exponents");
    solve->set_help_flag("--help", "print usage");
    int rank = 4;
    std::string exps_text, rescale_text;
    unsigned long terms = 25;
    solve->add_option("--rank", rank, "2 or 4")->required();
    solve->add_option("--exponents", exps_text, "comma separated rationals")->required();
    solve->add_option("--terms", terms, "number of q-coefficients");
    solve->add_option("--rescale", rescale_text, "per-coordinate leading rationals");

    auto* check = app.add_subcommand("check", "conformality report for a candidate");
    check->set_help_flag("--help", "print usage");
    std::string cand_path, smat_path;
    unsigned long vacuum = 0;
    check->add_option("--candidate", cand_path, "candidate JSON file")->required();
    check->add_option("--smatrix", smat_path, "S-matrix JSON file")->required();
    check->add_option("--vacuum", vacuum, "vacuum coordinate index");

    auto* scan = app.add_subcommand("scan", "rank-4 exponent or lambda-line scan");
    scan->set_help_flag("--help", "print usage");
    std::string scan_config;
    scan->add_option("--config", scan_config, "scan configuration file")->required();

    auto* table = app.add_subcommand("table", "built-in instances and closed tables");
    table->set_help_flag("--help", "print usage");
    std::string table_name, c_text, h_text;
    table->add_option("name", table_name,
                      "rank2-extremal|table3|hard-hexagon|rank4-quasi|H")
        ->required();
    table->add_option("--terms", terms, "number of q-coefficients");
    table->add_option("--c", c_text, "central charge (rank2-extremal)");
    table->add_option("--h", h_text, "conformal weight (rank2-extremal)");

    auto* family = app.add_subcommand("family", "eta-quotient induced families");
    family->set_help_flag("--help", "print usage");
    std::string family_name = "gamma0-3", lambda_text;
    family->add_option("name", family_name, "gamma0-3")->required();
    family->add_option("--lambda", lambda_text, "family parameter p/q")->required();
    family->add_option("--terms", terms, "number of q-coefficients");

    auto* dimm0 = app.add_subcommand("dim-m0", "extremal rank-2 dimension formula");
    dimm0->set_help_flag("--help", "print usage");
    long k1 = 0;
    dimm0->add_option("--c", c_text, "central charge p/q")->required();
    dimm0->add_option("--h", h_text, "conformal weight p/q")->required();
    dimm0->add_option("--k1", k1, "minimal weight (0, -2 or -4)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (!config_file.empty()) {
            auto kv = read_config(config_file);
            if (kv.count("format") && out.format == "json") out.format = kv["format"];
            if (kv.count("precision") && precision == 256)
                precision = std::stoul(kv["precision"]);
            if (kv.count("terms") && terms == 25) terms = std::stoul(kv["terms"]);
        }
        auto prec = static_cast<mpfr_prec_t>(precision);
        if (solve->parsed())
            return cmd_solve(rank, exps_text, terms, rescale_text, out);
        if (check->parsed()) return cmd_check(cand_path, smat_path, vacuum, prec, out);
        if (scan->parsed()) return cmd_scan(scan_config, out);
        if (table->parsed()) return cmd_table(table_name, terms, c_text, h_text, prec, out);
        if (family->parsed()) {
            if (family_name != "gamma0-3")
                throw CLI::ValidationError("family", "unknown family " + family_name);
            return cmd_family(lambda_text, terms, out);
        }
        if (dimm0->parsed()) return cmd_dim_m0(c_text, h_text, k1, prec, out);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
