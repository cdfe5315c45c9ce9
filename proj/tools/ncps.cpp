// Command-line front end: closed-form and numeric spectral distances on the
// deformed two-mode Fock space, verification suite, theta sweeps, and table
// export in text/json/csv.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncps/closed_form.hpp"
#include "ncps/dirac.hpp"
#include "ncps/errors.hpp"
#include "ncps/sector_norm.hpp"
#include "ncps/sup_solver.hpp"
#include "ncps/verification.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitSingular = 3;
constexpr int kExitNotConverged = 4;

struct RunConfig {
    double hbar = 1.0;
    std::optional<double> theta;
    std::optional<double> mu;
    std::optional<double> nu;
    int cutoff = ncps::kDefaultCutoff;
    int buffer = ncps::kDefaultBuffer;
    unsigned seed = 42;
    std::string format = "text";
    std::string out;
    double tol_ball = 1e-9;
    double tol_obj = 1e-7;
};

struct TableRow {
    int m, n, k, l;
    double theta;
    double closed_form;
    std::optional<double> numeric_sup;
    std::optional<double> ball_norm;
    std::optional<double> max_residual;
};

ncps::PhaseSpaceParams resolve_params(const RunConfig& cfg) {
    if (cfg.mu.has_value() != cfg.nu.has_value()) {
        throw ncps::InvalidParameter("--mu and --nu must be given together");
    }
    if (cfg.mu.has_value()) {
        if (cfg.theta.has_value()) {
            throw ncps::InvalidParameter("--theta is mutually exclusive with --mu/--nu");
        }
        return ncps::make_params_mu_nu(cfg.hbar, *cfg.mu, *cfg.nu);
    }
    return ncps::make_params(cfg.hbar, cfg.theta.value_or(0.0));
}

ncps::FockLabel parse_label(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= text.size()) {
        throw ncps::InvalidParameter("label must be 'm,n', got '" + text + "'");
    }
    const std::string first = text.substr(0, comma);
    const std::string second = text.substr(comma + 1);
    for (const std::string& part : {first, second}) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw ncps::InvalidParameter("label components must be non-negative integers, got '" +
                                         text + "'");
        }
    }
    return {std::stoi(first), std::stoi(second)};
}

json config_json(const RunConfig& cfg, double theta_resolved) {
    json j;
    j["hbar"] = cfg.hbar;
    j["theta"] = theta_resolved;
    j["cutoff"] = cfg.cutoff;
    j["buffer"] = cfg.buffer;
    j["seed"] = cfg.seed;
    j["tol_ball"] = cfg.tol_ball;
    j["tol_obj"] = cfg.tol_obj;
    return j;
}

json row_json(const TableRow& r) {
    json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["k"] = r.k;
    j["l"] = r.l;
    j["theta"] = r.theta;
    j["closed_form"] = r.closed_form;
    if (r.numeric_sup) j["numeric_sup"] = *r.numeric_sup;
    if (r.ball_norm) j["ball_norm"] = *r.ball_norm;
    if (r.max_residual) j["max_residual"] = *r.max_residual;
    return j;
}

std::string csv_field(std::optional<double> v) {
    if (!v) return "";
    std::ostringstream os;
    os << std::setprecision(17) << *v;
    return os.str();
}

void emit_csv(std::ostream& os, const std::vector<TableRow>& rows) {
    os << "m,n,k,l,theta,closed_form,numeric_sup,ball_norm\n";
    for (const auto& r : rows) {
        os << r.m << ',' << r.n << ',' << r.k << ',' << r.l << ',' << std::setprecision(17)
           << r.theta << ',' << r.closed_form << ',' << csv_field(r.numeric_sup) << ','
           << csv_field(r.ball_norm) << '\n';
    }
}

void emit_text(std::ostream& os, const std::vector<TableRow>& rows) {
    for (const auto& r : rows) {
        os << std::setprecision(8) << "(" << r.m << "," << r.n << ") -> (" << r.k << "," << r.l
           << ")  theta=" << r.theta << "  closed_form=" << r.closed_form;
        if (r.numeric_sup) os << "  numeric_sup=" << *r.numeric_sup;
        if (r.ball_norm) os << "  ball_norm=" << *r.ball_norm;
        if (r.max_residual) os << "  max_residual=" << *r.max_residual;
        os << '\n';
    }
}

void emit_table(const RunConfig& cfg, double theta, const std::vector<TableRow>& rows,
                const std::vector<ncps::CheckResult>* checks = nullptr) {
    std::ostringstream buffer;
    if (cfg.format == "json") {
        json j;
        j["config"] = config_json(cfg, theta);
        j["rows"] = json::array();
        for (const auto& r : rows) j["rows"].push_back(row_json(r));
        if (checks) {
            j["checks"] = json::array();
            for (const auto& c : *checks) {
                json cj;
                cj["name"] = c.name;
                cj["passed"] = c.passed;
                cj["measured"] = c.measured;
                cj["threshold"] = c.threshold;
                cj["violations"] = c.violations;
                cj["details"] = c.details;
                j["checks"].push_back(cj);
            }
        }
        buffer << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        emit_csv(buffer, rows);
    } else {
        emit_text(buffer, rows);
    }
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) throw ncps::Error("cannot open output file " + cfg.out);
        f << buffer.str();
    } else {
        std::cout << buffer.str();
    }
}

TableRow make_row(const ncps::PhaseSpaceParams& params, const RunConfig& cfg, ncps::FockLabel a,
                  ncps::FockLabel b, bool with_verify) {
    TableRow row{a.m, a.n, b.m, b.n, params.theta,
                 ncps::distance(params, a, b).closed_form, {}, {}, {}};
    if (with_verify) {
        ncps::SupSolverConfig scfg;
        scfg.cutoff = cfg.cutoff;
        scfg.buffer = cfg.buffer;
        scfg.seed = cfg.seed;
        scfg.tol_obj = cfg.tol_obj;
        row.numeric_sup = ncps::sup_distance(params, a, b, scfg).value;
        if (a == b) {
            row.ball_norm = 0.0;
            row.max_residual = -1.0 / (params.beta * params.beta);
        } else {
            const ncps::DiagonalElement e =
                ncps::optimal_element_general(params, a, b, cfg.cutoff, cfg.buffer);
            row.ball_norm = ncps::ball_condition(e, params, cfg.cutoff, cfg.tol_ball).norm;
            row.max_residual = ncps::constraint_relations(e, params, cfg.tol_ball).max_residual;
        }
    }
    return row;
}

int run_distance(const RunConfig& cfg, const std::string& from, const std::string& to,
                 bool with_verify) {
    const ncps::PhaseSpaceParams params = resolve_params(cfg);
    const ncps::FockLabel a = parse_label(from);
    const ncps::FockLabel b = parse_label(to);
    emit_table(cfg, params.theta, {make_row(params, cfg, a, b, with_verify)});
    return 0;
}

int run_sweep(const RunConfig& cfg, double theta_min, double theta_max, int steps,
              const std::vector<std::string>& pair_specs) {
    if (steps < 2 && theta_min != theta_max) {
        throw ncps::InvalidParameter("sweep needs --steps >= 2");
    }
    if (theta_min < 0 || theta_min > theta_max || theta_max >= cfg.hbar) {
        throw ncps::InvalidParameter("sweep needs 0 <= theta_min <= theta_max < hbar");
    }
    std::vector<std::pair<ncps::FockLabel, ncps::FockLabel>> pairs;
    if (pair_specs.empty()) {
        pairs.push_back({{0, 0}, {1, 0}});
    }
    for (const auto& spec : pair_specs) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) {
            throw ncps::InvalidParameter("pair must be 'm,n:k,l', got '" + spec + "'");
        }
        pairs.push_back({parse_label(spec.substr(0, colon)), parse_label(spec.substr(colon + 1))});
    }

    std::vector<TableRow> rows;
    bool ratio_ok = true;
    std::string ratio_msg;
    for (int s = 0; s < std::max(steps, 1); ++s) {
        const double theta = (steps <= 1) ? theta_min
                                          : theta_min + (theta_max - theta_min) * s / (steps - 1);
        const ncps::PhaseSpaceParams p = ncps::make_params(cfg.hbar, theta);
        for (const auto& [a, b] : pairs) {
            rows.push_back(make_row(p, cfg, a, b, false));
        }
    }
    // ratio check against the theta = 0 rows when present
    if (theta_min == 0.0) {
        const size_t npairs = pairs.size();
        for (size_t idx = 0; idx < rows.size(); ++idx) {
            const TableRow& base = rows[idx % npairs];
            const TableRow& row = rows[idx];
            if (base.closed_form == 0.0) continue;
            const double ratio = row.closed_form / base.closed_form;
            const double expect =
                std::sqrt(1.0 - row.theta * row.theta / (cfg.hbar * cfg.hbar));
            if (std::abs(ratio - expect) > 1e-9) {
                ratio_ok = false;
                ratio_msg = "ratio check failed at theta=" + std::to_string(row.theta);
            }
        }
    }
    emit_table(cfg, theta_min, rows);
    if (!ratio_ok) {
        std::cerr << "ncps sweep: " << ratio_msg << '\n';
        return kExitVerifyFailed;
    }
    return 0;
}

int run_export(const RunConfig& cfg, bool with_verify, int label_max) {
    const ncps::PhaseSpaceParams params = resolve_params(cfg);
    std::vector<TableRow> rows;
    for (int m = 0; m <= label_max; ++m) {
        for (int n = 0; n <= label_max; ++n) {
            rows.push_back(make_row(params, cfg, {0, 0}, {m, n}, with_verify));
        }
    }
    emit_table(cfg, params.theta, rows);
    return 0;
}

int run_verify(const RunConfig& cfg) {
    ncps::VerifyConfig vcfg;
    vcfg.hbar = cfg.hbar;
    vcfg.cutoff = cfg.cutoff;
    vcfg.buffer = cfg.buffer;
    vcfg.seed = cfg.seed;
    vcfg.tol_ball = cfg.tol_ball;
    vcfg.tol_obj = cfg.tol_obj;
    if (cfg.mu.has_value() || cfg.theta.has_value()) {
        const double theta = resolve_params(cfg).theta;
        vcfg.grid_thetas = {theta};
        vcfg.sandwich_thetas = {theta};
        if (theta == 0.0) {
            std::cout << "mode: Moyal limit (theta = 0)\n";
        }
    }
    const auto checks = ncps::run_verification(vcfg);
    bool all_passed = true;
    std::vector<TableRow> no_rows;
    for (const auto& c : checks) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  (measured "
                  << std::scientific << std::setprecision(2) << c.measured << ", threshold "
                  << c.threshold << ")\n";
        for (const auto& line : c.details) {
            std::cout << "       " << line << '\n';
        }
        all_passed = all_passed && c.passed;
    }
    if (cfg.format == "json" || !cfg.out.empty()) {
        emit_table(cfg, resolve_params(cfg).theta, no_rows, &checks);
    }
    return all_passed ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral distances between two-mode Fock states on the deformed phase space"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("NCPS_DEFAULT_CUTOFF")) {
        try {
            cfg.cutoff = std::stoi(env);
        } catch (...) {
            std::cerr << "ncps: bad NCPS_DEFAULT_CUTOFF '" << env << "'\n";
            return kExitParse;
        }
    }

    double theta_opt = 0.0, mu_opt = 0.0, nu_opt = 0.0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--hbar", cfg.hbar, "Planck constant (default 1)");
        auto* t = sub->add_option("--theta", theta_opt, "deformation parameter");
        auto* m = sub->add_option("--mu", mu_opt, "position-position parameter");
        auto* n = sub->add_option("--nu", nu_opt, "momentum-momentum parameter");
        t->each([&](const std::string&) { cfg.theta = theta_opt; });
        m->each([&](const std::string&) { cfg.mu = mu_opt; });
        n->each([&](const std::string&) { cfg.nu = nu_opt; });
        sub->add_option("--cutoff", cfg.cutoff, "Fock levels per mode");
        sub->add_option("--buffer", cfg.buffer, "levels kept clear below the cutoff");
        sub->add_option("--seed", cfg.seed, "seed for sampled diagnostics");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out, "write output to file");
        sub->add_option("--tol-ball", cfg.tol_ball, "ball feasibility tolerance");
        sub->add_option("--tol-obj", cfg.tol_obj, "solver objective tolerance");
    };

    std::string from_label, to_label;
    bool with_verify = false;
    auto* dist = app.add_subcommand("distance", "closed-form distance between two Fock states");
    add_common(dist);
    dist->add_option("--from", from_label, "source label m,n")->required();
    dist->add_option("--to", to_label, "target label k,l")->required();
    dist->add_flag("--verify", with_verify, "also run the numeric sup and ball check");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);

    double theta_min = 0.0, theta_max = 0.0;
    int steps = 2;
    std::vector<std::string> pair_specs;
    auto* sweep = app.add_subcommand("sweep", "tabulate distances across theta");
    add_common(sweep);
    sweep->add_option("--theta-min", theta_min, "sweep start")->required();
    sweep->add_option("--theta-max", theta_max, "sweep end")->required();
    sweep->add_option("--steps", steps, "number of theta samples");
    sweep->add_option("--pair", pair_specs, "state pair 'm,n:k,l' (repeatable)");

    bool export_verify = false;
    int export_label_max = 3;
    auto* exp = app.add_subcommand("export", "emit the verification-grid distance table");
    add_common(exp);
    exp->add_flag("--verify", export_verify, "include numeric sup and ball columns");
    exp->add_option("--label-max", export_label_max, "largest label component");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (dist->parsed()) return run_distance(cfg, from_label, to_label, with_verify);
        if (verify->parsed()) return run_verify(cfg);
        if (sweep->parsed()) return run_sweep(cfg, theta_min, theta_max, steps, pair_specs);
        if (exp->parsed()) return run_export(cfg, export_verify, export_label_max);
    } catch (const ncps::SingularRegime& e) {
        std::cerr << "ncps: singular regime: " << e.what() << '\n';
        return kExitSingular;
    } catch (const ncps::NotConverged& e) {
        std::cerr << "ncps: solver did not converge: " << e.what() << '\n';
        return kExitNotConverged;
    } catch (const ncps::InvalidParameter& e) {
        std::cerr << "ncps: " << e.what() << '\n';
        return kExitParse;
    } catch (const ncps::InvalidCutoff& e) {
        std::cerr << "ncps: " << e.what() << '\n';
        return kExitParse;
    } catch (const ncps::LabelOutOfRange& e) {
        std::cerr << "ncps: " << e.what() << '\n';
        return kExitParse;
    } catch (const ncps::Error& e) {
        std::cerr << "ncps: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return 0;
}
