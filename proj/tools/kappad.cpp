#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kappad/numrep.hpp"
#include "kappad/parser.hpp"
#include "kappad/suites.hpp"

using namespace kappad;

namespace {

RewriteSystem expression_system(const std::string& name, const ConventionProfile& prof) {
    if (name == "phase") return build_phase_space(prof).combined;
    if (name == "weyl") return build_weyl_rewrite();
    if (name != "double") throw ConfigError("unknown system: " + name);
    FullDouble fd = build_full_double();
    RewriteSystem rs = fd.combined;
    rs.merge(build_weyl_rewrite());
    return rs;
}

ReportMeta make_meta(const std::string& suite, const RunConfig& cfg) {
    ReportMeta m;
    m.suite = suite;
    m.profile = cfg.profile;
    m.trunc_order = cfg.trunc_order;
    m.seed = cfg.seed;
    m.timings = cfg.timings;
    return m;
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
}

int emit_report(const std::string& suite, const RunConfig& cfg, const SuiteResult& res) {
    size_t pass = 0, fail = 0, errata = 0;
    for (const auto& c : res.checks) {
        switch (c.status) {
            case CheckReport::Status::Pass: ++pass; break;
            case CheckReport::Status::Fail: ++fail; break;
            case CheckReport::Status::DocumentedErratum: ++errata; break;
        }
        if (c.status != CheckReport::Status::Pass)
            std::cout << "[" << status_name(c.status) << "] " << c.id
                      << (c.residual_text.empty() ? "" : ": " + c.residual_text) << "\n";
    }
    std::cout << suite << ": " << pass << " passed, " << fail << " failed, " << errata
              << " documented errata\n";
    std::string json = report_to_json(make_meta(suite, cfg), res.checks);
    if (!cfg.report_path.empty()) write_or_print(cfg.report_path, json);
    if (!cfg.csv_path.empty() && !res.csv.empty()) write_or_print(cfg.csv_path, res.csv);
    return res.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for a deformed relativistic phase space"};
    app.require_subcommand(1);

    // config file first (env var, then --config pre-scan), flags override
    RunConfig cfg;
    std::string config_path;
    if (const char* env = std::getenv("KAPPAD_CONFIG")) config_path = env;
    for (int k = 1; k + 1 < argc; ++k)
        if (std::string(argv[k]) == "--config") config_path = argv[k + 1];
    try {
        if (!config_path.empty()) cfg = load_config_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string config_path_opt;
    app.add_option("--config", config_path_opt, "key = value configuration file");
    app.add_option("--profile", cfg.profile, "convention profile")
        ->check(CLI::IsMember({"default", "lowered-derive", "lowered-literal", "plain-derive",
                               "plain-literal"}));
    app.add_option("--trunc-order", cfg.trunc_order, "lam series truncation order");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--report", cfg.report_path, "JSON report output path");
    app.add_option("--csv", cfg.csv_path, "CSV output path (uncertainty)");
    app.add_flag("--timings", cfg.timings, "record wall-clock durations in reports");
    app.add_flag("--serial", cfg.serial, "force the serial reference kernels");

    std::string expr_a, expr_b, system_name = "double", suite_name, fmt = "md", in_path;
    int degree = 3;
    double kappa_hbar = 1.0;

    auto* c_no = app.add_subcommand("normal-order", "rewrite an expression to normal form");
    c_no->add_option("expr", expr_a, "expression")->required();
    c_no->add_option("--system", system_name, "double | phase | weyl");

    auto* c_comm = app.add_subcommand("commutator", "normal-ordered commutator of two expressions");
    c_comm->add_option("a", expr_a)->required();
    c_comm->add_option("b", expr_b)->required();
    c_comm->add_option("--system", system_name, "double | phase | weyl");

    auto* c_pair = app.add_subcommand("pair", "duality pairing of a coordinate and a momentum expression");
    c_pair->add_option("group-expr", expr_a)->required();
    c_pair->add_option("alg-expr", expr_b)->required();
    c_pair->add_option("--system", system_name, "phase | double");

    auto* c_cross = app.add_subcommand("derive-cross", "derive cross relations and compare to the catalog");
    auto* c_check = app.add_subcommand("check", "run a verification suite");
    c_check->add_option("suite", suite_name, "suite name")->required()
        ->check(CLI::IsMember(std::vector<std::string>(suite_names.begin(), suite_names.end())));

    auto* c_dual = app.add_subcommand("solve-dual", "solve for the dual coordinate basis");
    c_dual->add_option("--degree", degree, "monomial degree bound");

    auto* c_unc = app.add_subcommand("uncertainty", "numeric uncertainty checks at one deformation value");
    c_unc->add_option("--kappa-hbar", kappa_hbar, "kappa hbar")->required();

    auto* c_rep = app.add_subcommand("report", "render a JSON report");
    c_rep->add_option("--format", fmt, "json | md")->check(CLI::IsMember({"json", "md"}));
    c_rep->add_option("--in", in_path, "JSON report path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.apply();
        ConventionProfile prof = ConventionProfile::by_name(cfg.profile);

        if (*c_no) {
            RewriteSystem rs = expression_system(system_name, prof);
            std::cout << render(normal_order(parse_expression(expr_a), rs)) << "\n";
            return 0;
        }
        if (*c_comm) {
            RewriteSystem rs = expression_system(system_name, prof);
            NCPoly a = parse_expression(expr_a), b = parse_expression(expr_b);
            std::cout << render(commutator(a, b, rs)) << "\n";
            return 0;
        }
        if (*c_pair) {
            NCPoly b = parse_expression(expr_a), a = parse_expression(expr_b);
            Scalar v;
            if (system_name == "double")
                v = build_full_double().engine->pair(b, a);
            else
                v = build_phase_space(prof).engine->pair(b, a);
            std::cout << v.str() << "\n";
            return 0;
        }
        if (*c_cross) {
            SuiteResult res = run_suite("cross-derive", cfg);
            return emit_report("cross-derive", cfg, res);
        }
        if (*c_check) {
            SuiteResult res = run_suite(suite_name, cfg);
            return emit_report(suite_name, cfg, res);
        }
        if (*c_dual) {
            cfg.dual_degree = degree;
            PhaseSpace ps = build_phase_space(prof);
            DualBasisSolution sol = solve_dual_basis(degree, ps);
            std::cout << "F0 = " << render(sol.F0) << "\n";
            for (int l = 1; l <= 3; ++l)
                std::cout << "F" << l << " = " << render(sol.Fl[l - 1]) << "\n";
            return 0;
        }
        if (*c_unc) {
            cfg.kappa_hbar = {kappa_hbar};
            SuiteResult res = run_suite("uncertainty", cfg);
            return emit_report("uncertainty", cfg, res);
        }
        if (*c_rep) {
            std::ifstream in(in_path);
            if (!in) throw ConfigError("cannot open " + in_path);
            std::string json((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            std::cout << (fmt == "md" ? report_json_to_markdown(json) : json) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
