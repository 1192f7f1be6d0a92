#include "kappad/suites.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kappad/numrep.hpp"
#include "kappad/parallel.hpp"

namespace kappad {

void RunConfig::validate() const {
    if (trunc_order < 1 || trunc_order > 12)
        throw ConfigError("trunc_order must be in 1..12");
    if (lambda_floor < 0 || lambda_floor > 4)
        throw ConfigError("lambda_floor must be in 0..4");
    ConventionProfile::by_name(profile);
    for (double kh : kappa_hbar)
        if (kh <= 0) throw ConfigError("kappa_hbar values must be positive");
    if (n_levels < 4) throw ConfigError("n_levels must be at least 4");
    if (state_count < 1) throw ConfigError("state_count must be positive");
    if (dual_degree < 1 || dual_degree > 3)
        throw ConfigError("dual_degree must be in 1..3");
    if (bilinearity_samples < 1) throw ConfigError("bilinearity_samples must be positive");
}

void RunConfig::apply() const {
    validate();
    truncation().order = trunc_order;
    truncation().floor = lambda_floor;
    exec_mode() = serial ? ExecMode::Serial : ExecMode::OpenMP;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        try {
            if (key == "trunc_order") base.trunc_order = std::stoi(val);
            else if (key == "lambda_floor") base.lambda_floor = std::stoi(val);
            else if (key == "profile") base.profile = val;
            else if (key == "kappa_hbar") {
                base.kappa_hbar.clear();
                std::istringstream vs(val);
                std::string piece;
                while (std::getline(vs, piece, ',')) base.kappa_hbar.push_back(std::stod(piece));
            } else if (key == "kappa_hbar_limit") base.kappa_hbar_limit = std::stod(val);
            else if (key == "n_levels") base.n_levels = std::stoi(val);
            else if (key == "state_count") base.state_count = std::stoi(val);
            else if (key == "seed") base.seed = std::stoul(val);
            else if (key == "bilinearity_samples") base.bilinearity_samples = std::stoi(val);
            else if (key == "dual_degree") base.dual_degree = std::stoi(val);
            else if (key == "report_path") base.report_path = val;
            else if (key == "csv_path") base.csv_path = val;
            else if (key == "timings") base.timings = (val == "1" || val == "true");
            else if (key == "serial") base.serial = (val == "1" || val == "true");
            else throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key " + key);
        } catch (const std::invalid_argument&) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    return base;
}

const std::vector<std::string> suite_names = {
    "hopf-axioms", "jacobi",     "cross-derive",     "pairing-grid", "basis-change",
    "weyl-realization", "dual-basis", "uncertainty", "all"};

int SuiteResult::exit_code() const {
    if (any_genuine_failure(checks)) return 1;
    if (any_documented_erratum(checks)) return 3;
    return 0;
}

namespace {

void append(std::vector<CheckReport>& into, std::vector<CheckReport> more) {
    for (auto& r : more) into.push_back(std::move(r));
}

std::vector<CheckReport> suite_hopf_axioms(const RunConfig& cfg) {
    std::vector<CheckReport> out;
    FullDouble fd = build_full_double();
    append(out, check_coassociativity(*fd.algebra, 2));
    append(out, check_coassociativity(*fd.group, 2));
    append(out, check_counit_axiom(*fd.algebra));
    append(out, check_counit_axiom(*fd.group));
    append(out, check_bialgebra_compat(*fd.algebra));
    append(out, check_bialgebra_compat(*fd.group));
    append(out, check_pairing_bilinearity(*fd.engine, cfg.bilinearity_samples, cfg.seed));
    return out;
}

std::vector<CheckReport> suite_jacobi(const RunConfig& cfg) {
    std::vector<CheckReport> out;
    ConventionProfile profile = ConventionProfile::by_name(cfg.profile);
    PhaseSpace ps = build_phase_space(profile);
    auto phase = jacobi_suite(ps.all_generators, ps.combined, "phase");
    mark_phase_space_erratum(phase, profile);
    append(out, std::move(phase));

    FullDouble fd = build_full_double();
    append(out, jacobi_suite(fd.algebra->generators, fd.algebra->rewrite, "algebra"));
    append(out, jacobi_suite(fd.group->generators, fd.group->rewrite, "group",
                             lorentz_orthogonality_reduce));
    append(out, jacobi_suite(fd.all_generators, fd.combined, "double",
                             lorentz_orthogonality_reduce));
    return out;
}

std::vector<CheckReport> suite_cross_derive(const RunConfig& cfg) {
    std::vector<CheckReport> out;
    append(out, build_phase_space(ConventionProfile::by_name(cfg.profile)).reports);
    append(out, build_full_double().reports);
    return out;
}

std::vector<CheckReport> suite_pairing_grid(const RunConfig& cfg) {
    PhaseSpace ps = build_phase_space(ConventionProfile::by_name(cfg.profile));
    return verify_closed_form_pairings(ps, 3, 3, 3, 3);
}

std::vector<CheckReport> suite_dual_basis(const RunConfig& cfg) {
    std::vector<CheckReport> out;
    PhaseSpace ps = build_phase_space(ConventionProfile::by_name(cfg.profile));
    DualBasisSolution sol = solve_dual_basis(cfg.dual_degree, ps);
    // leading parts F0 = x0 + O(lam), F_l = x_l + O(lam)
    NCPoly lead0 = sol.F0.lambda_truncate(0) - NCPoly::gen(gen_x(0));
    out.push_back(lead0.is_zero()
                      ? CheckReport::pass("dual-lead:F0", "x0 + O(lam)")
                      : CheckReport::fail("dual-lead:F0", lead0.str(), lead0.min_lambda_order()));
    for (int l = 1; l <= 3; ++l) {
        NCPoly lead = sol.Fl[l - 1].lambda_truncate(0) - NCPoly::gen(gen_x(l));
        std::string id = "dual-lead:F" + std::to_string(l);
        out.push_back(lead.is_zero() ? CheckReport::pass(id, "x_l + O(lam)")
                                     : CheckReport::fail(id, lead.str(), lead.min_lambda_order()));
    }
    append(out, verify_dual_basis(sol, 3, 3));
    return out;
}

SuiteResult suite_uncertainty(const RunConfig& cfg) {
    SuiteResult res;
    std::vector<numrep::CsvRow> rows;
    for (double kh : cfg.kappa_hbar) {
        numrep::DeformedSet ops = numrep::build_deformed_operators(kh, cfg.n_levels);
        auto states =
            numrep::random_low_occupation_states(cfg.state_count, cfg.n_levels, cfg.seed);
        numrep::UncertaintyResult ur = numrep::check_uncertainty_suite(ops, states);
        std::string tag = " (kappa hbar = " + std::to_string(kh) + ")";
        for (auto& r : ur.reports) {
            r.id += tag;
            res.checks.push_back(std::move(r));
        }
        for (auto& row : ur.rows) {
            row.state += tag;
            rows.push_back(std::move(row));
        }
        for (auto& r : numrep::check_symbolic_numeric(ops, states)) {
            r.id += tag;
            res.checks.push_back(std::move(r));
        }
    }
    // large kappa: the deformed bounds collapse below float noise
    {
        numrep::DeformedSet ops =
            numrep::build_deformed_operators(cfg.kappa_hbar_limit, cfg.n_levels);
        auto states = numrep::random_low_occupation_states(
            std::min(cfg.state_count, 10), cfg.n_levels, cfg.seed);
        numrep::UncertaintyResult ur = numrep::check_uncertainty_suite(ops, states);
        double worst = 0;
        for (const auto& row : ur.rows)
            if (row.pair == "x0-xk" || row.pair == "Pk-x0")
                worst = std::max(worst, row.rhs);
        std::ostringstream os;
        os << "max kappa-term " << worst << " at kappa hbar = " << cfg.kappa_hbar_limit;
        res.checks.push_back(worst < 1e-10
                                 ? CheckReport::pass("uncertainty:standard-limit", os.str())
                                 : CheckReport::fail("uncertainty:standard-limit", os.str(), -1));
    }
    res.csv = numrep::rows_to_csv(rows);
    return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
    cfg.apply();
    SuiteResult res;
    bool known = false;
    auto want = [&](const char* n) {
        bool w = name == n || name == "all";
        if (name == n) known = true;
        return w;
    };
    if (want("hopf-axioms")) append(res.checks, suite_hopf_axioms(cfg));
    if (want("jacobi")) append(res.checks, suite_jacobi(cfg));
    if (want("cross-derive")) append(res.checks, suite_cross_derive(cfg));
    if (want("pairing-grid")) append(res.checks, suite_pairing_grid(cfg));
    if (want("basis-change")) append(res.checks, classical_basis_change());
    if (want("weyl-realization")) append(res.checks, weyl_realization_check());
    if (want("dual-basis")) append(res.checks, suite_dual_basis(cfg));
    if (want("uncertainty")) {
        SuiteResult u = suite_uncertainty(cfg);
        append(res.checks, std::move(u.checks));
        res.csv = std::move(u.csv);
    }
    if (!known && name != "all")
        throw ConfigError("unknown suite: " + name);
    return res;
}

}  // namespace kappad
