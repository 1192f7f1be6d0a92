#pragma once

#include <string>
#include <vector>

#include "kappad/kappa.hpp"

namespace kappad {

struct RunConfig {
    int trunc_order = 6;
    int lambda_floor = 1;
    std::string profile = "default";
    std::vector<double> kappa_hbar = {0.5, 1.0, 10.0};
    double kappa_hbar_limit = 1e12;
    int n_levels = 40;
    int state_count = 100;
    unsigned long seed = 12345;
    int bilinearity_samples = 40;
    int dual_degree = 3;
    std::string report_path;  // empty: stdout only
    std::string csv_path;
    bool timings = false;
    bool serial = false;  // force the serial reference path

    void validate() const;  // throws ConfigError
    void apply() const;     // installs truncation and execution mode
};

// key = value lines, '#' comments; unknown keys rejected
RunConfig load_config_file(const std::string& path, RunConfig base = {});

extern const std::vector<std::string> suite_names;  // includes "all"

struct SuiteResult {
    std::vector<CheckReport> checks;
    std::string csv;  // nonempty only for the uncertainty suite
    int exit_code() const;  // 0 pass, 3 documented errata only, 1 failures
};

SuiteResult run_suite(const std::string& name, const RunConfig& config);

}  // namespace kappad
