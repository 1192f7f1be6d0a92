#pragma once

#include <string>
#include <vector>

namespace kappad {

struct CheckReport {
    enum class Status { Pass, Fail, DocumentedErratum };

    std::string id;
    Status status = Status::Pass;
    std::string residual_text;        // empty when the residual is zero
    std::string inputs;               // human description of what was checked
    int first_fail_lambda_order = -1; // lam order of the first failing term
    double duration_ms = 0;

    static CheckReport pass(std::string id, std::string inputs = "");
    static CheckReport fail(std::string id, std::string residual, int lam_order,
                            std::string inputs = "");
};

const char* status_name(CheckReport::Status s);

bool all_passed(const std::vector<CheckReport>& reports);
bool any_genuine_failure(const std::vector<CheckReport>& reports);
bool any_documented_erratum(const std::vector<CheckReport>& reports);

struct ReportMeta {
    std::string suite;
    std::string profile;
    int trunc_order = 6;
    unsigned long seed = 0;
    bool timings = false;
};

std::string report_to_json(const ReportMeta& meta, const std::vector<CheckReport>& checks);
std::string report_json_to_markdown(const std::string& json_text);

}  // namespace kappad
