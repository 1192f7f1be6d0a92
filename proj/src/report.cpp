#include "kappad/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace kappad {

using nlohmann::json;
using nlohmann::ordered_json;

CheckReport CheckReport::pass(std::string id, std::string inputs) {
    CheckReport r;
    r.id = std::move(id);
    r.inputs = std::move(inputs);
    return r;
}

CheckReport CheckReport::fail(std::string id, std::string residual, int lam_order,
                              std::string inputs) {
    CheckReport r;
    r.id = std::move(id);
    r.status = Status::Fail;
    r.residual_text = std::move(residual);
    r.first_fail_lambda_order = lam_order;
    r.inputs = std::move(inputs);
    return r;
}

const char* status_name(CheckReport::Status s) {
    switch (s) {
        case CheckReport::Status::Pass: return "pass";
        case CheckReport::Status::Fail: return "fail";
        case CheckReport::Status::DocumentedErratum: return "documented-erratum";
    }
    return "?";
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status != CheckReport::Status::Pass) return false;
    return true;
}

bool any_genuine_failure(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status == CheckReport::Status::Fail) return true;
    return false;
}

bool any_documented_erratum(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status == CheckReport::Status::DocumentedErratum) return true;
    return false;
}

std::string report_to_json(const ReportMeta& meta, const std::vector<CheckReport>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json rec;
        rec["suite"] = meta.suite;
        rec["check_id"] = c.id;
        rec["status"] = status_name(c.status);
        rec["residual_text"] = c.residual_text;
        rec["profile"] = meta.profile;
        rec["N"] = meta.trunc_order;
        rec["seed"] = meta.seed;
        rec["duration_ms"] = meta.timings ? c.duration_ms : 0.0;
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

std::string report_json_to_markdown(const std::string& json_text) {
    json arr = json::parse(json_text);
    std::ostringstream os;
    os << "| suite | check | status | residual |\n";
    os << "|---|---|---|---|\n";
    for (const auto& rec : arr) {
        std::string residual = rec.value("residual_text", "");
        if (residual.empty()) residual = "0";
        os << "| " << rec.value("suite", "") << " | " << rec.value("check_id", "")
           << " | " << rec.value("status", "") << " | " << residual << " |\n";
    }
    return os.str();
}

}  // namespace kappad
