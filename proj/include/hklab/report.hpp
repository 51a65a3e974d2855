#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hklab/groebner.hpp"
#include "hklab/hk_estimator.hpp"
#include "hklab/rational.hpp"

namespace hklab {

using json = nlohmann::json;  // objects dump with sorted keys: byte-stable

struct CheckFlag {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// The structured result record every command emits. Rendering is
/// deterministic: exact rationals appear as "num/den" strings next to
/// 12-place decimals, and the work section carries reduction-step counters
/// rather than wall-clock times.
struct ReportDocument {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<CheckFlag> checks;
    GBStats work;

    void add_check(const std::string& name, CheckStatus status, const std::string& detail = "");
    void add_check(const std::string& name, bool passed, const std::string& detail = "");
    bool has_failures() const;
};

/// {"exact": "4/3", "decimal": "1.333333333333"}
json exact_value(const BigRational& value);

json sample_to_json(const HKSample& sample);
json estimate_to_json(const HKEstimate& estimate);
json diff_sample_to_json(const DiffSample& sample, int dim);

json report_to_json(const ReportDocument& report);
std::string render_json(const ReportDocument& report);

/// CSV of the report's sample table (commands without one return the header
/// of an empty table).
std::string render_csv(const ReportDocument& report);

}  // namespace hklab
