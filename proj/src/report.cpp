#include "hklab/report.hpp"

namespace hklab {

void ReportDocument::add_check(const std::string& name, CheckStatus status,
                               const std::string& detail) {
    checks.push_back({name, status, detail});
}

void ReportDocument::add_check(const std::string& name, bool passed, const std::string& detail) {
    add_check(name, passed ? CheckStatus::pass : CheckStatus::fail, detail);
}

bool ReportDocument::has_failures() const {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::fail) return true;
    }
    return false;
}

json exact_value(const BigRational& value) {
    return json{{"exact", value.to_fraction_string()},
                {"decimal", value.to_decimal_string(12)}};
}

json sample_to_json(const HKSample& sample) {
    return json{{"e", sample.e},
                {"q", sample.q},
                {"length", sample.length},
                {"ratio", exact_value(sample.ratio)}};
}

json estimate_to_json(const HKEstimate& estimate) {
    json deltas = json::array();
    for (const auto& d : estimate.deltas) deltas.push_back(exact_value(d));
    json out{{"point", exact_value(estimate.point)},
             {"method", estimate_method_name(estimate.method)},
             {"last_sample", exact_value(estimate.last_sample)},
             {"deltas", deltas},
             {"non_monotone", estimate.non_monotone}};
    if (estimate.two_point) out["two_point_fit"] = exact_value(*estimate.two_point);
    return out;
}

json diff_sample_to_json(const DiffSample& sample, int dim) {
    BigRational ratio(BigInt(int64_t(sample.difference())),
                      BigInt(int64_t(sample.q)).pow(uint64_t(dim)));
    return json{{"e", sample.e},
                {"q", sample.q},
                {"length_inner", sample.length_inner},
                {"length_outer", sample.length_outer},
                {"difference", sample.difference()},
                {"ratio", exact_value(ratio)}};
}

json report_to_json(const ReportDocument& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back(json{{"name", c.name},
                              {"status", check_status_name(c.status)},
                              {"detail", c.detail}});
    }
    json work{{"reduction_steps", report.work.reduction_steps},
              {"pairs_considered", report.work.pairs_considered},
              {"pairs_reduced_to_zero", report.work.pairs_reduced_to_zero},
              {"basis_elements", report.work.basis_elements},
              {"lengths_computed", report.work.lengths_computed}};
    return json{{"command", report.command},
                {"inputs", report.inputs},
                {"results", report.results},
                {"checks", checks},
                {"work", work}};
}

std::string render_json(const ReportDocument& report) {
    return report_to_json(report).dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

namespace {

/// Depth-first search for the first array of objects, in key order.
const json* find_table(const json& node) {
    if (!node.is_object()) return nullptr;
    for (auto it = node.begin(); it != node.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value().front().is_object())
            return &it.value();
    }
    for (auto it = node.begin(); it != node.end(); ++it) {
        if (const json* found = find_table(it.value())) return found;
    }
    return nullptr;
}

}  // namespace

std::string render_csv(const ReportDocument& report) {
    // emit the first array of objects found in results as a flat table
    const json* table = find_table(report.results);
    if (table == nullptr) return "";

    // collect scalar column names from the first row; nested exact values
    // expand into <name>_exact and <name>_decimal
    std::vector<std::string> columns;
    const json& first = table->front();
    for (auto it = first.begin(); it != first.end(); ++it) {
        if (it.value().is_object() && it.value().contains("exact")) {
            columns.push_back(it.key() + "_exact");
            columns.push_back(it.key() + "_decimal");
        } else if (!it.value().is_structured()) {
            columns.push_back(it.key());
        }
    }
    std::string out;
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ",";
        out += csv_escape(columns[i]);
    }
    out += "\n";
    for (const auto& row : *table) {
        for (size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ",";
            const std::string& col = columns[i];
            json cell;
            if (col.size() > 6 && col.substr(col.size() - 6) == "_exact") {
                cell = row.at(col.substr(0, col.size() - 6)).at("exact");
            } else if (col.size() > 8 && col.substr(col.size() - 8) == "_decimal") {
                cell = row.at(col.substr(0, col.size() - 8)).at("decimal");
            } else {
                cell = row.at(col);
            }
            if (cell.is_string()) {
                out += csv_escape(cell.get<std::string>());
            } else {
                out += cell.dump();
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace hklab
