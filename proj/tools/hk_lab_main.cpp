// hk-lab: exact Hilbert-Kunz multiplicity experiments from the command line.
//
// Subcommands: stirling, segre, rees, veronese, quotient, ehk, mhk, relhk,
// bounds, probe-q26. Reports are deterministic JSON (or CSV with --csv).
// Exit codes: 0 all checks pass, 1 some check failed, 2 input error,
// 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hklab/commands.hpp"
#include "hklab/errors.hpp"

namespace {

using namespace hklab;

struct OutputOptions {
    bool csv = false;
    std::string out_file;
};

int emit(const ReportDocument& report, const OutputOptions& output) {
    std::string text = output.csv ? render_csv(report) : render_json(report);
    if (output.out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(output.out_file, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open " << output.out_file << " for writing\n";
            return 2;
        }
        file << text;
    }
    return report.has_failures() ? 1 : 0;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) fail(errc::invalid_argument, "cannot read spec file " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<uint64_t> parse_ladder(const std::string& text) {
    std::vector<uint64_t> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    if (out.empty()) fail(errc::invalid_argument, "empty q ladder");
    return out;
}

uint64_t default_budget() {
    if (const char* env = std::getenv("HKLAB_BUDGET")) return std::stoull(env);
    return 10'000'000;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert-Kunz multiplicity toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    OutputOptions output;
    bool force_json = false;
    app.add_flag("--json", force_json, "force the full JSON report everywhere");
    app.add_flag("--csv", output.csv, "emit the sample table as CSV instead of JSON");
    app.add_option("--out", output.out_file, "write the report to a file");

    uint64_t budget = default_budget();
    app.add_option("--budget", budget, "reduction-step / enumeration budget")
        ->envname("HKLAB_BUDGET");

    // stirling n k
    uint32_t st_n = 0, st_k = 0;
    auto* stirling_cmd = app.add_subcommand("stirling", "Stirling number of the second kind");
    stirling_cmd->add_option("n", st_n)->required();
    stirling_cmd->add_option("k", st_k)->required();

    // segre r s
    int sg_r = 0, sg_s = 0;
    std::string sg_ladder = "2,4,8,16";
    auto* segre_cmd = app.add_subcommand("segre", "Segre product closed forms and finite-q table");
    segre_cmd->add_option("r", sg_r)->required();
    segre_cmd->add_option("s", sg_s)->required();
    segre_cmd->add_option("--q-ladder", sg_ladder, "comma-separated q values");

    // rees s
    int rs_s = 0;
    auto* rees_cmd = app.add_subcommand("rees", "Rees-algebra specialization (r = 2)");
    rees_cmd->add_option("s", rs_s)->required();

    // veronese e
    uint32_t vr_e = 0;
    std::string vr_ladder = "3,9,27,81";
    auto* veronese_cmd = app.add_subcommand("veronese", "Veronese subring of k[x,y]");
    veronese_cmd->add_option("e", vr_e)->required();
    veronese_cmd->add_option("--q-ladder", vr_ladder, "comma-separated q values");

    // quotient --order G --mu M
    uint64_t qt_order = 0, qt_mu = 0;
    uint32_t qt_p = 0;
    auto* quotient_cmd = app.add_subcommand("quotient", "quotient-singularity closed forms");
    quotient_cmd->add_option("--order", qt_order, "group order |G|")->required();
    quotient_cmd->add_option("--mu", qt_mu, "minimal generator count of the module")->required();
    quotient_cmd->add_option("--p", qt_p, "characteristic (0 skips the coprimality check)");

    // spec-driven commands
    std::string spec_file, ideal_name, inner_name, outer_name;
    uint32_t e_max = 3;
    auto add_spec_options = [&](CLI::App* cmd, bool needs_pair) {
        cmd->add_option("--spec", spec_file, "ring/ideal description file")->required();
        cmd->add_option("--emax", e_max, "largest Frobenius exponent e (q = p^e)");
        if (needs_pair) {
            cmd->add_option("--inner", inner_name, "name of the smaller ideal")->required();
            cmd->add_option("--outer", outer_name, "name of the larger ideal")->required();
        } else {
            cmd->add_option("--ideal", ideal_name, "ideal name from the spec");
        }
    };
    auto* ehk_cmd = app.add_subcommand("ehk", "Hilbert-Kunz sample sequence and estimate");
    add_spec_options(ehk_cmd, false);
    auto* mhk_cmd = app.add_subcommand("mhk", "minimal HK multiplicity via the colon pairing");
    add_spec_options(mhk_cmd, false);
    auto* relhk_cmd = app.add_subcommand("relhk", "relative HK samples for a colength-1 pair");
    add_spec_options(relhk_cmd, true);

    // bounds
    std::string bd_e = "1", bd_ehk = "1", bd_mhk = "1";
    int bd_d = 1;
    bool bd_hyper = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "inequality suite on supplied invariants");
    bounds_cmd->add_option("--e", bd_e, "multiplicity e(A), rational like 3/2")->required();
    bounds_cmd->add_option("--ehk", bd_ehk, "e_HK(A)")->required();
    bounds_cmd->add_option("--mhk", bd_mhk, "m_HK(A)")->required();
    bounds_cmd->add_option("--d", bd_d, "dimension")->required();
    bounds_cmd->add_flag("--hypersurface", bd_hyper, "input is a hypersurface with e = d");

    // probe-q26
    uint32_t pb_p = 5, pb_emax = 2;
    int pb_d = 2;
    auto* probe_cmd = app.add_subcommand("probe-q26", "diagonal hypersurface probe (report only)");
    probe_cmd->add_option("--p", pb_p, "characteristic, must exceed d")->required();
    probe_cmd->add_option("--d", pb_d, "degree and dimension d")->required();
    probe_cmd->add_option("--emax", pb_emax, "largest Frobenius exponent");

    CLI11_PARSE(app, argc, argv);

    try {
        ReportDocument report;
        if (stirling_cmd->parsed()) {
            report = cmd_stirling(st_n, st_k);
            if (!force_json && !output.csv && output.out_file.empty()) {
                std::cout << report.results["value"].get<std::string>() << "\n";
                return 0;
            }
        } else if (segre_cmd->parsed()) {
            report = cmd_segre(sg_r, sg_s, parse_ladder(sg_ladder), budget);
        } else if (rees_cmd->parsed()) {
            report = cmd_rees(rs_s);
        } else if (veronese_cmd->parsed()) {
            report = cmd_veronese(vr_e, parse_ladder(vr_ladder), budget);
        } else if (quotient_cmd->parsed()) {
            report = cmd_quotient(qt_order, qt_mu, qt_p);
        } else if (ehk_cmd->parsed() || mhk_cmd->parsed() || relhk_cmd->parsed()) {
            InputSpec spec = parse_spec(read_file(spec_file));
            spec.e_max = e_max;
            spec.budget = budget;
            if (ehk_cmd->parsed()) {
                report = cmd_ehk(spec, ideal_name);
            } else if (mhk_cmd->parsed()) {
                report = cmd_mhk(spec, ideal_name);
            } else {
                report = cmd_relhk(spec, inner_name, outer_name);
            }
        } else if (bounds_cmd->parsed()) {
            report = cmd_bounds(BigRational::from_string(bd_e), BigRational::from_string(bd_ehk),
                                BigRational::from_string(bd_mhk), bd_d, bd_hyper);
        } else if (probe_cmd->parsed()) {
            report = cmd_probe_q26(pb_p, pb_d, pb_emax, budget);
        }
        return emit(report, output);
    } catch (const Error& err) {
        nlohmann::json record{{"error", errc_name(err.code())}, {"message", err.what()}};
        std::cerr << record.dump(2) << "\n";
        return err.code() == errc::budget_exceeded ? 3 : 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
