#include "hklab/commands.hpp"

#include <algorithm>

#include "hklab/errors.hpp"
#include "hklab/quotient.hpp"
#include "hklab/segre.hpp"
#include "hklab/stirling.hpp"

namespace hklab {

bool ladder_errors_converging(const std::vector<BigRational>& errors) {
    for (size_t i = 1; i < errors.size(); ++i) {
        if (errors[i - 1].is_zero()) {
            if (!errors[i].is_zero()) return false;
        } else if (!(errors[i] < errors[i - 1])) {
            return false;
        }
    }
    return true;
}

ReportDocument cmd_stirling(uint32_t n, uint32_t k) {
    ReportDocument report;
    report.command = "stirling";
    report.inputs = json{{"n", n}, {"k", k}};
    report.results = json{{"value", stirling2(n, k).to_string()}};
    return report;
}

namespace {

json alpha_invariant_checks(int r, int64_t q) {
    AlphaTable table = build_alpha_table(r, q);
    int64_t top = int64_t(r) * (q - 1);
    BigInt box_sum(0);
    bool symmetric = true, truncation_ok = true;
    for (int64_t n = 0; n <= top; ++n) {
        const BigInt& v = table.values[size_t(n)];
        box_sum += v;
        if (v != table.values[size_t(top - n)]) symmetric = false;
        if (n <= q - 1 && v != alpha(r, n)) truncation_ok = false;
    }
    bool sum_ok = box_sum == BigInt(q).pow(uint64_t(r));
    return json{{"box_sum", sum_ok}, {"symmetry", symmetric}, {"truncation", truncation_ok}};
}

}  // namespace

ReportDocument cmd_segre(int r, int s, const std::vector<uint64_t>& q_ladder, uint64_t budget) {
    SegreParams params(r, s);
    ReportDocument report;
    report.command = "segre";
    json ladder_json = json::array();
    for (uint64_t q : q_ladder) ladder_json.push_back(q);
    report.inputs = json{{"r", r}, {"s", s}, {"q_ladder", ladder_json}};

    BigRational ehk = segre_ehk_closed(params);
    BigRational mhk = segre_mhk_closed(params);
    BigRational sum = ehk + mhk;
    int d = params.d();
    BigRational identity_rhs(
        factorial(uint32_t(r)) * stirling2(uint32_t(d), uint32_t(r)) +
            factorial(uint32_t(s)) * stirling2(uint32_t(d), uint32_t(s)),
        factorial(uint32_t(d)));

    json table = json::array();
    std::vector<BigRational> ehk_errors, mhk_errors;
    bool oracle_ok = true;
    SocleCountOptions socle_opts;
    socle_opts.budget = budget;
    for (uint64_t q : q_ladder) {
        SegreFiniteQ fq = segre_finite_q(params, int64_t(q));
        BigInt socle = socle_annihilator_count(r, s, int64_t(q), socle_opts);
        bool match = socle == fq.mhk_numerator;
        oracle_ok = oracle_ok && match;
        BigRational er = fq.ehk_ratio(params), mr = fq.mhk_ratio(params);
        ehk_errors.push_back((er - ehk).abs());
        mhk_errors.push_back((mr - mhk).abs());
        table.push_back(json{{"q", q},
                             {"ehk_numerator", fq.ehk_numerator.to_string()},
                             {"mhk_numerator", fq.mhk_numerator.to_string()},
                             {"socle_count", socle.to_string()},
                             {"oracle_match", match},
                             {"ehk_ratio", exact_value(er)},
                             {"mhk_ratio", exact_value(mr)},
                             {"alpha_invariants", alpha_invariant_checks(r, int64_t(q))}});
    }

    report.results = json{{"ehk", exact_value(ehk)},
                          {"mhk", exact_value(mhk)},
                          {"ehk_plus_mhk", exact_value(sum)},
                          {"finite_q", table}};
    report.add_check("sum-identity", sum == identity_rhs,
                     "e_HK + m_HK = (r! S(d,r) + s! S(d,s)) / d!");
    if (!q_ladder.empty())
        report.add_check("socle-oracle", oracle_ok,
                         "tuple enumeration matches the convolution numerator");
    if (q_ladder.size() >= 2) {
        report.add_check("ehk-convergence", ladder_errors_converging(ehk_errors),
                         "finite-q e_HK error shrinks along the ladder");
        report.add_check("mhk-convergence", ladder_errors_converging(mhk_errors),
                         "finite-q m_HK error shrinks along the ladder");
    }
    return report;
}

ReportDocument cmd_rees(int s) {
    ReesValues rees = rees_formulas(s);
    ReportDocument report;
    report.command = "rees";
    report.inputs = json{{"s", s}};
    report.results = json{{"ehk", exact_value(rees.ehk)}, {"mhk", exact_value(rees.mhk)}};
    SegreParams params(2, s);
    report.add_check("matches-general-ehk", rees.ehk == segre_ehk_closed(params),
                     "Rees form equals the closed form at r = 2");
    report.add_check("matches-general-mhk", rees.mhk == segre_mhk_closed(params),
                     "Rees form equals the closed form at r = 2");
    return report;
}

ReportDocument cmd_veronese(uint32_t e, const std::vector<uint64_t>& q_ladder, uint64_t budget) {
    ReportDocument report;
    report.command = "veronese";
    json ladder_json = json::array();
    for (uint64_t q : q_ladder) ladder_json.push_back(q);
    report.inputs = json{{"e", e}, {"q_ladder", ladder_json}};

    uint64_t mu = veronese_mu(e);
    BigRational ehk = quotient_ehk({e, mu, 0, true});
    BigRational mhk = quotient_mhk(e);

    VeroneseLengthOptions opts;
    opts.budget = budget;
    json table = json::array();
    std::vector<BigRational> errors;
    for (uint64_t q : q_ladder) {
        uint64_t length = veronese_semigroup_length(e, q, opts);
        BigRational ratio(BigInt(int64_t(length)), BigInt(int64_t(q)).pow(2));
        errors.push_back((ratio - ehk).abs());
        table.push_back(json{{"q", q}, {"length", length}, {"ratio", exact_value(ratio)}});
    }

    report.results = json{{"mu", mu},
                          {"ehk", exact_value(ehk)},
                          {"mhk", exact_value(mhk)},
                          {"lattice_samples", table}};
    if (q_ladder.size() >= 2)
        report.add_check("lattice-convergence", ladder_errors_converging(errors),
                         "lattice ratio error shrinks along the ladder");
    return report;
}

ReportDocument cmd_quotient(uint64_t group_order, uint64_t mu, uint32_t p) {
    ReportDocument report;
    report.command = "quotient";
    report.inputs = json{{"group_order", group_order}, {"mu", mu}, {"p", p}};
    BigRational ehk = quotient_ehk({group_order, mu, p, true});
    BigRational mhk = quotient_mhk(group_order);
    report.results = json{{"ehk", exact_value(ehk)}, {"mhk", exact_value(mhk)}};
    report.add_check("mhk-below-ehk", mhk <= ehk, "1/|G| <= mu/|G|");
    return report;
}

namespace {

json spec_inputs_json(const InputSpec& spec) {
    return json{{"spec", render_spec(spec)}, {"emax", spec.e_max}, {"budget", spec.budget}};
}

IdealSpec resolve_ideal(const InputSpec& spec, const std::string& name, bool default_maximal) {
    if (!spec.ring) fail(errc::invalid_argument, "spec has no ring");
    if (!name.empty()) {
        const auto* gens = spec.find_ideal(name);
        if (gens == nullptr) fail(errc::invalid_argument, "no ideal named '" + name + "'");
        return IdealSpec(spec.ring, *gens);
    }
    if (spec.ideals.size() == 1) return IdealSpec(spec.ring, spec.ideals.front().second);
    if (spec.ideals.empty() && default_maximal) {
        std::vector<Polynomial> vars;
        for (int i = 0; i < spec.ring->nvars(); ++i)
            vars.push_back(Polynomial::variable(spec.ring, i));
        return IdealSpec(spec.ring, std::move(vars));
    }
    fail(errc::invalid_argument, "spec has several ideals; pick one with --ideal");
}

json ideal_json(const IdealSpec& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.gens) gens.push_back(polynomial_to_spec_string(g));
    return gens;
}

json mhk_result_json(const MhkResult& result) {
    json table = json::array();
    for (const auto& s : result.sequence.samples)
        table.push_back(diff_sample_to_json(s, result.sequence.dim));
    return json{{"colon_ideal", ideal_json(result.colon_ideal)},
                {"samples", table},
                {"estimate", estimate_to_json(result.estimate)}};
}

}  // namespace

ReportDocument cmd_ehk(const InputSpec& spec, const std::string& ideal_name) {
    ReportDocument report;
    report.command = "ehk";
    report.inputs = spec_inputs_json(spec);
    if (!ideal_name.empty()) report.inputs["ideal"] = ideal_name;

    RingSpec ring = spec.ring_spec();
    IdealSpec ideal = resolve_ideal(spec, ideal_name, /*default_maximal=*/true);
    GBOptions opts{spec.budget};
    HKSampleSequence seq = ehk_samples(ring, ideal, spec.e_max, opts, &report.work);

    json table = json::array();
    for (const auto& s : seq.samples) table.push_back(sample_to_json(s));
    report.results = json{{"dimension", ring.dimension()},
                          {"ideal", ideal_json(ideal)},
                          {"samples", table}};
    if (seq.samples.size() >= 2) {
        HKEstimate est = extrapolate(seq, ring.dimension());
        report.results["estimate"] = estimate_to_json(est);
    }
    return report;
}

ReportDocument cmd_mhk(const InputSpec& spec, const std::string& ideal_name) {
    ReportDocument report;
    report.command = "mhk";
    report.inputs = spec_inputs_json(spec);
    if (!ideal_name.empty()) report.inputs["ideal"] = ideal_name;

    RingSpec ring = spec.ring_spec();
    IdealSpec J = resolve_ideal(spec, ideal_name, /*default_maximal=*/false);
    GBOptions opts{spec.budget};
    MhkResult result = mhk_gorenstein(ring, J, spec.e_max, opts, &report.work);

    report.results = json{{"dimension", ring.dimension()},
                          {"ideal", ideal_json(J)},
                          {"mhk", mhk_result_json(result)}};
    const BigRational& est = result.estimate.point;
    report.add_check("mhk-in-unit-interval",
                     est >= BigRational(0) && est <= BigRational(1), "0 <= estimate <= 1");
    return report;
}

ReportDocument cmd_relhk(const InputSpec& spec, const std::string& inner_name,
                         const std::string& outer_name) {
    ReportDocument report;
    report.command = "relhk";
    report.inputs = spec_inputs_json(spec);
    report.inputs["inner"] = inner_name;
    report.inputs["outer"] = outer_name;

    RingSpec ring = spec.ring_spec();
    IdealSpec inner = resolve_ideal(spec, inner_name, false);
    IdealSpec outer = resolve_ideal(spec, outer_name, false);
    GBOptions opts{spec.budget};
    MhkResult result = relative_hk_sample(ring, inner, outer, spec.e_max, opts, &report.work);

    report.results = json{{"dimension", ring.dimension()},
                          {"inner", ideal_json(inner)},
                          {"outer", ideal_json(outer)},
                          {"relative", mhk_result_json(result)}};
    return report;
}

ReportDocument cmd_bounds(const BigRational& e_mult, const BigRational& ehk,
                          const BigRational& mhk, int d, bool is_hypersurface) {
    ReportDocument report;
    report.command = "bounds";
    report.inputs = json{{"e", e_mult.to_fraction_string()},
                         {"ehk", ehk.to_fraction_string()},
                         {"mhk", mhk.to_fraction_string()},
                         {"d", d},
                         {"hypersurface", is_hypersurface}};
    BoundsReport bounds = bounds_report(e_mult, ehk, mhk, d, is_hypersurface);
    json checks_detail = json::array();
    for (const auto& c : bounds.checks) {
        json entry{{"name", c.name},
                   {"status", check_status_name(c.status)},
                   {"detail", c.detail}};
        if (c.bound) entry["bound"] = exact_value(*c.bound);
        checks_detail.push_back(entry);
        report.add_check(c.name, c.status, c.detail);
    }
    report.results = json{{"lower_coefficient", exact_value(bounds.lower_coefficient)},
                          {"bounds", checks_detail}};
    return report;
}

ReportDocument cmd_probe_q26(uint32_t p, int d, uint32_t e_max, uint64_t budget) {
    ReportDocument report;
    report.command = "probe-q26";
    report.inputs = json{{"p", p}, {"d", d}, {"emax", e_max}, {"budget", budget}};
    GBOptions opts{budget};
    ProbeResult probe = probe_diagonal_hypersurface(p, d, e_max, opts, &report.work);
    report.results = json{{"conjectural_value", exact_value(probe.conjectural_value)},
                          {"mhk", mhk_result_json(probe.mhk)},
                          {"note", "samples reported without any pass/fail claim"}};
    return report;
}

}  // namespace hklab
