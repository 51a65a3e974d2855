#include "hklab/hk_estimator.hpp"

#include <algorithm>
#include <string>

#include "hklab/errors.hpp"
#include "hklab/stirling.hpp"

namespace hklab {

RingSpec::RingSpec(Ring ambient, std::vector<Polynomial> rels) : ring(std::move(ambient)) {
    relations.reserve(rels.size());
    for (auto& r : rels) {
        require_same_ring(ring, r.ring());
        if (!r.is_zero()) relations.push_back(std::move(r));
    }
    if (int(relations.size()) > ring->nvars())
        fail(errc::invalid_argument, "more relations than variables");
}

const char* estimate_method_name(HKEstimate::Method m) {
    return m == HKEstimate::Method::last_sample ? "last-sample" : "two-point-fit";
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

namespace {

uint64_t checked_q(uint32_t p, uint32_t e) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q >= kMaxExponent)
            fail(errc::exponent_overflow,
                 "p^" + std::to_string(e) + " exceeds the exponent width");
    }
    return q;
}

BigRational ratio_of(uint64_t length, uint64_t q, int dim) {
    return BigRational(BigInt(int64_t(length)), BigInt(int64_t(q)).pow(uint64_t(dim)));
}

}  // namespace

HKSampleSequence ehk_samples(const RingSpec& ring, const IdealSpec& ideal, uint32_t e_max,
                             const GBOptions& opts, GBStats* stats) {
    require_same_ring(ring.ring, ideal.ring);
    if (e_max == 0) fail(errc::invalid_argument, "e_max must be at least 1");
    checked_q(ring.characteristic(), e_max);

    HKSampleSequence out;
    out.dim = ring.dimension();
    for (uint32_t e = 1; e <= e_max; ++e) {
        uint64_t q = checked_q(ring.characteristic(), e);
        IdealSpec powered = bracket_power(ideal, q);
        uint64_t length = artinian_length(powered, ring.relations, opts, stats);
        out.samples.push_back({e, q, length, ratio_of(length, q, out.dim)});
    }
    return out;
}

HKEstimate extrapolate(const HKSampleSequence& seq, int dim) {
    if (seq.samples.size() < 2)
        fail(errc::insufficient_data, "extrapolation needs at least 2 samples");
    HKEstimate est;
    est.last_sample = seq.samples.back().ratio;

    for (size_t i = 1; i < seq.samples.size(); ++i)
        est.deltas.push_back(seq.samples[i].ratio - seq.samples[i - 1].ratio);
    bool seen_pos = false, seen_neg = false;
    for (const auto& d : est.deltas) {
        if (d > BigRational(0)) seen_pos = true;
        if (d < BigRational(0)) seen_neg = true;
    }
    est.non_monotone = seen_pos && seen_neg;

    if (dim >= 1) {
        // exact solve of l(q) = a q^d + b q^{d-1} through the last two samples
        const HKSample& s1 = seq.samples[seq.samples.size() - 2];
        const HKSample& s2 = seq.samples.back();
        BigInt q1(int64_t(s1.q)), q2(int64_t(s2.q));
        BigInt l1(int64_t(s1.length)), l2(int64_t(s2.length));
        BigInt q1d1 = q1.pow(uint64_t(dim - 1)), q2d1 = q2.pow(uint64_t(dim - 1));
        BigInt numer = l2 * q1d1 - l1 * q2d1;
        BigInt denom = q1d1 * q2d1 * (q2 - q1);
        est.two_point = BigRational(numer, denom);
        est.point = *est.two_point;
        est.method = HKEstimate::Method::two_point_fit;
    } else {
        est.point = est.last_sample;
        est.method = HKEstimate::Method::last_sample;
    }
    return est;
}

HKSampleSequence DiffSequence::as_sample_sequence() const {
    HKSampleSequence out;
    out.dim = dim;
    for (const auto& s : samples) {
        uint64_t diff = s.difference();
        out.samples.push_back({s.e, s.q, diff, BigRational(BigInt(int64_t(diff)),
                                                           BigInt(int64_t(s.q)).pow(uint64_t(dim)))});
    }
    return out;
}

namespace {

MhkResult difference_samples(const RingSpec& ring, const IdealSpec& inner,
                             const IdealSpec& outer, uint32_t e_max, const GBOptions& opts,
                             GBStats* stats) {
    if (e_max == 0) fail(errc::invalid_argument, "e_max must be at least 1");
    checked_q(ring.characteristic(), e_max);
    MhkResult out{outer, {}, {}};
    out.sequence.dim = ring.dimension();
    for (uint32_t e = 1; e <= e_max; ++e) {
        uint64_t q = checked_q(ring.characteristic(), e);
        uint64_t len_inner = artinian_length(bracket_power(inner, q), ring.relations, opts, stats);
        uint64_t len_outer = artinian_length(bracket_power(outer, q), ring.relations, opts, stats);
        if (len_outer > len_inner)
            fail(errc::arithmetic_bug, "containment violated: outer length exceeds inner");
        out.sequence.samples.push_back({e, q, len_inner, len_outer});
    }
    HKSampleSequence seq = out.sequence.as_sample_sequence();
    if (seq.samples.size() >= 2) {
        out.estimate = extrapolate(seq, out.sequence.dim);
    } else {
        out.estimate.point = seq.samples.front().ratio;
        out.estimate.last_sample = out.estimate.point;
        out.estimate.method = HKEstimate::Method::last_sample;
    }
    return out;
}

}  // namespace

MhkResult mhk_gorenstein(const RingSpec& ring, const IdealSpec& J, uint32_t e_max,
                         const GBOptions& opts, GBStats* stats) {
    require_same_ring(ring.ring, J.ring);
    // work with J + relations so colons happen in the quotient ring
    std::vector<Polynomial> full_gens = J.gens;
    full_gens.insert(full_gens.end(), ring.relations.begin(), ring.relations.end());
    IdealSpec full(ring.ring, std::move(full_gens));

    IdealSpec colon = colon_maximal(full, opts, stats);
    uint64_t len_j = artinian_length(J, ring.relations, opts, stats);
    uint64_t len_colon = artinian_length(colon, ring.relations, opts, stats);
    if (len_j < len_colon || len_j - len_colon != 1)
        fail(errc::not_gorenstein_quotient,
             "socle of A/J has dimension " + std::to_string(int64_t(len_j) - int64_t(len_colon)) +
                 ", expected 1");

    MhkResult out = difference_samples(ring, J, colon, e_max, opts, stats);
    out.colon_ideal = colon;
    return out;
}

MhkResult relative_hk_sample(const RingSpec& ring, const IdealSpec& inner, const IdealSpec& outer,
                             uint32_t e_max, const GBOptions& opts, GBStats* stats) {
    require_same_ring(ring.ring, inner.ring);
    require_same_ring(ring.ring, outer.ring);

    // containment I ⊆ I' in the quotient ring
    std::vector<Polynomial> outer_full = outer.gens;
    outer_full.insert(outer_full.end(), ring.relations.begin(), ring.relations.end());
    GroebnerBasis outer_gb = buchberger(IdealSpec(ring.ring, outer_full), opts, stats);
    for (const auto& f : inner.gens) {
        if (!ideal_contains(outer_gb, f, opts, stats))
            fail(errc::invalid_pair, "inner ideal is not contained in the outer ideal");
    }
    uint64_t len_inner = artinian_length(inner, ring.relations, opts, stats);
    uint64_t len_outer = artinian_length(outer, ring.relations, opts, stats);
    if (len_inner < len_outer || len_inner - len_outer != 1)
        fail(errc::invalid_pair,
             "colength is " + std::to_string(int64_t(len_inner) - int64_t(len_outer)) +
                 ", expected 1");

    return difference_samples(ring, inner, outer, e_max, opts, stats);
}

BigRational hk_lower_bound_coefficient(int d) {
    if (d < 1) fail(errc::invalid_argument, "dimension must be at least 1");
    BigInt sum(0);
    for (int i = 0; i <= d / 2; ++i) {
        BigInt term = BigInt(int64_t(d) + 1 - 2 * i).pow(uint64_t(d)) * binomial(d + 1, i);
        sum += (i % 2 == 0) ? term : -term;
    }
    return BigRational(sum, BigInt(2).pow(uint64_t(d)) * BigInt::factorial(uint32_t(d)));
}

bool BoundsReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.status != CheckStatus::fail; });
}

BoundsReport bounds_report(const BigRational& e_mult, const BigRational& ehk,
                           const BigRational& mhk, int d, bool is_hypersurface) {
    if (e_mult < BigRational(1)) fail(errc::invalid_argument, "multiplicity must be >= 1");
    if (d < 1) fail(errc::invalid_argument, "dimension must be >= 1");

    BoundsReport report;
    report.lower_coefficient = hk_lower_bound_coefficient(d);

    // (a) 0 <= m_HK <= 1
    bool a_ok = mhk >= BigRational(0) && mhk <= BigRational(1);
    report.checks.push_back({"mhk-in-unit-interval",
                             a_ok ? CheckStatus::pass : CheckStatus::fail, std::nullopt,
                             "0 <= m_HK <= 1"});

    // (b) m_HK <= (e - e_HK)/(e - 1) when e >= 2
    if (e_mult >= BigRational(2)) {
        BigRational bound = (e_mult - ehk) / (e_mult - BigRational(1));
        bool ok = mhk <= bound;
        report.checks.push_back({"colength-bound", ok ? CheckStatus::pass : CheckStatus::fail,
                                 bound, "m_HK <= (e - e_HK)/(e - 1)"});
    } else {
        report.checks.push_back({"colength-bound", CheckStatus::not_applicable, std::nullopt,
                                 "needs e >= 2"});
    }

    // (c) hypersurface bound 1 / (2^{d-1} (d-1)!)
    if (is_hypersurface && e_mult == BigRational(int64_t(d))) {
        BigRational bound(BigInt(1),
                          BigInt(2).pow(uint64_t(d - 1)) * BigInt::factorial(uint32_t(d - 1)));
        bool ok = mhk <= bound;
        report.checks.push_back({"hypersurface-bound",
                                 ok ? CheckStatus::pass : CheckStatus::fail, bound,
                                 "m_HK <= 1/(2^{d-1} (d-1)!)"});
    } else {
        report.checks.push_back({"hypersurface-bound", CheckStatus::not_applicable, std::nullopt,
                                 "needs a hypersurface with e = d"});
    }

    // (d) e_HK >= c_d * e
    BigRational lower = report.lower_coefficient * e_mult;
    bool d_ok = ehk >= lower;
    report.checks.push_back({"ehk-lower-bound", d_ok ? CheckStatus::pass : CheckStatus::fail,
                             lower, "e_HK >= c_d * e"});
    return report;
}

ProbeResult probe_diagonal_hypersurface(uint32_t p, int d, uint32_t e_max, const GBOptions& opts,
                                        GBStats* stats) {
    if (d < 2) fail(errc::invalid_argument, "the diagonal probe needs d >= 2");
    if (p <= uint32_t(d))
        fail(errc::hypothesis_violation, "the probe hypothesis needs p > d");

    std::vector<std::string> vars;
    for (int i = 0; i <= d; ++i) vars.push_back("x" + std::to_string(i));
    Ring ring = make_ring(p, vars);
    Polynomial rel = Polynomial::zero(ring);
    for (int i = 0; i <= d; ++i)
        rel = rel + Polynomial::variable(ring, i).pow(uint64_t(d));
    RingSpec spec(ring, {rel});

    std::vector<Polynomial> j_gens;
    for (int i = 1; i <= d; ++i) j_gens.push_back(Polynomial::variable(ring, i));
    IdealSpec J(ring, std::move(j_gens));

    BigRational conjectural(BigInt(1),
                            BigInt(2).pow(uint64_t(d - 1)) * BigInt::factorial(uint32_t(d - 1)));
    return ProbeResult{spec, mhk_gorenstein(spec, J, e_max, opts, stats), conjectural};
}

}  // namespace hklab
