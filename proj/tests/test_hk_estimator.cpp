#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hklab/errors.hpp"
#include "hklab/hk_estimator.hpp"

using namespace hklab;

namespace {

Polynomial var(const Ring& ring, int i) { return Polynomial::variable(ring, i); }

RingSpec quadric_ring() {
    Ring ring = make_ring(5, {"x", "y", "z"});
    Polynomial f = var(ring, 0).pow(2) + var(ring, 1).pow(2) + var(ring, 2).pow(2);
    return RingSpec(ring, {f});
}

IdealSpec maximal_ideal(const Ring& ring) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ring->nvars(); ++i) gens.push_back(var(ring, i));
    return IdealSpec(ring, gens);
}

bool within(const BigRational& value, const BigRational& target, const BigRational& tol) {
    return (value - target).abs() < tol;
}

}  // namespace

TEST_CASE("regular rings: every sample ratio is exactly 1") {
    RingSpec plane(make_ring(5, {"x", "y"}), {});
    HKSampleSequence seq = ehk_samples(plane, maximal_ideal(plane.ring), 3);
    REQUIRE(seq.samples.size() == 3);
    for (const auto& s : seq.samples) CHECK(s.ratio == BigRational(1));
    CHECK(seq.samples[2].q == 125);
    CHECK(seq.samples[2].length == 15625);

    RingSpec line(make_ring(5, {"x"}), {});
    HKSampleSequence line_seq = ehk_samples(line, maximal_ideal(line.ring), 3);
    for (const auto& s : line_seq.samples) {
        CHECK(s.length == s.q);
        CHECK(s.ratio == BigRational(1));
    }
}

TEST_CASE("quadric samples sit in (1,2) and trend to 3/2") {
    RingSpec ring = quadric_ring();
    HKSampleSequence seq = ehk_samples(ring, maximal_ideal(ring.ring), 3);
    REQUIRE(seq.samples.size() == 3);
    for (const auto& s : seq.samples) {
        CHECK(s.ratio > BigRational(1));
        CHECK(s.ratio < BigRational(2));
    }
    HKEstimate est = extrapolate(seq, 2);
    CHECK(within(est.point, BigRational(3, 2), BigRational(1, 20)));
    CHECK(within(est.last_sample, BigRational(3, 2), BigRational(1, 20)));
}

TEST_CASE("extrapolate: constant ratios give the constant") {
    HKSampleSequence seq;
    seq.dim = 2;
    for (uint32_t e = 1; e <= 3; ++e) {
        uint64_t q = 1;
        for (uint32_t i = 0; i < e; ++i) q *= 5;
        seq.samples.push_back({e, q, q * q, BigRational(1)});
    }
    HKEstimate est = extrapolate(seq, 2);
    CHECK(est.point == BigRational(1));
    CHECK(est.method == HKEstimate::Method::two_point_fit);
    CHECK_FALSE(est.non_monotone);
    for (const auto& d : est.deltas) CHECK(d == BigRational(0));
}

TEST_CASE("extrapolate: synthetic l(q) = (3q^2 - q)/2 recovers 3/2 exactly") {
    HKSampleSequence seq;
    seq.dim = 2;
    for (uint64_t q : {5, 25}) {
        uint64_t l = (3 * q * q - q) / 2;
        seq.samples.push_back({q == 5 ? 1u : 2u, q, l,
                               BigRational(int64_t(l), int64_t(q * q))});
    }
    HKEstimate est = extrapolate(seq, 2);
    REQUIRE(est.two_point.has_value());
    CHECK(*est.two_point == BigRational(3, 2));
    CHECK(est.point == BigRational(3, 2));
}

TEST_CASE("extrapolate needs two samples") {
    HKSampleSequence seq;
    seq.dim = 1;
    seq.samples.push_back({1, 5, 5, BigRational(1)});
    try {
        extrapolate(seq, 1);
        FAIL("expected InsufficientData");
    } catch (const Error& e) {
        CHECK(e.code() == errc::insufficient_data);
    }
}

TEST_CASE("mhk_gorenstein: quadric parameter ideal lands near 1/2") {
    RingSpec ring = quadric_ring();
    IdealSpec J(ring.ring, {var(ring.ring, 1), var(ring.ring, 2)});
    MhkResult result = mhk_gorenstein(ring, J, 3);
    CHECK(within(result.estimate.point, BigRational(1, 2), BigRational(1, 20)));
    // per-q: differences stay non-negative and ratios sit in (0, 1]
    for (const auto& s : result.sequence.samples) {
        CHECK(s.length_inner >= s.length_outer);
        BigRational ratio(int64_t(s.difference()), int64_t(s.q * s.q));
        CHECK(ratio > BigRational(0));
        CHECK(ratio <= BigRational(1));
    }
}

TEST_CASE("mhk_gorenstein: regular rings give exactly 1") {
    RingSpec plane(make_ring(5, {"x", "y"}), {});
    MhkResult result = mhk_gorenstein(plane, maximal_ideal(plane.ring), 3);
    CHECK(result.estimate.point == BigRational(1));
    for (const auto& s : result.sequence.samples) {
        CHECK(BigRational(int64_t(s.difference()), int64_t(s.q * s.q)) == BigRational(1));
    }

    // one-dimensional: J = (x^2), J:m = (x), samples (2q - q)/q = 1
    RingSpec line(make_ring(5, {"x"}), {});
    IdealSpec J(line.ring, {var(line.ring, 0).pow(2)});
    MhkResult line_result = mhk_gorenstein(line, J, 3);
    CHECK(line_result.estimate.point == BigRational(1));
    for (const auto& s : line_result.sequence.samples) CHECK(s.difference() == s.q);
}

TEST_CASE("mhk_gorenstein rejects non-Gorenstein quotients") {
    // k[x,y]/(x,y)^2 has a two-dimensional socle
    Ring ring = make_ring(5, {"x", "y"});
    RingSpec spec(ring, {});
    IdealSpec J(ring, {var(ring, 0).pow(2), var(ring, 0) * var(ring, 1), var(ring, 1).pow(2)});
    try {
        mhk_gorenstein(spec, J, 2);
        FAIL("expected NotGorensteinQuotient");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_gorenstein_quotient);
    }
}

TEST_CASE("mhk samples agree across parameter-ideal choices on the quadric") {
    RingSpec ring = quadric_ring();
    Polynomial y = var(ring.ring, 1), z = var(ring.ring, 2);
    MhkResult a = mhk_gorenstein(ring, IdealSpec(ring.ring, {y, z}), 3);
    MhkResult b = mhk_gorenstein(ring, IdealSpec(ring.ring, {y + z, y - z}), 3);
    CHECK(within(a.estimate.point, b.estimate.point, BigRational(1, 1000000)));
    // the sequences agree at every matched q here
    REQUIRE(a.sequence.samples.size() == b.sequence.samples.size());
    for (size_t i = 0; i < a.sequence.samples.size(); ++i)
        CHECK(a.sequence.samples[i].difference() == b.sequence.samples[i].difference());
}

TEST_CASE("relative samples: monomial pair in the plane is exactly 1") {
    RingSpec plane(make_ring(5, {"x", "y"}), {});
    IdealSpec inner(plane.ring, {var(plane.ring, 0).pow(2), var(plane.ring, 1)});
    IdealSpec outer(plane.ring, {var(plane.ring, 0), var(plane.ring, 1)});
    MhkResult result = relative_hk_sample(plane, inner, outer, 3);
    for (const auto& s : result.sequence.samples) {
        CHECK(s.length_inner == 2 * s.q * s.q);
        CHECK(s.length_outer == s.q * s.q);
    }
    CHECK(result.estimate.point == BigRational(1));
}

TEST_CASE("relative samples: quadric pair reproduces the mhk sequence") {
    RingSpec ring = quadric_ring();
    IdealSpec inner(ring.ring, {var(ring.ring, 1), var(ring.ring, 2)});
    MhkResult rel = relative_hk_sample(ring, inner, maximal_ideal(ring.ring), 3);
    MhkResult mhk = mhk_gorenstein(ring, inner, 3);
    REQUIRE(rel.sequence.samples.size() == mhk.sequence.samples.size());
    for (size_t i = 0; i < rel.sequence.samples.size(); ++i)
        CHECK(rel.sequence.samples[i].difference() == mhk.sequence.samples[i].difference());
}

TEST_CASE("per-q inequalities: mhk sample <= relative sample <= ehk sample") {
    RingSpec ring = quadric_ring();
    IdealSpec J(ring.ring, {var(ring.ring, 1), var(ring.ring, 2)});
    MhkResult mhk = mhk_gorenstein(ring, J, 3);
    MhkResult rel = relative_hk_sample(ring, J, maximal_ideal(ring.ring), 3);
    HKSampleSequence ehk = ehk_samples(ring, maximal_ideal(ring.ring), 3);
    for (size_t i = 0; i < ehk.samples.size(); ++i) {
        uint64_t qd = ehk.samples[i].q * ehk.samples[i].q;
        BigRational mhk_q(int64_t(mhk.sequence.samples[i].difference()), int64_t(qd));
        BigRational rel_q(int64_t(rel.sequence.samples[i].difference()), int64_t(qd));
        CHECK(rel_q >= mhk_q);
        CHECK(rel_q <= ehk.samples[i].ratio);
    }
}

TEST_CASE("relative pair validation") {
    RingSpec plane(make_ring(5, {"x", "y"}), {});
    Polynomial x = var(plane.ring, 0), y = var(plane.ring, 1);
    // colength 2
    try {
        relative_hk_sample(plane, IdealSpec(plane.ring, {x.pow(3), y}),
                           IdealSpec(plane.ring, {x, y}), 2);
        FAIL("expected InvalidPair");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_pair);
    }
    // not contained
    try {
        relative_hk_sample(plane, IdealSpec(plane.ring, {y.pow(2), x}),
                           IdealSpec(plane.ring, {x.pow(2), y}), 2);
        FAIL("expected InvalidPair");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_pair);
    }
}

TEST_CASE("lower-bound coefficient values") {
    CHECK(hk_lower_bound_coefficient(3) == BigRational(2, 3));
    CHECK(hk_lower_bound_coefficient(2) == BigRational(3, 4));
    CHECK(hk_lower_bound_coefficient(1) == BigRational(1));
}

TEST_CASE("bounds report on the quadric: both bounds are 1/2 with equality") {
    BoundsReport report = bounds_report(BigRational(2), BigRational(3, 2), BigRational(1, 2), 2,
                                        /*is_hypersurface=*/true);
    REQUIRE(report.checks.size() == 4);
    CHECK(report.checks[0].status == CheckStatus::pass);  // unit interval
    CHECK(report.checks[1].status == CheckStatus::pass);
    CHECK(*report.checks[1].bound == BigRational(1, 2));
    CHECK(report.checks[2].status == CheckStatus::pass);
    CHECK(*report.checks[2].bound == BigRational(1, 2));
    CHECK(report.checks[3].status == CheckStatus::pass);
    CHECK(report.all_passed());
}

TEST_CASE("bounds report on a regular ring: colength and hypersurface checks idle") {
    BoundsReport report = bounds_report(BigRational(1), BigRational(1), BigRational(1), 2, false);
    CHECK(report.checks[0].status == CheckStatus::pass);
    CHECK(report.checks[1].status == CheckStatus::not_applicable);
    CHECK(report.checks[2].status == CheckStatus::not_applicable);
    CHECK(report.checks[3].status == CheckStatus::pass);
    CHECK(report.all_passed());
}

TEST_CASE("bounds report flags violations") {
    BoundsReport report = bounds_report(BigRational(2), BigRational(3, 2), BigRational(3, 4), 2,
                                        true);
    CHECK(report.checks[1].status == CheckStatus::fail);  // 3/4 > 1/2
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("diagonal probe at d = 2 reproduces the quadric") {
    ProbeResult probe = probe_diagonal_hypersurface(5, 2, 3);
    CHECK(probe.conjectural_value == BigRational(1, 2));
    CHECK(within(probe.mhk.estimate.point, BigRational(1, 2), BigRational(1, 20)));
}

TEST_CASE("diagonal probe at d = 2, p = 3 reports finite samples") {
    ProbeResult probe = probe_diagonal_hypersurface(3, 2, 2);
    REQUIRE(probe.mhk.sequence.samples.size() == 2);
    for (const auto& s : probe.mhk.sequence.samples) CHECK(s.difference() > 0);
}

TEST_CASE("diagonal probe validates its hypotheses") {
    CHECK_THROWS_AS(probe_diagonal_hypersurface(5, 1, 2), Error);
    try {
        probe_diagonal_hypersurface(3, 3, 1);
        FAIL("expected HypothesisViolation for p <= d");
    } catch (const Error& e) {
        CHECK(e.code() == errc::hypothesis_violation);
    }
}

TEST_CASE("diagonal probe at d = 3 runs at small scale") {
    ProbeResult probe = probe_diagonal_hypersurface(5, 3, 1);
    CHECK(probe.conjectural_value == BigRational(1, 8));
    REQUIRE(probe.mhk.sequence.samples.size() == 1);
    CHECK(probe.mhk.sequence.samples[0].q == 5);
}

TEST_CASE("extrapolate flags non-monotone delta sequences") {
    HKSampleSequence seq;
    seq.dim = 1;
    seq.samples.push_back({1, 5, 5, BigRational(1)});
    seq.samples.push_back({2, 25, 30, BigRational(6, 5)});
    seq.samples.push_back({3, 125, 125, BigRational(1)});
    HKEstimate est = extrapolate(seq, 1);
    CHECK(est.non_monotone);
    REQUIRE(est.deltas.size() == 2);
    CHECK(est.deltas[0] > BigRational(0));
    CHECK(est.deltas[1] < BigRational(0));
}

TEST_CASE("regular three-variable ring also samples exactly 1") {
    RingSpec space(make_ring(5, {"x", "y", "z"}), {});
    HKSampleSequence seq = ehk_samples(space, maximal_ideal(space.ring), 2);
    for (const auto& s : seq.samples) CHECK(s.ratio == BigRational(1));
    MhkResult mhk = mhk_gorenstein(space, maximal_ideal(space.ring), 2);
    CHECK(mhk.estimate.point == BigRational(1));
    for (const auto& s : mhk.sequence.samples) CHECK(s.difference() == s.q * s.q * s.q);
}

TEST_CASE("diagonal quartic probe feels the characteristic") {
    // p = 7 is 3 mod 4: every term of (x1^4+..+x4^4)^5 carries a multinomial
    // coefficient divisible by 7 once the exponents respect the q-bounds
    // (base-7 digits of 5 cannot split across four parts of at most one),
    // so the socle power falls into the bracket ideal and the sample is 0.
    ProbeResult bad = probe_diagonal_hypersurface(7, 4, 1);
    CHECK(bad.mhk.sequence.samples[0].difference() == 0);

    // p = 13 is 1 mod 4: the sample is positive and already near the target
    ProbeResult good = probe_diagonal_hypersurface(13, 4, 1);
    CHECK(good.mhk.sequence.samples[0].difference() > 0);
    CHECK(good.mhk.sequence.samples[0].length_inner == 4 * 13 * 13 * 13 * 13);
}
