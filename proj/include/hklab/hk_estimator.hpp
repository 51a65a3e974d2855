#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hklab/groebner.hpp"
#include "hklab/rational.hpp"
#include "hklab/ring.hpp"

namespace hklab {

/// A ring presented as F_p[vars]/(relations). The declared dimension is
/// #vars - #relations; the regular-sequence property of the relations is
/// trusted, not verified.
struct RingSpec {
    Ring ring;                         // the ambient polynomial ring
    std::vector<Polynomial> relations;

    RingSpec(Ring ambient, std::vector<Polynomial> rels);

    int dimension() const { return ring->nvars() - int(relations.size()); }
    uint32_t characteristic() const { return ring->p; }
};

struct HKSample {
    uint32_t e;
    uint64_t q;
    uint64_t length;
    BigRational ratio;  // length / q^d, exact
};

struct HKSampleSequence {
    std::vector<HKSample> samples;  // strictly increasing q
    int dim = 0;
};

/// Both finite-truncation estimators plus per-step diagnostics. The point
/// estimate is the two-point fit when available, the last sample otherwise.
struct HKEstimate {
    enum class Method { last_sample, two_point_fit };

    BigRational point;
    Method method = Method::last_sample;
    BigRational last_sample;
    std::optional<BigRational> two_point;
    std::vector<BigRational> deltas;  // ratio steps between consecutive samples
    bool non_monotone = false;        // deltas change sign
};

const char* estimate_method_name(HKEstimate::Method m);

/// Lengths of A/I^[q] for q = p^e, e = 1..e_max, with exact ratios.
HKSampleSequence ehk_samples(const RingSpec& ring, const IdealSpec& ideal, uint32_t e_max,
                             const GBOptions& opts = {}, GBStats* stats = nullptr);

/// Last-sample and two-point estimators over a sample sequence. The
/// two-point fit solves length(q) = a q^d + b q^{d-1} through the last two
/// samples and reports a. Needs at least 2 samples.
HKEstimate extrapolate(const HKSampleSequence& seq, int dim);

/// One finite-q difference of lengths, for the colength-1 constructions.
struct DiffSample {
    uint32_t e;
    uint64_t q;
    uint64_t length_inner;  // l(A/I^[q])
    uint64_t length_outer;  // l(A/I'^[q]), the smaller length
    uint64_t difference() const { return length_inner - length_outer; }
};

struct DiffSequence {
    std::vector<DiffSample> samples;
    int dim = 0;

    HKSampleSequence as_sample_sequence() const;  // difference / q^d
};

struct MhkResult {
    IdealSpec colon_ideal;  // J : m, computed once at q = 1
    DiffSequence sequence;
    HKEstimate estimate;
};

/// Colon-pairing estimator: samples [l(A/J^[q]) - l(A/(J:m)^[q])] / q^d for
/// a parameter-like ideal J with Gorenstein Artinian quotient (socle
/// dimension 1, verified by lengths). For Gorenstein rings this difference
/// converges to the minimal HK multiplicity.
MhkResult mhk_gorenstein(const RingSpec& ring, const IdealSpec& J, uint32_t e_max,
                         const GBOptions& opts = {}, GBStats* stats = nullptr);

/// Relative samples [l(A/I^[q]) - l(A/I'^[q])] / q^d for nested m-primary
/// ideals of colength one (both containment and colength are verified).
MhkResult relative_hk_sample(const RingSpec& ring, const IdealSpec& inner,
                             const IdealSpec& outer, uint32_t e_max, const GBOptions& opts = {},
                             GBStats* stats = nullptr);

enum class CheckStatus { pass, fail, not_applicable };
const char* check_status_name(CheckStatus s);

struct BoundCheck {
    std::string name;
    CheckStatus status;
    std::optional<BigRational> bound;  // the evaluated bound, when applicable
    std::string detail;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    BigRational lower_coefficient;  // the sinc-sum coefficient at dimension d

    bool all_passed() const;
};

/// Coefficient c_d with e_HK >= c_d * e(A):
/// c_d = (1 / (2^d d!)) * sum_{i=0}^{floor(d/2)} (-1)^i (d+1-2i)^d C(d+1, i).
BigRational hk_lower_bound_coefficient(int d);

/// Evaluates the bound suite on supplied invariants:
///   (a) 0 <= m_HK <= 1;
///   (b) m_HK <= (e - e_HK)/(e - 1) when e >= 2;
///   (c) m_HK <= 1 / (2^{d-1} (d-1)!) for hypersurfaces with e = d;
///   (d) e_HK >= c_d * e.
BoundsReport bounds_report(const BigRational& e_mult, const BigRational& ehk,
                           const BigRational& mhk, int d, bool is_hypersurface = false);

struct ProbeResult {
    RingSpec ring;
    MhkResult mhk;
    BigRational conjectural_value;  // 1 / (2^{d-1} (d-1)!)
};

/// Frobenius samples for the diagonal hypersurface
/// F_p[x_0..x_d]/(x_0^d + ... + x_d^d) with J = (x_1..x_d); reports the
/// sequence next to the conjectural value without asserting anything.
ProbeResult probe_diagonal_hypersurface(uint32_t p, int d, uint32_t e_max,
                                        const GBOptions& opts = {}, GBStats* stats = nullptr);

}  // namespace hklab
