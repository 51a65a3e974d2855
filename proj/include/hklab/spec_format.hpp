#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hklab/hk_estimator.hpp"
#include "hklab/polynomial.hpp"
#include "hklab/ring.hpp"

namespace hklab {

/// A parsed ring-and-ideals description. Command parameters (e_max, ladders,
/// budgets) ride along but come from flags, not from the text.
///
/// Grammar:
///   spec := stmt*
///   stmt := ("char" INT | "vars" IDENT+ | "rel" POLY
///            | "ideal" IDENT "=" POLY ("," POLY)*) ";"
/// Polynomial expressions support +, -, *, ^, integer coefficients,
/// parentheses, and juxtaposition as multiplication (2x, x y).
struct InputSpec {
    Ring ring;  // null until both char and vars are seen
    std::vector<Polynomial> relations;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;

    // command parameters carried alongside the parsed text
    uint32_t e_max = 3;
    std::vector<uint64_t> q_ladder;
    uint64_t budget = 10'000'000;

    const std::vector<Polynomial>* find_ideal(const std::string& name) const;
    RingSpec ring_spec() const;

    bool operator==(const InputSpec& rhs) const;
};

/// Parses the textual format; errors carry line/column positions.
InputSpec parse_spec(const std::string& text);

/// Canonical text form; render(parse(text)) reparses to an equal spec.
std::string render_spec(const InputSpec& spec);

std::string polynomial_to_spec_string(const Polynomial& f);

}  // namespace hklab
