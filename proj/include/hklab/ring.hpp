#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hklab/monomial.hpp"

namespace hklab {

/// Ambient polynomial ring F_p[vars] with a fixed monomial order. Shared and
/// immutable; polynomial values hold a handle to it.
struct RingDesc {
    uint32_t p;
    std::vector<std::string> vars;
    MonomialOrder order;

    int nvars() const { return int(vars.size()); }

    bool operator==(const RingDesc& rhs) const {
        return p == rhs.p && vars == rhs.vars && order == rhs.order;
    }
};

using Ring = std::shared_ptr<const RingDesc>;

/// Validates the characteristic and variable names; default order degrevlex.
Ring make_ring(uint32_t p, std::vector<std::string> vars);
Ring make_ring(uint32_t p, std::vector<std::string> vars, MonomialOrder order);

/// Same ring with a different order (variables and characteristic unchanged).
Ring ring_with_order(const Ring& ring, MonomialOrder order);

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b);

int variable_index(const Ring& ring, const std::string& name);  // -1 if absent

}  // namespace hklab
