#include "hklab/ring.hpp"

#include <set>

#include "hklab/errors.hpp"
#include "hklab/prime_field.hpp"

namespace hklab {

Ring make_ring(uint32_t p, std::vector<std::string> vars) {
    MonomialOrder order = MonomialOrder::degrevlex(int(vars.size()));
    return make_ring(p, std::move(vars), std::move(order));
}

Ring make_ring(uint32_t p, std::vector<std::string> vars, MonomialOrder order) {
    require_prime(p);
    if (int(vars.size()) > kMaxVars)
        fail(errc::invalid_argument,
             "at most " + std::to_string(kMaxVars) + " variables supported");
    if (order.nvars() != int(vars.size()))
        fail(errc::invalid_argument, "order arity does not match variable count");
    std::set<std::string> unique(vars.begin(), vars.end());
    if (unique.size() != vars.size()) fail(errc::invalid_argument, "duplicate variable name");
    return std::make_shared<const RingDesc>(RingDesc{p, std::move(vars), std::move(order)});
}

Ring ring_with_order(const Ring& ring, MonomialOrder order) {
    return make_ring(ring->p, ring->vars, std::move(order));
}

void require_same_ring(const Ring& a, const Ring& b) {
    if (!same_ring(a, b)) fail(errc::ring_mismatch, "operands from different rings");
}

int variable_index(const Ring& ring, const std::string& name) {
    for (size_t i = 0; i < ring->vars.size(); ++i) {
        if (ring->vars[i] == name) return int(i);
    }
    return -1;
}

}  // namespace hklab
