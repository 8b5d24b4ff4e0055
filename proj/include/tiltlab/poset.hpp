#ifndef TILTLAB_POSET_HPP
#define TILTLAB_POSET_HPP

#include "tiltlab/engine.hpp"

#include <compare>
#include <vector>

namespace tiltlab {

struct PosetNode {
    int i = 0, k = 0; // 1 <= i <= k <= n, graded by deg = i
    auto operator<=>(const PosetNode&) const = default;
};

// The module encoded by a node: (1,1,k) in row one, otherwise the
// self-orthogonal Delta-filtered module with |i-j| = 1 chosen by parity.
OmegaDescriptor node_module_desc(int i, int k);
OmegaDescriptor node_module_desc(const PosetNode& node);

// Inverse of the node encoding, when the descriptor is in its image.
std::optional<PosetNode> node_of_desc(const OmegaDescriptor& d);

// The graded poset whose size-n anti-chains classify the Delta-filtered
// tilting modules. covers holds the generating relation, closure its
// transitive closure.
struct TiltingPoset {
    int n = 0;
    std::vector<PosetNode> nodes; // sorted by (i,k)
    std::vector<std::vector<bool>> covers;
    std::vector<std::vector<bool>> closure;

    int index(const PosetNode& node) const;
    bool prec(const PosetNode& a, const PosetNode& b) const;
    bool covers_rel(const PosetNode& a, const PosetNode& b) const;
};

TiltingPoset build_poset(int n);

// All anti-chains of the given size, each sorted, output in lexicographic
// order.
std::vector<std::vector<PosetNode>> antichains(const TiltingPoset& poset, int size);

struct OrderIsoViolation {
    PosetNode a, b;
    bool prec = false;
    bool ext_nonzero = false;
};

struct OrderIsoReport {
    std::vector<OrderIsoViolation> violations;
    bool ok() const { return violations.empty(); }
};

// For every ordered pair of nodes: a < b in the poset iff there is a
// nonzero positive-degree extension between the encoded modules.
OrderIsoReport order_isomorphism_check(Engine& e, const TiltingPoset& poset);

std::string to_string(const PosetNode& node);

} // namespace tiltlab

#endif
