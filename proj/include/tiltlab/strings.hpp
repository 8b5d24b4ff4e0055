#ifndef TILTLAB_STRINGS_HPP
#define TILTLAB_STRINGS_HPP

#include "tiltlab/algebra.hpp"

#include <compare>
#include <vector>

namespace tiltlab {

// The combinatorial name of an indecomposable: the walk rises from i to the
// peak k and falls to j. Requires 1 <= i,j <= k <= n.
struct OmegaDescriptor {
    int i = 0, j = 0, k = 0;
    auto operator<=>(const OmegaDescriptor&) const = default;
};

// A walk: vertices v_1..v_{r+1} with consecutive vertices differing by one,
// and a direction eps in {+1,-1} per step. eps = +1 means the underlying
// quiver arrow points from v_p to v_{p+1}. The arrow itself is determined by
// the vertex pair and the direction.
struct Walk {
    std::vector<int> vertices;
    std::vector<int> eps;

    int length() const { return (int)eps.size(); }
    bool operator==(const Walk&) const = default;
};

bool valid_descriptor(const OmegaDescriptor& d, int n);

// Canonical walk of a descriptor: ascending start, and the one repeated
// direction pair (at the peak) is (+1,+1).
Walk walk_of_descriptor(const OmegaDescriptor& d);
OmegaDescriptor descriptor_of_walk(const Walk& w);

// The string module of a walk: vector space per walk position, identity
// maps along the walk arrows.
Representation rep_from_walk(const Algebra& a, const Walk& w);

// The indecomposable named by d; throws std::invalid_argument on a bad
// descriptor.
Representation omega(const Algebra& a, const OmegaDescriptor& d);

// All descriptors with 1 <= i,j <= k <= n, lexicographic by (k,i,j).
// Throws std::domain_error for n < 2.
std::vector<OmegaDescriptor> enumerate_indecomposables(int n);

// All canonical walks satisfying (VS1)-(VS2), one per isomorphism class.
std::vector<Walk> enumerate_v_sequences(const Algebra& a);

OmegaDescriptor dual_star_desc(const OmegaDescriptor& d); // (i,j,k) -> (j,i,k)
OmegaDescriptor upper_arm(const OmegaDescriptor& d);      // quotient (i,k,k)
OmegaDescriptor lower_arm(const OmegaDescriptor& d);      // submodule (k,j,k)

// Expected dimension vector of omega(d): the two arms share the peak vector.
std::vector<int> omega_dims(const OmegaDescriptor& d, int n);

// Named descriptors.
OmegaDescriptor desc_simple(int i);
OmegaDescriptor desc_standard(int i);
OmegaDescriptor desc_costandard(int i);
OmegaDescriptor desc_projective(int n, int i);
OmegaDescriptor desc_injective(int n, int i);

std::string to_string(const OmegaDescriptor& d);

} // namespace tiltlab

#endif
