#ifndef TILTLAB_ORACLES_HPP
#define TILTLAB_ORACLES_HPP

#include "tiltlab/strings.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tiltlab {

// Parity-stepped index intervals. end_anchored(a,b) = {c : a <= c <= b,
// c = b mod 2}; start_anchored keeps the parity of a. Empty when bounds
// cross; always clipped to [1, n].
std::vector<int> end_anchored(int a, int b, int n);
std::vector<int> start_anchored(int a, int b, int n);

// dim Hom(P(x), M(i,k)) and dim Hom(Delta(x), M(i,k)), closed forms.
// Out-of-range x (x < 1 or x > n) contributes 0.
long long hom_dim_from_projective(int n, int x, int i, int k);
long long hom_dim_from_standard(int n, int x, int i, int k);

// dim Hom(M(i,k), M(j,l)) by the four-branch case analysis; requires the
// hypothesis i+2 <= k (throws std::invalid_argument otherwise).
long long hom_dim_between_node_modules(int i, int k, int j, int l);

// dim Ext^m(Delta(x), L(y)) for m >= 1: one when y > x and m = y-x, else 0.
long long ext_standard_to_simple(int x, int y, int m);

// The three displayed Ext-dimension formulas for M(i,k) -> M(j,l), fully
// expanded through the closed-form Hom oracles. Valid for every node pair.
long long ext1_formula(int n, int i, int k, int j, int l);
long long ext2_formula(int n, int i, int k, int j, int l);
long long ext_high_formula(int n, int i, int k, int j, int l, int m); // m >= 3

// Multiset of projective vertices in term m of the minimal resolution of
// L(i), by the four-case closed form.
std::vector<int> simple_resolution_term(int n, int i, int m);

// Kernel of the projective cover of omega(i,j,k), as a descriptor multiset
// (standard modules and simples only). Implements the 21-row table; the
// three rows with j = k carry a corrected interval bound (see tests).
std::map<OmegaDescriptor, int> cover_kernel_oracle(int n, const OmegaDescriptor& d);

// Projective cover vertices of omega(i,j,k): P_(i,k-1] + P_(j,k-2] for
// i < k, and P_(j,k] for i = k.
std::vector<int> cover_oracle(int n, const OmegaDescriptor& d);

} // namespace tiltlab

#endif
