#ifndef TILTLAB_FILTRATION_HPP
#define TILTLAB_FILTRATION_HPP

#include "tiltlab/engine.hpp"

#include <optional>

namespace tiltlab {

// Parity criteria for membership in F(Delta) / F(Nabla).
bool in_f_delta_parity(const OmegaDescriptor& d);
bool in_f_nabla_parity(const OmegaDescriptor& d);

// Independent homological test: M lies in F(Delta) iff Ext^1(M, Nabla(j))
// vanishes for every j; dually for F(Nabla).
bool in_f_delta_homological(Engine& e, const OmegaDescriptor& d);
bool in_f_nabla_homological(Engine& e, const OmegaDescriptor& d);

// Brute force: Ext^m(M, M) = 0 for 1 <= m <= 2n-2.
bool is_self_orthogonal(Engine& e, const OmegaDescriptor& d);

// Closed form: (1,1,k), or |i-j| = 1 with membership in F(Delta) or
// F(Nabla).
bool self_orthogonal_closed_form(const OmegaDescriptor& d);

// Trivial endomorphism ring and self-orthogonal.
bool is_exceptional(Engine& e, const OmegaDescriptor& d);

struct ExtWitness {
    int degree = 0;
    OmegaDescriptor against;
};

struct ModuleClassification {
    OmegaDescriptor descriptor;
    bool in_f_delta = false;
    bool in_f_nabla = false;
    bool self_orthogonal = false;
    bool exceptional = false;
    std::optional<ExtWitness> f_delta_witness;    // nonzero Ext^1 into a costandard
    std::optional<ExtWitness> f_nabla_witness;    // nonzero Ext^1 from a standard
    std::optional<int> self_extension_degree;     // least m with Ext^m(M,M) != 0
};

ModuleClassification classify_module(Engine& e, const OmegaDescriptor& d);

struct CrossExt {
    int degree;
    long long dim;
};

// A positive-degree extension from a non-characteristic self-orthogonal
// module in F(Nabla) to one in F(Delta). Throws std::invalid_argument when
// the preconditions fail and std::logic_error if no degree up to 2n-2
// works (which would indicate an engine bug).
CrossExt cross_pair_extension(Engine& e, const OmegaDescriptor& nabla_side, const OmegaDescriptor& delta_side);

} // namespace tiltlab

#endif
