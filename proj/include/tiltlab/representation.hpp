#ifndef TILTLAB_REPRESENTATION_HPP
#define TILTLAB_REPRESENTATION_HPP

#include "tiltlab/linalg.hpp"

#include <vector>

namespace tiltlab {

enum class ArrowKind { up, down };

struct ArrowRef {
    ArrowKind kind = ArrowKind::up;
    int x = 0; // up(x): x -> x+1, down(x): x+1 -> x, 1 <= x <= n-1
    bool operator==(const ArrowRef&) const = default;
};

// A module as a representation of the bound quiver: one exact matrix per
// arrow, shaped dims[target] x dims[source]. Immutable by convention after
// construction.
struct Representation {
    int n = 0;
    std::vector<int> dims;    // dims[v-1] for vertex v
    std::vector<Matrix> up;   // up[x-1]: dims[x+1] x dims[x]
    std::vector<Matrix> down; // down[x-1]: dims[x] x dims[x+1]

    int dim_at(int v) const { return dims[size_t(v - 1)]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const Matrix& arrow(ArrowRef a) const {
        return a.kind == ArrowKind::up ? up[size_t(a.x - 1)] : down[size_t(a.x - 1)];
    }
    Matrix& arrow(ArrowRef a) { return a.kind == ArrowKind::up ? up[size_t(a.x - 1)] : down[size_t(a.x - 1)]; }

    static int arrow_source(ArrowRef a) { return a.kind == ArrowKind::up ? a.x : a.x + 1; }
    static int arrow_target(ArrowRef a) { return a.kind == ArrowKind::up ? a.x + 1 : a.x; }
};

Representation zero_rep(int n);
Representation make_rep(int n, std::vector<int> dims);

// Block-diagonal sum; the summand's basis occupies a contiguous block after
// the existing ones at every vertex.
Representation direct_sum(const Representation& a, const Representation& b);

// Every zero relation acts as the zero matrix.
bool relations_vanish(const Representation& rep);

// The simple-preserving duality: transpose every arrow matrix and swap the
// roles of up(x) and down(x).
Representation dual_star(const Representation& rep);

// A homomorphism of representations: one matrix per vertex, commuting with
// all arrow actions.
struct RepHom {
    std::vector<Matrix> mats; // mats[v-1]: dim N_v x dim M_v

    bool is_zero() const;
};

RepHom compose(const RepHom& g, const RepHom& f);
bool commutes_with_arrows(const Representation& m, const Representation& n, const RepHom& f);

std::vector<ArrowRef> all_arrows(int n);

} // namespace tiltlab

#endif
