#ifndef TILTLAB_ALGEBRA_HPP
#define TILTLAB_ALGEBRA_HPP

#include "tiltlab/representation.hpp"

#include <string>
#include <vector>

namespace tiltlab {

// Vertices are 1..n throughout. Arrow x -> x+1 is up(x) ("alpha_x"),
// arrow x+1 -> x is down(x) ("alpha'_x"), both for 1 <= x <= n-1.
struct Arrow {
    std::string label;
    int source = 0;
    int target = 0;
};

struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows; // up(1)..up(n-1), then down(1)..down(n-1)
};

// A basis path, stored as the arrows in application order (first-applied
// first). Composition is right-to-left project-wide: in the product pq the
// path q acts first.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<ArrowRef> arrows; // empty for the idempotent e_source
    int length() const { return (int)arrows.size(); }
};

// All paths not containing a zero relation as a consecutive subword. The
// relations force length <= 2; the only surviving length-2 paths are
// down(x) after up(x).
struct PathBasis {
    std::vector<Path> paths;
};

struct Algebra {
    int n = 0;
    Quiver quiver;
    PathBasis basis;

    int dim() const { return (int)basis.paths.size(); }
};

// The bound-quiver algebra on the doubled linear quiver with the zero
// relations up(x+1)*up(x), down(x)*down(x+1) and up(x)*down(x).
// Throws std::domain_error for n < 2.
Algebra make_algebra(int n);

// True if applying `next` after `prev` yields a path in the relation ideal.
bool is_relation_pair(ArrowRef prev, ArrowRef next);

// Structural representations; all throw std::out_of_range for bad vertices.
Representation projective_rep(const Algebra& a, int i);
Representation injective_rep(const Algebra& a, int i);
Representation standard_rep(const Algebra& a, int i);
Representation costandard_rep(const Algebra& a, int i);
Representation simple_rep(const Algebra& a, int i);

// Action of a basis path on a representation.
Matrix path_action(const Representation& rep, const Path& p);

} // namespace tiltlab

#endif
