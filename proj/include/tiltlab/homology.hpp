#ifndef TILTLAB_HOMOLOGY_HPP
#define TILTLAB_HOMOLOGY_HPP

#include "tiltlab/strings.hpp"

#include <optional>
#include <vector>

namespace tiltlab {

// Basis of all module homomorphisms M -> N, found as the null space of the
// intertwiner system f_target * M_a = N_a * f_source over all arrows a.
struct HomSpace {
    Representation source, target;
    std::vector<RepHom> basis;

    int dim() const { return (int)basis.size(); }
};

HomSpace hom(const Algebra& a, const Representation& m, const Representation& n);
long long hom_dim(const Algebra& a, const Representation& m, const Representation& n);

Representation top(const Algebra& a, const Representation& m);
Representation radical(const Algebra& a, const Representation& m);

// Kernel of a homomorphism f: M -> N as a subrepresentation of M.
struct SubRep {
    Representation rep;
    RepHom inclusion;
};
SubRep kernel_of(const Algebra& a, const Representation& m, const RepHom& f);

// Cokernel of f: M -> N with its projection from N.
struct QuotRep {
    Representation rep;
    RepHom projection;
};
QuotRep cokernel_of(const Algebra& a, const Representation& n, const RepHom& f);

// A direct sum of projectives P(x) with per-summand bookkeeping: the basis
// index of each generator e_x inside the vertex-x block.
struct ProjSum {
    std::vector<int> verts;     // summand vertices, the multiset
    std::vector<int> gen_index; // generator position within its vertex block
    Representation rep;
};

ProjSum projective_sum(const Algebra& a, const std::vector<int>& verts);

struct Cover {
    ProjSum proj;
    RepHom surjection; // proj.rep ->> M
    Representation kernel;
    RepHom inclusion;  // kernel -> proj.rep
};

// Projective cover; throws std::invalid_argument on the zero module.
Cover projective_cover(const Algebra& a, const Representation& m);

struct Envelope {
    std::vector<int> verts; // injective summand vertices
    Representation inj;
    RepHom injection;       // M -> inj
    Representation cokernel;
    RepHom projection;      // inj ->> cokernel
};

// Injective envelope, computed as dual_star . projective_cover . dual_star.
Envelope injective_envelope(const Algebra& a, const Representation& m);

// Minimal projective resolution built by iterating projective covers.
// Terms are direct sums of P(x); differentials d[t]: term t -> term t-1.
struct ProjResolution {
    std::vector<ProjSum> terms;
    std::vector<RepHom> differentials; // differentials[t-1] is d_t, t >= 1
    bool terminated = false;           // kernel reached zero

    int length() const { return (int)terms.size() - 1; }
};

// Builds terms 0..max_deg or stops earlier at a zero kernel. Throws
// std::logic_error if the resolution passes the global-dimension bound
// 2n-2 without terminating.
ProjResolution min_resolution(const Algebra& a, const Representation& m, int max_deg);

// dim Ext^m(M, N) computed from a resolution of M covering degree m.
long long ext_from_resolution(const Algebra& a, const ProjResolution& res, const Representation& n, int m);

// Convenience: resolve and take cohomology. m = 0 gives dim Hom.
long long ext(const Algebra& a, const Representation& m, const Representation& n, int degree);

// Euler characteristic sum_m (-1)^m ext(M,N,m) from dimension vectors alone,
// via the inverse Cartan matrix.
Rational euler_form(const Algebra& a, const std::vector<int>& dims_m, const std::vector<int>& dims_n);

// End(M) is local: every endomorphism is a scalar plus a nilpotent. Checked
// via the trace form on End(M), whose radical in characteristic zero is the
// Jacobson radical.
bool has_local_endomorphism_ring(const Algebra& a, const Representation& m);

} // namespace tiltlab

#endif
