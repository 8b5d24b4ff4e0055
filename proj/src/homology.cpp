#include "tiltlab/homology.hpp"

#include <numeric>
#include <stdexcept>

namespace tiltlab {

namespace {

// Unknown layout for the intertwiner system: entries of f_v row-major,
// vertex blocks in order.
struct HomSystem {
    std::vector<int> offset; // per vertex
    int unknowns = 0;
    Matrix mat;
};

HomSystem hom_system(const Algebra& a, const Representation& m, const Representation& n) {
    if (m.n != n.n || m.n != a.n) throw std::invalid_argument("hom: algebras differ");
    HomSystem sys;
    sys.offset.resize(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) {
        sys.offset[size_t(v - 1)] = sys.unknowns;
        sys.unknowns += n.dim_at(v) * m.dim_at(v);
    }
    int rows = 0;
    for (ArrowRef ar : all_arrows(a.n))
        rows += n.dim_at(Representation::arrow_target(ar)) * m.dim_at(Representation::arrow_source(ar));
    sys.mat = Matrix(rows, sys.unknowns);

    int row = 0;
    for (ArrowRef ar : all_arrows(a.n)) {
        const int s = Representation::arrow_source(ar), t = Representation::arrow_target(ar);
        const Matrix& ma = m.arrow(ar);
        const Matrix& na = n.arrow(ar);
        // (f_t * M_a - N_a * f_s)[u][v] = 0
        for (int u = 0; u < n.dim_at(t); ++u)
            for (int v = 0; v < m.dim_at(s); ++v) {
                for (int c = 0; c < m.dim_at(t); ++c)
                    if (ma.at(c, v) != 0)
                        sys.mat.at(row, sys.offset[size_t(t - 1)] + u * m.dim_at(t) + c) += ma.at(c, v);
                for (int r = 0; r < n.dim_at(s); ++r)
                    if (na.at(u, r) != 0)
                        sys.mat.at(row, sys.offset[size_t(s - 1)] + r * m.dim_at(s) + v) -= na.at(u, r);
                ++row;
            }
    }
    return sys;
}

RepHom hom_from_vector(const Representation& m, const Representation& n, const HomSystem& sys,
                       const Matrix& vec, int col) {
    RepHom h;
    h.mats.reserve(size_t(m.n));
    for (int v = 1; v <= m.n; ++v) {
        Matrix f(n.dim_at(v), m.dim_at(v));
        for (int r = 0; r < n.dim_at(v); ++r)
            for (int c = 0; c < m.dim_at(v); ++c)
                f.at(r, c) = vec.at(sys.offset[size_t(v - 1)] + r * m.dim_at(v) + c, col);
        h.mats.push_back(std::move(f));
    }
    return h;
}

} // namespace

HomSpace hom(const Algebra& a, const Representation& m, const Representation& n) {
    HomSystem sys = hom_system(a, m, n);
    Matrix basis = nullspace(sys.mat);
    HomSpace out{m, n, {}};
    out.basis.reserve(size_t(basis.cols()));
    for (int c = 0; c < basis.cols(); ++c) out.basis.push_back(hom_from_vector(m, n, sys, basis, c));
    return out;
}

long long hom_dim(const Algebra& a, const Representation& m, const Representation& n) {
    HomSystem sys = hom_system(a, m, n);
    return sys.unknowns - rank(sys.mat);
}

Representation radical(const Algebra& a, const Representation& m) {
    // Per-vertex span of all incoming arrow images; returned as a
    // representation on chosen bases.
    std::vector<Matrix> span(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) span[size_t(v - 1)] = Matrix(m.dim_at(v), 0);
    for (ArrowRef ar : all_arrows(a.n)) {
        const int t = Representation::arrow_target(ar);
        span[size_t(t - 1)] = Matrix::hconcat(span[size_t(t - 1)], m.arrow(ar));
    }
    std::vector<Matrix> basis(size_t(a.n));
    std::vector<int> dims(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) {
        std::vector<int> pivots;
        Matrix r = rref(span[size_t(v - 1)].transposed(), &pivots);
        Matrix b(m.dim_at(v), (int)pivots.size());
        for (int i = 0; i < (int)pivots.size(); ++i)
            for (int c = 0; c < m.dim_at(v); ++c) b.at(c, i) = r.at(i, c);
        basis[size_t(v - 1)] = std::move(b);
        dims[size_t(v - 1)] = (int)pivots.size();
    }
    Representation rad = make_rep(a.n, dims);
    for (ArrowRef ar : all_arrows(a.n)) {
        const int s = Representation::arrow_source(ar), t = Representation::arrow_target(ar);
        if (rad.dim_at(s) == 0 || m.dim_at(t) == 0) continue;
        // Arrow images of radical vectors land in the radical.
        rad.arrow(ar) = rad.dim_at(t) == 0
                            ? Matrix(0, rad.dim_at(s))
                            : solve_unique(basis[size_t(t - 1)], m.arrow(ar) * basis[size_t(s - 1)]);
    }
    return rad;
}

Representation top(const Algebra& a, const Representation& m) {
    Representation rad = radical(a, m);
    std::vector<int> dims(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) dims[size_t(v - 1)] = m.dim_at(v) - rad.dim_at(v);
    return make_rep(a.n, dims); // semisimple: all arrows zero
}

SubRep kernel_of(const Algebra& a, const Representation& m, const RepHom& f) {
    std::vector<Matrix> basis(size_t(a.n));
    std::vector<int> dims(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) {
        basis[size_t(v - 1)] = nullspace(f.mats[size_t(v - 1)]);
        dims[size_t(v - 1)] = basis[size_t(v - 1)].cols();
    }
    SubRep out;
    out.rep = make_rep(a.n, dims);
    for (ArrowRef ar : all_arrows(a.n)) {
        const int s = Representation::arrow_source(ar), t = Representation::arrow_target(ar);
        if (dims[size_t(s - 1)] == 0) continue;
        out.rep.arrow(ar) = dims[size_t(t - 1)] == 0
                                ? Matrix(0, dims[size_t(s - 1)])
                                : solve_unique(basis[size_t(t - 1)], m.arrow(ar) * basis[size_t(s - 1)]);
    }
    out.inclusion.mats = std::move(basis);
    return out;
}

QuotRep cokernel_of(const Algebra& a, const Representation& n, const RepHom& f) {
    std::vector<Matrix> proj(size_t(a.n));
    std::vector<int> dims(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) {
        // Rows spanning the left annihilator of the image.
        Matrix left = nullspace(f.mats[size_t(v - 1)].transposed()).transposed();
        dims[size_t(v - 1)] = left.rows();
        proj[size_t(v - 1)] = std::move(left);
    }
    QuotRep out;
    out.rep = make_rep(a.n, dims);
    for (ArrowRef ar : all_arrows(a.n)) {
        const int s = Representation::arrow_source(ar), t = Representation::arrow_target(ar);
        if (dims[size_t(t - 1)] == 0 || dims[size_t(s - 1)] == 0) continue;
        // Q_a with Q_a * proj_s = proj_t * N_a; proj_s has full row rank.
        out.rep.arrow(ar) = solve_left(proj[size_t(s - 1)], proj[size_t(t - 1)] * n.arrow(ar));
    }
    out.projection.mats = std::move(proj);
    return out;
}

ProjSum projective_sum(const Algebra& a, const std::vector<int>& verts) {
    ProjSum out;
    out.verts = verts;
    out.rep = zero_rep(a.n);
    for (int x : verts) {
        // The generator e_x is the first basis vector of P(x) at vertex x.
        out.gen_index.push_back(out.rep.dim_at(x));
        out.rep = direct_sum(out.rep, projective_rep(a, x));
    }
    return out;
}

Cover projective_cover(const Algebra& a, const Representation& m) {
    if (m.is_zero()) throw std::invalid_argument("projective_cover: zero module");

    // Choose top representatives: unit vectors at non-pivot rows of the
    // radical span at each vertex.
    std::vector<Matrix> rad_span(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) rad_span[size_t(v - 1)] = Matrix(m.dim_at(v), 0);
    for (ArrowRef ar : all_arrows(a.n)) {
        const int t = Representation::arrow_target(ar);
        rad_span[size_t(t - 1)] = Matrix::hconcat(rad_span[size_t(t - 1)], m.arrow(ar));
    }

    std::vector<int> verts;
    std::vector<Matrix> gens; // chosen representative per summand
    for (int v = 1; v <= a.n; ++v) {
        std::vector<int> pivots;
        rref(rad_span[size_t(v - 1)].transposed(), &pivots);
        std::vector<bool> in_rad(size_t(m.dim_at(v)), false);
        for (int p : pivots) in_rad[size_t(p)] = true;
        for (int r = 0; r < m.dim_at(v); ++r) {
            if (in_rad[size_t(r)]) continue;
            verts.push_back(v);
            Matrix u(m.dim_at(v), 1);
            u.at(r, 0) = 1;
            gens.push_back(std::move(u));
        }
    }

    Cover cover;
    cover.proj = projective_sum(a, verts);

    RepHom f;
    f.mats.reserve(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) f.mats.emplace_back(m.dim_at(v), cover.proj.rep.dim_at(v));
    // Column of each basis path p of summand P(x): the action of p on the
    // chosen generator image.
    std::vector<int> filled(size_t(a.n), 0);
    for (size_t s = 0; s < verts.size(); ++s) {
        const int x = verts[s];
        for (const Path& p : a.basis.paths) {
            if (p.source != x) continue;
            Matrix img = path_action(m, p) * gens[s];
            const int col = filled[size_t(p.target - 1)]++;
            for (int r = 0; r < m.dim_at(p.target); ++r) f.mats[size_t(p.target - 1)].at(r, col) = img.at(r, 0);
        }
    }
    // Surjectivity of a cover.
    for (int v = 1; v <= a.n; ++v)
        if (rank(f.mats[size_t(v - 1)]) != m.dim_at(v))
            throw std::logic_error("projective_cover: lift is not surjective");

    SubRep ker = kernel_of(a, cover.proj.rep, f);
    cover.surjection = std::move(f);
    cover.kernel = std::move(ker.rep);
    cover.inclusion = std::move(ker.inclusion);
    return cover;
}

Envelope injective_envelope(const Algebra& a, const Representation& m) {
    Cover c = projective_cover(a, dual_star(m));
    Envelope e;
    e.verts = c.proj.verts;
    e.inj = dual_star(c.proj.rep);
    e.cokernel = dual_star(c.kernel);
    e.injection.mats.reserve(size_t(a.n));
    e.projection.mats.reserve(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) {
        e.injection.mats.push_back(c.surjection.mats[size_t(v - 1)].transposed());
        e.projection.mats.push_back(c.inclusion.mats[size_t(v - 1)].transposed());
    }
    return e;
}

ProjResolution min_resolution(const Algebra& a, const Representation& m, int max_deg) {
    if (max_deg < 0) throw std::invalid_argument("min_resolution: negative degree");
    const int bound = 2 * a.n - 2;
    ProjResolution res;
    if (m.is_zero()) {
        res.terminated = true;
        return res;
    }
    Cover c = projective_cover(a, m);
    res.terms.push_back(c.proj);
    Representation ker = c.kernel;
    RepHom incl = c.inclusion;
    int t = 0;
    while (!ker.is_zero()) {
        if (t >= max_deg) return res; // truncated; not yet terminated
        if (t >= bound)
            throw std::logic_error("min_resolution: exceeded global dimension bound 2n-2");
        Cover next = projective_cover(a, ker);
        res.differentials.push_back(compose(incl, next.surjection));
        res.terms.push_back(next.proj);
        ker = next.kernel;
        incl = next.inclusion;
        ++t;
    }
    res.terminated = true;
    return res;
}

namespace {

// Basis layout of Hom(P_t, N): per summand a of the term, one generator
// coordinate for every basis vector of N at the summand vertex.
int hom_complex_dim(const ProjSum& term, const Representation& n) {
    int d = 0;
    for (int x : term.verts) d += n.dim_at(x);
    return d;
}

// Matrix of precomposition Hom(P_t, N) -> Hom(P_{t+1}, N) with d_{t+1}.
Matrix induced_map(const Algebra& a, const ProjSum& from, const ProjSum& to, const RepHom& d,
                   const Representation& n) {
    // Path layout of `from`: per vertex, the (summand, path) pairs in
    // direct-sum order, mirroring projective_sum's construction.
    struct ColRef {
        int summand;
        const Path* path;
    };
    std::vector<std::vector<ColRef>> layout(size_t(a.n));
    for (size_t s = 0; s < from.verts.size(); ++s)
        for (const Path& p : a.basis.paths)
            if (p.source == from.verts[s]) layout[size_t(p.target - 1)].push_back({(int)s, &p});

    std::vector<int> from_offset(from.verts.size() + 1, 0);
    for (size_t s = 0; s < from.verts.size(); ++s)
        from_offset[s + 1] = from_offset[s] + n.dim_at(from.verts[s]);
    std::vector<int> to_offset(to.verts.size() + 1, 0);
    for (size_t s = 0; s < to.verts.size(); ++s) to_offset[s + 1] = to_offset[s] + n.dim_at(to.verts[s]);

    Matrix out(to_offset.back(), from_offset.back());
    for (size_t b = 0; b < to.verts.size(); ++b) {
        const int y = to.verts[b];
        if (n.dim_at(y) == 0) continue;
        const Matrix& dy = d.mats[size_t(y - 1)];
        const int gen_col = to.gen_index[b];
        for (size_t row_idx = 0; row_idx < layout[size_t(y - 1)].size(); ++row_idx) {
            const Rational c = dy.at((int)row_idx, gen_col);
            if (c == 0) continue;
            const ColRef ref = layout[size_t(y - 1)][row_idx];
            const int x = from.verts[size_t(ref.summand)];
            // Image of the basis hom (summand, u): composes through the path.
            Matrix act(0, 0);
            {
                Matrix path_mat = Matrix::identity(n.dim_at(x));
                for (ArrowRef ar : ref.path->arrows) path_mat = n.arrow(ar) * path_mat;
                act = std::move(path_mat); // n.dim_at(y) x n.dim_at(x)
            }
            for (int u = 0; u < n.dim_at(x); ++u)
                for (int r = 0; r < n.dim_at(y); ++r)
                    out.at(to_offset[b] + r, from_offset[size_t(ref.summand)] + u) += c * act.at(r, u);
        }
    }
    return out;
}

} // namespace

long long ext_from_resolution(const Algebra& a, const ProjResolution& res, const Representation& n, int m) {
    if (m < 0) throw std::invalid_argument("ext: negative degree");
    if (res.terminated && m > res.length()) return 0;
    if (!res.terminated && m + 1 > res.length()) throw std::invalid_argument("ext: resolution too short");
    const long long dim_m = hom_complex_dim(res.terms[size_t(m)], n);
    long long rank_out = 0, rank_in = 0;
    if (m + 1 <= res.length())
        rank_out = rank(induced_map(a, res.terms[size_t(m)], res.terms[size_t(m + 1)],
                                    res.differentials[size_t(m)], n));
    if (m >= 1)
        rank_in = rank(induced_map(a, res.terms[size_t(m - 1)], res.terms[size_t(m)],
                                   res.differentials[size_t(m - 1)], n));
    return dim_m - rank_out - rank_in;
}

long long ext(const Algebra& a, const Representation& m, const Representation& n, int degree) {
    if (degree == 0) return hom_dim(a, m, n);
    if (m.is_zero() || n.is_zero()) return 0;
    ProjResolution res = min_resolution(a, m, degree + 1);
    return ext_from_resolution(a, res, n, degree);
}

Rational euler_form(const Algebra& a, const std::vector<int>& dims_m, const std::vector<int>& dims_n) {
    Matrix cartan(a.n, a.n);
    for (int y = 1; y <= a.n; ++y) {
        Representation p = projective_rep(a, y);
        for (int x = 1; x <= a.n; ++x) cartan.at(x - 1, y - 1) = p.dim_at(x);
    }
    Matrix dm(a.n, 1), dn(a.n, 1);
    for (int v = 0; v < a.n; ++v) {
        dm.at(v, 0) = dims_m[size_t(v)];
        dn.at(v, 0) = dims_n[size_t(v)];
    }
    Matrix alpha = solve_unique(cartan, dm);
    Rational chi = 0;
    for (int v = 0; v < a.n; ++v) chi += alpha.at(v, 0) * dn.at(v, 0);
    return chi;
}

bool has_local_endomorphism_ring(const Algebra& a, const Representation& m) {
    HomSpace end = hom(a, m, m);
    const int e = end.dim();
    if (e == 0) return false;
    Matrix gram(e, e);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) {
            Rational tr = 0;
            for (int v = 1; v <= a.n; ++v)
                tr += (end.basis[size_t(i)].mats[size_t(v - 1)] * end.basis[size_t(j)].mats[size_t(v - 1)]).trace();
            gram.at(i, j) = tr;
        }
    return rank(gram) == 1;
}

} // namespace tiltlab
