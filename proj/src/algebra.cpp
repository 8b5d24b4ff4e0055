#include "tiltlab/algebra.hpp"

#include <stdexcept>

namespace tiltlab {

namespace {

void check_vertex(const Algebra& a, int i) {
    if (i < 1 || i > a.n) throw std::out_of_range("vertex index out of range");
}

} // namespace

bool is_relation_pair(ArrowRef prev, ArrowRef next) {
    // next is applied after prev; the composite path is next*prev.
    if (prev.kind == ArrowKind::up && next.kind == ArrowKind::up) return next.x == prev.x + 1;
    if (prev.kind == ArrowKind::down && next.kind == ArrowKind::down) return next.x == prev.x - 1;
    if (prev.kind == ArrowKind::down && next.kind == ArrowKind::up) return next.x == prev.x;
    return false; // down(x) after up(x) survives
}

Algebra make_algebra(int n) {
    if (n < 2) throw std::domain_error("make_algebra: need n >= 2");
    Algebra a;
    a.n = n;
    a.quiver.n = n;
    for (int x = 1; x <= n - 1; ++x)
        a.quiver.arrows.push_back({"alpha_" + std::to_string(x), x, x + 1});
    for (int x = 1; x <= n - 1; ++x)
        a.quiver.arrows.push_back({"alpha'_" + std::to_string(x), x + 1, x});

    // Idempotents first, then arrows, then the surviving length-2 paths.
    for (int v = 1; v <= n; ++v) a.basis.paths.push_back({v, v, {}});
    for (int x = 1; x <= n - 1; ++x) a.basis.paths.push_back({x, x + 1, {{ArrowKind::up, x}}});
    for (int x = 1; x <= n - 1; ++x) a.basis.paths.push_back({x + 1, x, {{ArrowKind::down, x}}});
    for (int x = 1; x <= n - 1; ++x)
        a.basis.paths.push_back({x, x, {{ArrowKind::up, x}, {ArrowKind::down, x}}});
    return a;
}

Matrix path_action(const Representation& rep, const Path& p) {
    Matrix m = Matrix::identity(rep.dim_at(p.source));
    for (ArrowRef ar : p.arrows) m = rep.arrow(ar) * m;
    return m;
}

Representation projective_rep(const Algebra& a, int i) {
    check_vertex(a, i);
    // Spanned by the basis paths starting at i, acting by left composition.
    std::vector<const Path*> cols;
    for (const Path& p : a.basis.paths)
        if (p.source == i) cols.push_back(&p);

    std::vector<int> dims(size_t(a.n), 0);
    std::vector<int> col_index(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) col_index[c] = dims[size_t(cols[c]->target - 1)]++;

    Representation rep = make_rep(a.n, dims);
    for (size_t c = 0; c < cols.size(); ++c) {
        const Path& p = *cols[c];
        for (ArrowRef ar : all_arrows(a.n)) {
            if (Representation::arrow_source(ar) != p.target) continue;
            Path composed = p;
            if (!composed.arrows.empty() && is_relation_pair(composed.arrows.back(), ar)) continue;
            if (composed.length() >= 2) continue; // rad^3 = 0
            composed.arrows.push_back(ar);
            composed.target = Representation::arrow_target(ar);
            int row = -1;
            for (size_t d = 0; d < cols.size(); ++d)
                if (cols[d]->arrows == composed.arrows) {
                    row = col_index[d];
                    break;
                }
            if (row < 0) continue; // composite vanished
            rep.arrow(ar).at(row, col_index[c]) = 1;
        }
    }
    return rep;
}

Representation injective_rep(const Algebra& a, int i) {
    return dual_star(projective_rep(a, i));
}

Representation standard_rep(const Algebra& a, int i) {
    check_vertex(a, i);
    if (i == 1) return simple_rep(a, 1);
    std::vector<int> dims(size_t(a.n), 0);
    dims[size_t(i - 2)] = 1;
    dims[size_t(i - 1)] = 1;
    Representation rep = make_rep(a.n, dims);
    rep.down[size_t(i - 2)].at(0, 0) = 1; // down(i-1) acts by identity
    return rep;
}

Representation costandard_rep(const Algebra& a, int i) {
    return dual_star(standard_rep(a, i));
}

Representation simple_rep(const Algebra& a, int i) {
    check_vertex(a, i);
    std::vector<int> dims(size_t(a.n), 0);
    dims[size_t(i - 1)] = 1;
    return make_rep(a.n, dims);
}

} // namespace tiltlab
