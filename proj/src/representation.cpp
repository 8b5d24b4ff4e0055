#include "tiltlab/representation.hpp"

#include <numeric>
#include <stdexcept>

namespace tiltlab {

int Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

Representation zero_rep(int n) {
    return make_rep(n, std::vector<int>(size_t(n), 0));
}

Representation make_rep(int n, std::vector<int> dims) {
    if (n < 2 || (int)dims.size() != n) throw std::invalid_argument("make_rep: bad dims");
    Representation r;
    r.n = n;
    r.dims = std::move(dims);
    r.up.reserve(size_t(n - 1));
    r.down.reserve(size_t(n - 1));
    for (int x = 1; x <= n - 1; ++x) {
        r.up.emplace_back(r.dims[size_t(x)], r.dims[size_t(x - 1)]);
        r.down.emplace_back(r.dims[size_t(x - 1)], r.dims[size_t(x)]);
    }
    return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.n != b.n) throw std::invalid_argument("direct_sum: vertex count mismatch");
    std::vector<int> dims(size_t(a.n));
    for (int v = 1; v <= a.n; ++v) dims[size_t(v - 1)] = a.dim_at(v) + b.dim_at(v);
    Representation out = make_rep(a.n, dims);
    for (ArrowRef ar : all_arrows(a.n)) {
        const int s = Representation::arrow_source(ar), t = Representation::arrow_target(ar);
        Matrix& m = out.arrow(ar);
        const Matrix& ma = a.arrow(ar);
        const Matrix& mb = b.arrow(ar);
        for (int i = 0; i < ma.rows(); ++i)
            for (int j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
        for (int i = 0; i < mb.rows(); ++i)
            for (int j = 0; j < mb.cols(); ++j) m.at(a.dim_at(t) + i, a.dim_at(s) + j) = mb.at(i, j);
    }
    return out;
}

bool relations_vanish(const Representation& rep) {
    const int n = rep.n;
    for (int x = 1; x + 1 <= n - 1; ++x) {
        if (!(rep.up[size_t(x)] * rep.up[size_t(x - 1)]).is_zero()) return false;       // up(x+1)*up(x)
        if (!(rep.down[size_t(x - 1)] * rep.down[size_t(x)]).is_zero()) return false;   // down(x)*down(x+1)
    }
    for (int x = 1; x <= n - 1; ++x)
        if (!(rep.up[size_t(x - 1)] * rep.down[size_t(x - 1)]).is_zero()) return false; // up(x)*down(x)
    return true;
}

Representation dual_star(const Representation& rep) {
    Representation out = make_rep(rep.n, rep.dims);
    for (int x = 1; x <= rep.n - 1; ++x) {
        out.up[size_t(x - 1)] = rep.down[size_t(x - 1)].transposed();
        out.down[size_t(x - 1)] = rep.up[size_t(x - 1)].transposed();
    }
    return out;
}

bool RepHom::is_zero() const {
    for (const auto& m : mats)
        if (!m.is_zero()) return false;
    return true;
}

RepHom compose(const RepHom& g, const RepHom& f) {
    if (g.mats.size() != f.mats.size()) throw std::invalid_argument("compose: vertex count mismatch");
    RepHom out;
    out.mats.reserve(f.mats.size());
    for (size_t v = 0; v < f.mats.size(); ++v) out.mats.push_back(g.mats[v] * f.mats[v]);
    return out;
}

bool commutes_with_arrows(const Representation& m, const Representation& n, const RepHom& f) {
    for (ArrowRef ar : all_arrows(m.n)) {
        const int s = Representation::arrow_source(ar), t = Representation::arrow_target(ar);
        if (!(f.mats[size_t(t - 1)] * m.arrow(ar) - n.arrow(ar) * f.mats[size_t(s - 1)]).is_zero()) return false;
    }
    return true;
}

std::vector<ArrowRef> all_arrows(int n) {
    std::vector<ArrowRef> out;
    out.reserve(size_t(2 * (n - 1)));
    for (int x = 1; x <= n - 1; ++x) out.push_back({ArrowKind::up, x});
    for (int x = 1; x <= n - 1; ++x) out.push_back({ArrowKind::down, x});
    return out;
}

} // namespace tiltlab
