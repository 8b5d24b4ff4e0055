#include "tiltlab/engine.hpp"

#include <stdexcept>

namespace tiltlab {

Engine::Engine(int n) : algebra_(make_algebra(n)), catalogue_(enumerate_indecomposables(n)) {
    modules_.resize(catalogue_.size());
    resolutions_.resize(catalogue_.size());
    ext_tables_.resize(catalogue_.size() * catalogue_.size());
    hom_dims_.assign(catalogue_.size() * catalogue_.size(), -1);
}

int Engine::index_of(const OmegaDescriptor& d) const {
    if (!valid_descriptor(d, algebra_.n)) throw std::invalid_argument("bad descriptor " + to_string(d));
    int idx = 0;
    for (int k = 1; k < d.k; ++k) idx += k * k;
    return idx + (d.i - 1) * d.k + (d.j - 1);
}

const Representation& Engine::module_of(const OmegaDescriptor& d) {
    auto& slot = modules_[size_t(index_of(d))];
    if (!slot) slot = omega(algebra_, d);
    return *slot;
}

const ProjResolution& Engine::resolution(const OmegaDescriptor& d) {
    auto& slot = resolutions_[size_t(index_of(d))];
    if (!slot)
        slot = std::make_unique<ProjResolution>(min_resolution(algebra_, module_of(d), degree_cap()));
    if (!slot->terminated) throw std::logic_error("resolution did not terminate within 2n-2");
    return *slot;
}

long long Engine::hom_dim(const OmegaDescriptor& m, const OmegaDescriptor& n) {
    const size_t key = pair_key(index_of(m), index_of(n));
    if (hom_dims_[key] < 0) hom_dims_[key] = tiltlab::hom_dim(algebra_, module_of(m), module_of(n));
    return hom_dims_[key];
}

long long Engine::ext(const OmegaDescriptor& m, const OmegaDescriptor& n, int degree) {
    if (degree < 0) throw std::invalid_argument("ext: negative degree");
    if (degree == 0) return hom_dim(m, n);
    if (degree > degree_cap()) return 0;
    const size_t key = pair_key(index_of(m), index_of(n));
    auto& table = ext_tables_[key];
    if (table.empty()) {
        table.assign(size_t(degree_cap()) + 1, 0);
        const ProjResolution& res = resolution(m);
        const Representation& target = module_of(n);
        table[0] = hom_dim(m, n);
        for (int deg = 1; deg <= degree_cap(); ++deg)
            table[size_t(deg)] = ext_from_resolution(algebra_, res, target, deg);
    }
    return table[size_t(degree)];
}

bool Engine::ext_nonzero_any_degree(const OmegaDescriptor& m, const OmegaDescriptor& n) {
    for (int deg = 1; deg <= degree_cap(); ++deg)
        if (ext(m, n, deg) > 0) return true;
    return false;
}

long long Engine::end_dim(const OmegaDescriptor& d) { return hom_dim(d, d); }

int Engine::proj_dim(const OmegaDescriptor& d) { return resolution(d).length(); }

const Matrix& Engine::hom_matrix_inverse() {
    if (!hom_matrix_inverse_) {
        const int c = (int)catalogue_.size();
        Matrix h(c, c);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) h.at(i, j) = hom_dim(catalogue_[size_t(i)], catalogue_[size_t(j)]);
        hom_matrix_inverse_ = inverse(h);
    }
    return *hom_matrix_inverse_;
}

std::map<OmegaDescriptor, int> Engine::decompose(const Representation& rep) {
    const int c = (int)catalogue_.size();
    Matrix v(c, 1);
    for (int i = 0; i < c; ++i)
        v.at(i, 0) = tiltlab::hom_dim(algebra_, module_of(catalogue_[size_t(i)]), rep);
    Matrix mult = hom_matrix_inverse() * v;

    std::map<OmegaDescriptor, int> out;
    std::vector<long long> dims(size_t(algebra_.n), 0);
    for (int i = 0; i < c; ++i) {
        const Rational& q = mult.at(i, 0);
        if (denominator(q) != 1 || q < 0) throw std::logic_error("decompose: non-integral multiplicity");
        if (q == 0) continue;
        const int count = (int)numerator(q).convert_to<long long>();
        out[catalogue_[size_t(i)]] = count;
        std::vector<int> d = omega_dims(catalogue_[size_t(i)], algebra_.n);
        for (int vtx = 0; vtx < algebra_.n; ++vtx) dims[size_t(vtx)] += (long long)count * d[size_t(vtx)];
    }
    for (int vtx = 1; vtx <= algebra_.n; ++vtx)
        if (dims[size_t(vtx - 1)] != rep.dim_at(vtx))
            throw std::logic_error("decompose: dimension vector mismatch");
    return out;
}

bool Engine::is_isomorphic(const Representation& m, const Representation& n) {
    if (m.dims != n.dims) return false;
    const long long mm = tiltlab::hom_dim(algebra_, m, m);
    const long long nn = tiltlab::hom_dim(algebra_, n, n);
    const long long mn = tiltlab::hom_dim(algebra_, m, n);
    const long long nm = tiltlab::hom_dim(algebra_, n, m);
    return mm == nn && mm == mn && mm == nm;
}

Cover Engine::cover_with_decomposition(const OmegaDescriptor& d, std::map<OmegaDescriptor, int>* summands) {
    Cover c = projective_cover(algebra_, module_of(d));
    if (summands) *summands = decompose(c.kernel);
    return c;
}

} // namespace tiltlab
