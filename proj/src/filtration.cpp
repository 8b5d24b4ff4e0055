#include "tiltlab/filtration.hpp"

#include <stdexcept>

namespace tiltlab {

namespace {

bool same_parity(int a, int b) { return (a - b) % 2 == 0; }

} // namespace

bool in_f_delta_parity(const OmegaDescriptor& d) {
    if (d.i == 1 && d.j == 1) return true;
    if (d.i == 1) return !same_parity(d.j, d.k);
    if (d.j == 1) return same_parity(d.i, d.k);
    return same_parity(d.i, d.k) && !same_parity(d.j, d.k);
}

bool in_f_nabla_parity(const OmegaDescriptor& d) { return in_f_delta_parity(dual_star_desc(d)); }

bool in_f_delta_homological(Engine& e, const OmegaDescriptor& d) {
    for (int j = 1; j <= e.n(); ++j)
        if (e.ext(d, desc_costandard(j), 1) != 0) return false;
    return true;
}

bool in_f_nabla_homological(Engine& e, const OmegaDescriptor& d) {
    for (int j = 1; j <= e.n(); ++j)
        if (e.ext(desc_standard(j), d, 1) != 0) return false;
    return true;
}

bool is_self_orthogonal(Engine& e, const OmegaDescriptor& d) {
    for (int m = 1; m <= e.degree_cap(); ++m)
        if (e.ext(d, d, m) != 0) return false;
    return true;
}

bool self_orthogonal_closed_form(const OmegaDescriptor& d) {
    if (d.i == 1 && d.j == 1) return true;
    if (d.i - d.j != 1 && d.j - d.i != 1) return false;
    return in_f_delta_parity(d) || in_f_nabla_parity(d);
}

bool is_exceptional(Engine& e, const OmegaDescriptor& d) {
    return e.end_dim(d) == 1 && is_self_orthogonal(e, d);
}

ModuleClassification classify_module(Engine& e, const OmegaDescriptor& d) {
    ModuleClassification c;
    c.descriptor = d;
    c.in_f_delta = in_f_delta_parity(d);
    c.in_f_nabla = in_f_nabla_parity(d);
    if (!c.in_f_delta)
        for (int j = 1; j <= e.n(); ++j)
            if (e.ext(d, desc_costandard(j), 1) != 0) {
                c.f_delta_witness = ExtWitness{1, desc_costandard(j)};
                break;
            }
    if (!c.in_f_nabla)
        for (int j = 1; j <= e.n(); ++j)
            if (e.ext(desc_standard(j), d, 1) != 0) {
                c.f_nabla_witness = ExtWitness{1, desc_standard(j)};
                break;
            }
    c.self_orthogonal = true;
    for (int m = 1; m <= e.degree_cap(); ++m)
        if (e.ext(d, d, m) != 0) {
            c.self_orthogonal = false;
            c.self_extension_degree = m;
            break;
        }
    c.exceptional = c.self_orthogonal && e.end_dim(d) == 1;
    return c;
}

CrossExt cross_pair_extension(Engine& e, const OmegaDescriptor& nabla_side, const OmegaDescriptor& delta_side) {
    const bool m_ok = self_orthogonal_closed_form(nabla_side) && in_f_nabla_parity(nabla_side) &&
                      !in_f_delta_parity(nabla_side);
    const bool n_ok = self_orthogonal_closed_form(delta_side) && in_f_delta_parity(delta_side) &&
                      !in_f_nabla_parity(delta_side);
    if (!m_ok || !n_ok)
        throw std::invalid_argument("cross_pair_extension: preconditions fail for " +
                                    to_string(nabla_side) + ", " + to_string(delta_side));
    for (int m = 1; m <= e.degree_cap(); ++m) {
        const long long d = e.ext(nabla_side, delta_side, m);
        if (d > 0) return {m, d};
    }
    throw std::logic_error("cross_pair_extension: no extension found up to 2n-2");
}

} // namespace tiltlab
