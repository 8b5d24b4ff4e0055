#include "tiltlab/strings.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiltlab {

bool valid_descriptor(const OmegaDescriptor& d, int n) {
    return 1 <= d.i && 1 <= d.j && d.i <= d.k && d.j <= d.k && d.k <= n;
}

Walk walk_of_descriptor(const OmegaDescriptor& d) {
    const int i = d.i, j = d.j, k = d.k;
    Walk w;
    if (i < k) {
        // Ascend i..k, then descend k-1..j. Ascending step at x carries
        // up(x) when x and k have different parity, else down(x) pointing
        // back; descending step at x is the mirror image.
        for (int v = i; v <= k; ++v) w.vertices.push_back(v);
        for (int x = i; x <= k - 1; ++x) w.eps.push_back((x - k) % 2 != 0 ? 1 : -1);
        for (int x = k - 1; x >= j; --x) {
            w.vertices.push_back(x);
            w.eps.push_back((x - k) % 2 != 0 ? 1 : -1);
        }
    } else {
        // Descending-arm-only module, written ascending-start: j..k with
        // the mirrored direction pattern.
        for (int v = j; v <= k; ++v) w.vertices.push_back(v);
        for (int x = j; x <= k - 1; ++x) w.eps.push_back((x - k) % 2 == 0 ? 1 : -1);
    }
    return w;
}

OmegaDescriptor descriptor_of_walk(const Walk& w) {
    const int r = w.length();
    if (r == 0) return {w.vertices[0], w.vertices[0], w.vertices[0]};
    bool monotone = true;
    for (int p = 0; p < r; ++p)
        if (w.vertices[size_t(p + 1)] != w.vertices[size_t(p)] + 1) monotone = false;
    const int first = w.vertices.front(), last = w.vertices.back();
    if (monotone) {
        if (w.eps.back() == 1) return {first, last, last};
        return {last, first, last};
    }
    const int peak = *std::max_element(w.vertices.begin(), w.vertices.end());
    return {first, last, peak};
}

Representation rep_from_walk(const Algebra& a, const Walk& w) {
    std::vector<int> dims(size_t(a.n), 0);
    std::vector<int> pos_index(w.vertices.size());
    for (size_t p = 0; p < w.vertices.size(); ++p) pos_index[p] = dims[size_t(w.vertices[p] - 1)]++;

    Representation rep = make_rep(a.n, dims);
    for (int p = 0; p < w.length(); ++p) {
        const int u = w.vertices[size_t(p)], v = w.vertices[size_t(p + 1)];
        if (w.eps[size_t(p)] == 1) {
            // arrow u -> v, sends position p to position p+1
            ArrowRef ar = (v == u + 1) ? ArrowRef{ArrowKind::up, u} : ArrowRef{ArrowKind::down, v};
            rep.arrow(ar).at(pos_index[size_t(p + 1)], pos_index[size_t(p)]) = 1;
        } else {
            // arrow v -> u, sends position p+1 to position p
            ArrowRef ar = (u == v + 1) ? ArrowRef{ArrowKind::up, v} : ArrowRef{ArrowKind::down, u};
            rep.arrow(ar).at(pos_index[size_t(p)], pos_index[size_t(p + 1)]) = 1;
        }
    }
    return rep;
}

Representation omega(const Algebra& a, const OmegaDescriptor& d) {
    if (!valid_descriptor(d, a.n)) throw std::invalid_argument("omega: invalid descriptor " + to_string(d));
    return rep_from_walk(a, walk_of_descriptor(d));
}

std::vector<OmegaDescriptor> enumerate_indecomposables(int n) {
    if (n < 2) throw std::domain_error("enumerate_indecomposables: need n >= 2");
    std::vector<OmegaDescriptor> out;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) out.push_back({i, j, k});
    return out;
}

namespace {

ArrowRef step_arrow(int u, int v, int eps) {
    if (eps == 1) return (v == u + 1) ? ArrowRef{ArrowKind::up, u} : ArrowRef{ArrowKind::down, v};
    return (u == v + 1) ? ArrowRef{ArrowKind::up, v} : ArrowRef{ArrowKind::down, u};
}

void extend_walks(const Algebra& a, Walk& w, std::vector<Walk>& out) {
    out.push_back(w);
    const int u = w.vertices.back();
    const int r = w.length();
    for (int v : {u + 1, u - 1}) {
        if (v < 1 || v > a.n) continue;
        if (r == 0 && v != u + 1) continue; // descending starts are mirror images
        for (int eps : {1, -1}) {
            const ArrowRef ar = step_arrow(u, v, eps);
            if (r > 0) {
                const int prev_eps = w.eps.back();
                const ArrowRef prev = step_arrow(w.vertices[size_t(r - 1)], u, prev_eps);
                if (eps == prev_eps) {
                    if (eps == -1) continue; // repeated pair must be (+1,+1)
                    if (is_relation_pair(prev, ar)) continue; // (VS1)
                } else if (prev == ar) {
                    continue; // (VS2)
                }
            }
            w.vertices.push_back(v);
            w.eps.push_back(eps);
            extend_walks(a, w, out);
            w.vertices.pop_back();
            w.eps.pop_back();
        }
    }
}

} // namespace

std::vector<Walk> enumerate_v_sequences(const Algebra& a) {
    std::vector<Walk> out;
    for (int v = 1; v <= a.n; ++v) {
        Walk w;
        w.vertices.push_back(v);
        extend_walks(a, w, out);
    }
    return out;
}

OmegaDescriptor dual_star_desc(const OmegaDescriptor& d) { return {d.j, d.i, d.k}; }
OmegaDescriptor upper_arm(const OmegaDescriptor& d) { return {d.i, d.k, d.k}; }
OmegaDescriptor lower_arm(const OmegaDescriptor& d) { return {d.k, d.j, d.k}; }

std::vector<int> omega_dims(const OmegaDescriptor& d, int n) {
    std::vector<int> dims(size_t(n), 0);
    for (int v = d.i; v <= d.k; ++v) dims[size_t(v - 1)] += 1;
    for (int v = d.j; v <= d.k - 1; ++v) dims[size_t(v - 1)] += 1;
    return dims;
}

OmegaDescriptor desc_simple(int i) { return {i, i, i}; }

OmegaDescriptor desc_standard(int i) {
    return i == 1 ? OmegaDescriptor{1, 1, 1} : OmegaDescriptor{i, i - 1, i};
}

OmegaDescriptor desc_costandard(int i) {
    return i == 1 ? OmegaDescriptor{1, 1, 1} : OmegaDescriptor{i - 1, i, i};
}

OmegaDescriptor desc_projective(int n, int i) {
    if (i == n) return {n, n - 1, n};
    if (i == 1) return {1, 1, 2};
    return {i - 1, i, i + 1};
}

OmegaDescriptor desc_injective(int n, int i) { return dual_star_desc(desc_projective(n, i)); }

std::string to_string(const OmegaDescriptor& d) {
    return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + "," + std::to_string(d.k) + ")";
}

} // namespace tiltlab
