#include "tiltlab/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiltlab {

std::vector<int> end_anchored(int a, int b, int n) {
    std::vector<int> out;
    int c = b;
    while (c > n) c -= 2; // clip preserving the anchor parity
    while (c >= a && c >= 1) {
        out.push_back(c);
        c -= 2;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> start_anchored(int a, int b, int n) {
    std::vector<int> out;
    b = std::min(b, n);
    for (int c = std::max(a, 1); c <= b; c += 2) out.push_back(c);
    return out;
}

long long hom_dim_from_projective(int n, int x, int i, int k) {
    if (x < 1 || x > n) return 0;
    if (x == i - 1 || x == k) return 1;
    if (i <= x && x <= k - 1) return 2;
    return 0;
}

long long hom_dim_from_standard(int n, int x, int i, int k) {
    if (x < 1 || x > n) return 0;
    return (i - 1 <= x && x <= k) ? 1 : 0;
}

long long hom_dim_between_node_modules(int i, int k, int j, int l) {
    if (i + 2 > k) throw std::invalid_argument("hom_dim_between_node_modules: requires i+2 <= k");
    if (i > l || j > k) return 0;
    if (j == k) return 1;
    const long long base = std::min(k, l) - std::max(i, j - 1);
    if (j >= i + 2) return base;
    if (j == i + 1) {
        if (l == k) return base;
        if (l < k) return (i - l) % 2 == 0 ? base : base + 1;
        return (i - l) % 2 == 0 ? base + 1 : base;
    }
    return base + 1; // j <= i
}

long long ext_standard_to_simple(int x, int y, int m) {
    if (m <= 0) throw std::invalid_argument("ext_standard_to_simple: m >= 1");
    return (y > x && m == y - x) ? 1 : 0;
}

namespace {

// dim Hom(M(i,k), M(j,l)) for any node (i,k): Delta(i) when k = i, P(i)
// when k = i+1, the four-branch formula otherwise.
long long hom_dim_node_to_node(int n, int i, int k, int j, int l) {
    if (k == i) return hom_dim_from_standard(n, i, j, l);
    if (k == i + 1) return hom_dim_from_projective(n, i, j, l);
    return hom_dim_between_node_modules(i, k, j, l);
}

} // namespace

long long ext1_formula(int n, int i, int k, int j, int l) {
    long long value = hom_dim_node_to_node(n, i, k, j, l);
    const int x_hi = (k > i) ? k - 1 : i;
    for (int x = i; x <= x_hi; ++x) value -= hom_dim_from_projective(n, x, j, l);
    const int y_lo = i + 1, y_hi = (k > i) ? k - 1 : i + 1;
    for (int y = y_lo; y <= y_hi; ++y) value += hom_dim_from_standard(n, y, j, l);
    return value;
}

long long ext2_formula(int n, int i, int k, int j, int l) {
    long long value = 0;
    const int x_lo = i + 1, x_hi = (k > i) ? k - 1 : i + 1;
    for (int x = x_lo; x <= x_hi; ++x) {
        value += hom_dim_from_standard(n, x, j, l);
        value -= hom_dim_from_projective(n, x, j, l);
    }
    const int y_lo = i + 2, y_hi = (k > i) ? k : i + 2;
    for (int y = y_lo; y <= y_hi; ++y) value += hom_dim_from_standard(n, y, j, l);
    return value;
}

long long ext_high_formula(int n, int i, int k, int j, int l, int m) {
    (void)l;
    if (m < 3) throw std::invalid_argument("ext_high_formula: m >= 3");
    // Dimension shift twice: through the cover kernel Delta_{i+1..k-1} of
    // M(i,k) (Delta(i+1) when k = i), then through the envelope cokernel of
    // M(j,l), whose non-costandard part is L(j-2) + L(j-1).
    long long value = 0;
    const int x_lo = i + 1, x_hi = (k > i) ? k - 1 : i + 1;
    for (int x = x_lo; x <= x_hi; ++x) {
        if (x > n) continue;
        if (j - 2 >= 1) value += ext_standard_to_simple(x, j - 2, m - 2);
        if (j - 1 >= 1) value += ext_standard_to_simple(x, j - 1, m - 2);
    }
    return value;
}

std::vector<int> simple_resolution_term(int n, int i, int m) {
    if (m < i && m <= n - i) return start_anchored(i - m, i + m, n);
    if (m < i) return start_anchored(i - m, n, n);
    if (m <= n - i) return start_anchored(m - i + 2, i + m, n);
    return start_anchored(m - i + 2, n, n);
}

namespace {

void add_standards(std::map<OmegaDescriptor, int>& out, const std::vector<int>& xs) {
    for (int x : xs) out[desc_standard(x)] += 1;
}

void add_simple(std::map<OmegaDescriptor, int>& out, int x) {
    if (x >= 1) out[desc_simple(x)] += 1; // L(x) is zero when x < 1
}

} // namespace

std::map<OmegaDescriptor, int> cover_kernel_oracle(int n, const OmegaDescriptor& d) {
    if (!valid_descriptor(d, n)) throw std::invalid_argument("cover_kernel_oracle: bad descriptor");
    const int i = d.i, j = d.j, k = d.k;
    std::map<OmegaDescriptor, int> out;
    const bool ik_even = (i - k) % 2 == 0, jk_even = (j - k) % 2 == 0;

    if (i == 1) {
        if (j == 1 && k == 1) {
            add_standards(out, {std::vector<int>{2}});
        } else if (j == 1) {
            add_standards(out, end_anchored(2, k - 2, n));
            add_standards(out, end_anchored(2, k - 1, n));
        } else if (j == k) {
            add_standards(out, end_anchored(2, k - 2, n));
            add_simple(out, k - 1);
        } else if (!jk_even) {
            add_standards(out, end_anchored(2, k - 2, n));
            add_standards(out, end_anchored(j + 2, k - 1, n));
        } else {
            add_standards(out, end_anchored(2, k - 2, n));
            add_standards(out, end_anchored(j + 1, k - 1, n));
            add_simple(out, j - 1);
        }
        return out;
    }

    if (i == k) {
        // The bound k+1 clips to n-1 when k = n, covering both table halves.
        if (j == 1) {
            add_standards(out, end_anchored(2, k + 1, n));
        } else if (j == k) {
            if (k < n) add_standards(out, {std::vector<int>{k + 1}});
            add_simple(out, k - 1);
        } else if (!jk_even) {
            add_standards(out, end_anchored(j + 2, k + 1, n));
        } else {
            add_standards(out, end_anchored(j + 1, k + 1, n));
            add_simple(out, j - 1);
        }
        return out;
    }

    // 1 < i < k
    const std::vector<int> upper =
        ik_even ? end_anchored(i + 2, k - 2, n) : end_anchored(i + 1, k - 2, n);
    if (j == 1) {
        add_standards(out, upper);
        add_standards(out, end_anchored(2, k - 1, n));
        if (!ik_even) add_simple(out, i - 1);
    } else if (j == k) {
        add_standards(out, upper);
        if (!ik_even) add_simple(out, i - 1);
        add_simple(out, k - 1);
    } else if (!jk_even) {
        add_standards(out, upper);
        add_standards(out, end_anchored(j + 2, k - 1, n));
        if (!ik_even) add_simple(out, i - 1);
    } else {
        add_standards(out, upper);
        add_standards(out, end_anchored(j + 1, k - 1, n));
        if (!ik_even) add_simple(out, i - 1);
        add_simple(out, j - 1);
    }
    return out;
}

std::vector<int> cover_oracle(int n, const OmegaDescriptor& d) {
    if (!valid_descriptor(d, n)) throw std::invalid_argument("cover_oracle: bad descriptor");
    std::vector<int> verts;
    if (d.i == d.k) {
        verts = end_anchored(d.j, d.k, n);
    } else {
        verts = end_anchored(d.i, d.k - 1, n);
        for (int v : end_anchored(d.j, d.k - 2, n)) verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

} // namespace tiltlab
