#ifndef TILTLAB_ENGINE_HPP
#define TILTLAB_ENGINE_HPP

#include "tiltlab/homology.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace tiltlab {

// Per-n computation context: the catalogue of indecomposables plus memoised
// resolutions, Hom dimensions and Ext tables. Build single-threaded; share
// only after all queries of interest have been made.
class Engine {
public:
    explicit Engine(int n);

    const Algebra& algebra() const { return algebra_; }
    int n() const { return algebra_.n; }
    int degree_cap() const { return 2 * algebra_.n - 2; }

    const std::vector<OmegaDescriptor>& catalogue() const { return catalogue_; }
    int index_of(const OmegaDescriptor& d) const;

    const Representation& module_of(const OmegaDescriptor& d);
    const ProjResolution& resolution(const OmegaDescriptor& d);

    long long hom_dim(const OmegaDescriptor& m, const OmegaDescriptor& n);
    long long ext(const OmegaDescriptor& m, const OmegaDescriptor& n, int degree);
    bool ext_nonzero_any_degree(const OmegaDescriptor& m, const OmegaDescriptor& n);
    long long end_dim(const OmegaDescriptor& d);
    int proj_dim(const OmegaDescriptor& d);

    // Direct-summand multiplicities, solved against the catalogue Hom
    // matrix (the Cartan matrix of the Auslander algebra, which is
    // invertible). Throws std::logic_error if the result is not a
    // non-negative integral decomposition matching the dimension vector.
    std::map<OmegaDescriptor, int> decompose(const Representation& rep);

    // Isomorphism fingerprint: equal dimension vectors plus matching
    // Hom/End dimensions, sufficient in this multiplicity-free setting.
    bool is_isomorphic(const Representation& m, const Representation& n);

    Cover cover_with_decomposition(const OmegaDescriptor& d, std::map<OmegaDescriptor, int>* summands);

private:
    Algebra algebra_;
    std::vector<OmegaDescriptor> catalogue_;
    std::vector<std::optional<Representation>> modules_;
    std::vector<std::unique_ptr<ProjResolution>> resolutions_;
    std::vector<std::vector<long long>> ext_tables_; // per ordered pair, degrees 0..2n-2
    std::vector<long long> hom_dims_;                // per ordered pair, -1 = unknown
    std::optional<Matrix> hom_matrix_inverse_;

    size_t pair_key(int a, int b) const { return size_t(a) * catalogue_.size() + size_t(b); }
    const Matrix& hom_matrix_inverse();
};

} // namespace tiltlab

#endif
