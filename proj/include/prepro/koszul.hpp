#pragma once

#include <tuple>
#include <vector>

#include "prepro/presentation.hpp"
#include "prepro/subspace.hpp"

namespace prepro {

/// The spaces K_l of the Koszul complex: K_0 = trivial paths, K_1 = arrows,
/// K_2 = the relation space, and for l >= 3 the exact intersection of all
/// padded relation spaces inside the length-l path space.
///
/// Levels are built iteratively through K_l = (K_{l-1} (x) V) ^ (K_{l-2} (x) M),
/// which is the pairwise intersection carried out in the coordinates of the
/// previous level, so the ambient path space is never materialized. Basis
/// vectors expand to explicit path vectors on demand; expansions and kernels
/// are RREF-canonical, so outputs are deterministic.
class KoszulComplex {
public:
    explicit KoszulComplex(const QuadraticPresentation& p);

    void extend_to(std::size_t l);

    long total_dim(std::size_t l);
    DimMatrix dims(std::size_t l);

    /// Expanded basis vectors of K_l in deterministic order.
    const std::vector<PathVector>& generators(std::size_t l);

    /// Representation of the j-th basis vector of K_l over K_{l-1} (x) V:
    /// triples (index into level l-1, first-acting arrow, coefficient).
    const std::vector<std::tuple<std::size_t, ArrowId, Rat>>& components(std::size_t l,
                                                                         std::size_t j);
    VertexId generator_source(std::size_t l, std::size_t j);
    VertexId generator_target(std::size_t l, std::size_t j);

private:
    struct Vec {
        VertexId source;
        VertexId target;
        // K_l vector as sum of coeff * (level l-1 vector) (x) (first-acting arrow)
        std::vector<std::tuple<std::size_t, ArrowId, Rat>> comp;
    };
    struct Level {
        std::vector<Vec> vecs;
        std::vector<PathVector> expanded;
        bool expanded_ready = false;
    };

    void build_level(std::size_t l);
    void expand_level(std::size_t l);

    QuadraticPresentation pres_;  // owned copy, so temporaries are safe arguments
    std::vector<Level> levels_;
};

/// K_l as a subspace of the full length-l path space (enumerate_paths order).
Subspace koszul_space(const QuadraticPresentation& p, std::size_t l);

struct KoszulDimsEntry {
    std::size_t l;
    long dim;
    DimMatrix by_block;
};

std::vector<KoszulDimsEntry> koszul_dims(const QuadraticPresentation& p, std::size_t l_max);

/// Top-degree generator extraction. When K_n consists of one closed
/// generator per vertex and nothing off-diagonal, `form` carries their sum,
/// each scaled so its lexicographically first path has coefficient +1;
/// otherwise `ok` is false and `dims` reports the per-vertex-pair profile.
struct TopFormResult {
    bool ok = false;
    PathVector form;
    DimMatrix dims;
};

TopFormResult top_form(const QuadraticPresentation& p, std::size_t n);

}  // namespace prepro
