#ifndef EXPANSE_DECOMPOSABILITY_HPP
#define EXPANSE_DECOMPOSABILITY_HPP

#include <vector>

#include "expanse/complex.hpp"

namespace expanse {

inline constexpr std::size_t kDefaultShellingFacetCap = 10;
inline constexpr std::size_t kDefaultDecompositionBudget = 1U << 20;

struct ShellingSearch {
    Decision decision = Decision::Undecided;
    /// A shelling order when decision == Yes.
    std::vector<Face> order;
};

/**
 * Nonpure (Bjorner-Wachs) shellability: an order F_1, ..., F_t of the facets
 * such that <F_k> meets <F_1, ..., F_{k-1}> in a pure complex of dimension
 * dim F_k - 1, for every k >= 2.
 *
 * Undecided when the complex has more than `facetCap` facets. Throws on the
 * void complex.
 */
ShellingSearch isShellable(const SimplicialComplex& complex, std::size_t facetCap = kDefaultShellingFacetCap);

/// True iff `order` is a shelling of its facets in the nonpure sense.
bool isShellingOrder(std::span<const Face> order);

/**
 * Nonpure vertex decomposability: a simplex (or {empty}), or a complex with a
 * shedding vertex v, meaning no facet of lk(v) is a facet of del(v), such that
 * lk(v) and del(v) are both vertex decomposable.
 *
 * Undecided once more than `stateBudget` distinct subcomplexes have been
 * visited. Throws on the void complex.
 */
Decision isVertexDecomposable(const SimplicialComplex& complex,
                              std::size_t stateBudget = kDefaultDecompositionBudget);

}  // namespace expanse

#endif  // EXPANSE_DECOMPOSABILITY_HPP
