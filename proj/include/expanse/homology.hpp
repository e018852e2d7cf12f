#ifndef EXPANSE_HOMOLOGY_HPP
#define EXPANSE_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "expanse/betti.hpp"
#include "expanse/complex.hpp"
#include "expanse/ideal.hpp"
#include "expanse/linalg.hpp"

namespace expanse {

/// Dimensions of reduced homology, dim H~_k for k >= -1. Only nonzero degrees are stored.
struct HomologyProfile {
    std::map<int, std::uint64_t> dims;

    std::uint64_t operator[](int k) const {
        const auto it = dims.find(k);
        return it == dims.end() ? 0 : it->second;
    }
    bool acyclic() const { return dims.empty(); }
    std::string format() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Hochster's formula is evaluated only up to this many variables.
inline constexpr std::size_t kHochsterVariableCap = 16;

/// Reduced simplicial homology over `field`. Throws on the void complex.
HomologyProfile reducedHomology(const SimplicialComplex& complex, FieldSpec field);

/// Reduced homology of the complex whose faces are exactly `faces` (closed under subsets).
HomologyProfile reducedHomologyOfFaces(std::span<const Face> faces, FieldSpec field);

/// sum_k (-1)^k f_k over all faces including the empty one.
std::int64_t reducedEulerCharacteristic(const SimplicialComplex& complex);

/**
 * Graded Betti numbers of I or S/I by Hochster's formula:
 * beta_{i,j}(S/I) = sum_{|W| = j} dim H~_{j-i-2}(Delta|_W), Delta = complexOfIdeal(I).
 *
 * Throws InvalidArgument on the zero ideal and CapExceeded above
 * kHochsterVariableCap variables.
 */
BettiTable hochsterBetti(const MonomialIdeal& ideal, FieldSpec field, ModuleKind kind);

/// Reisner's criterion. Throws on the void complex.
bool isCohenMacaulay(const SimplicialComplex& complex, FieldSpec field);

/// Every pure i-skeleton is Cohen-Macaulay. Throws on the void complex.
bool isSequentiallyCohenMacaulay(const SimplicialComplex& complex, FieldSpec field);

}  // namespace expanse

#endif  // EXPANSE_HOMOLOGY_HPP
