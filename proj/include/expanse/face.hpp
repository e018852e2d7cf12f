#ifndef EXPANSE_FACE_HPP
#define EXPANSE_FACE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "expanse/errors.hpp"

namespace expanse {

/// Index into a vertex (or variable) name table.
using VertexId = std::uint32_t;

/// Hard upper bound on the size of any vertex table.
inline constexpr std::size_t kMaxVertices = 64;

/**
 * A finite set of vertices stored as a 64-bit mask.
 *
 * Faces of complexes, supports of squarefree monomials and the vertex
 * subsets used by restrictions all share this type.
 */
class Face {
  public:
    constexpr Face() = default;

    static constexpr Face fromBits(std::uint64_t bits) { return Face(bits); }

    static Face of(std::initializer_list<VertexId> members) {
        return fromVertices(std::span<const VertexId>(members.begin(), members.size()));
    }

    static Face fromVertices(std::span<const VertexId> members) {
        Face f;
        for (VertexId v : members) {
            if (v >= kMaxVertices) {
                throw InvalidArgument("vertex index " + std::to_string(v) + " exceeds the 64-vertex limit");
            }
            f.bits_ |= std::uint64_t{1} << v;
        }
        return f;
    }

    /// {0, 1, ..., n-1}
    static constexpr Face firstN(std::size_t n) {
        return Face(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(VertexId v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
    constexpr bool isSubsetOf(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

    constexpr Face with(VertexId v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(VertexId v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }

    /// Smallest member; undefined on the empty face.
    constexpr VertexId lowest() const { return static_cast<VertexId>(std::countr_zero(bits_)); }
    /// Largest member; undefined on the empty face.
    constexpr VertexId highest() const { return static_cast<VertexId>(63 - std::countl_zero(bits_)); }

    std::vector<VertexId> members() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(static_cast<VertexId>(std::countr_zero(b)));
        }
        return out;
    }

    template <typename Fn>
    constexpr void forEach(Fn&& fn) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            fn(static_cast<VertexId>(std::countr_zero(b)));
        }
    }

    friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
    friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face a, Face b) = default;

  private:
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    std::uint64_t bits_ = 0;
};

/// Canonical order: by size, then lexicographically on sorted member indices.
constexpr bool canonicalLess(Face a, Face b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) {
        return false;
    }
    // For equal sizes, whichever set owns the lowest differing element is smaller.
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

/// Keeps only the inclusion-maximal faces, deduplicated and canonically sorted.
std::vector<Face> maximalFaces(std::vector<Face> faces);

/// Keeps only the inclusion-minimal faces, deduplicated and canonically sorted.
std::vector<Face> minimalFaces(std::vector<Face> faces);

/// True iff no element of `faces` strictly contains another (duplicates count as a violation).
bool isAntichain(std::span<const Face> faces);

}  // namespace expanse

#endif  // EXPANSE_FACE_HPP
