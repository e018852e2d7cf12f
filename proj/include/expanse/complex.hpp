#ifndef EXPANSE_COMPLEX_HPP
#define EXPANSE_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "expanse/face.hpp"

namespace expanse {

/**
 * A simplicial complex on a named vertex table, stored as its facets.
 *
 * Facets form an antichain kept in canonical order (size, then lex), so two
 * complexes are equal iff their vertex tables and facet lists are equal.
 * Vertices may sit in the table without lying in any facet.
 *
 * Degenerate values:
 *   - void complex: no facets at all (no dimension);
 *   - irrelevant complex: the single empty facet, dimension -1.
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Throws InvalidArgument on duplicate names or out-of-range face members.
    static SimplicialComplex fromFacets(std::vector<std::string> names, std::vector<Face> faces);

    static SimplicialComplex voidComplex(std::vector<std::string> names);
    static SimplicialComplex irrelevant(std::vector<std::string> names);
    /// The full simplex on all listed vertices.
    static SimplicialComplex simplex(std::vector<std::string> names);

    const std::vector<std::string>& vertexNames() const { return names_; }
    std::size_t vertexCount() const { return names_.size(); }
    const std::vector<Face>& facets() const { return facets_; }

    bool isVoid() const { return facets_.empty(); }
    bool isIrrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
    /// Single facet (the irrelevant complex counts).
    bool isSimplex() const { return facets_.size() == 1; }
    /// Single facet equal to the whole vertex table.
    bool isFullSimplex() const;
    bool isPure() const;

    /// nullopt for the void complex.
    std::optional<int> dimension() const;

    bool containsFace(Face f) const;
    /// Union of all facets.
    Face support() const;
    Face allVertices() const { return Face::firstN(names_.size()); }

    /// Every face (the empty face included), canonically ordered.
    std::vector<Face> allFaces() const;

    std::string vertexName(VertexId v) const { return names_.at(v); }
    std::string format(Face f) const;
    std::string format() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  private:
    SimplicialComplex(std::vector<std::string> names, std::vector<Face> facets)
        : names_(std::move(names)), facets_(std::move(facets)) {}

    std::vector<std::string> names_;
    std::vector<Face> facets_;
};

/// Rejects duplicate names and tables larger than kMaxVertices.
void validateNames(const std::vector<std::string>& names);

/**
 * Positive multiplicity per vertex.
 *
 * The expanded vertex table lists copies base-major, copy-minor:
 * x1_1, ..., x1_{s1}, x2_1, ...
 */
class ExpansionVector {
  public:
    /// Throws InvalidArgument on a zero entry.
    explicit ExpansionVector(std::vector<unsigned> multiplicities);

    static ExpansionVector ones(std::size_t n) { return ExpansionVector(std::vector<unsigned>(n, 1)); }
    static ExpansionVector constant(std::size_t n, unsigned s) { return ExpansionVector(std::vector<unsigned>(n, s)); }

    std::size_t size() const { return mult_.size(); }
    unsigned operator[](std::size_t i) const { return mult_.at(i); }
    const std::vector<unsigned>& values() const { return mult_; }

    /// Size of X^alpha.
    std::size_t total() const { return offsets_.back(); }
    /// Index in X^alpha of copy `copy` (1-based) of base vertex `base`.
    VertexId expandedIndex(VertexId base, unsigned copy) const;
    /// All copies of base vertex `base` as a face of X^alpha.
    Face copiesOf(VertexId base) const;
    /// Base vertex and 1-based copy of an index into X^alpha.
    std::pair<VertexId, unsigned> baseOf(VertexId expanded) const;

    /// alpha + delta_i.
    ExpansionVector plusUnit(VertexId i) const;

    /// Names of X^alpha: base + "_" + copy.
    std::vector<std::string> expandedNames(const std::vector<std::string>& baseNames) const;

    /// Throws unless size() == n.
    void requireSize(std::size_t n) const;

    friend bool operator==(const ExpansionVector& a, const ExpansionVector& b) { return a.mult_ == b.mult_; }

  private:
    std::vector<unsigned> mult_;
    std::vector<std::size_t> offsets_;
};

/// Projects a face of X^alpha onto the base vertex set.
Face baseProjection(Face expandedFace, const ExpansionVector& alpha);

/// The expansion functor on complexes.
SimplicialComplex expand(const SimplicialComplex& complex, const ExpansionVector& alpha);

/// <X \ F : F facet>, relative to the full vertex table. Throws on the void complex.
SimplicialComplex complement(const SimplicialComplex& complex);

/// {X \ F : F not a face}. The full simplex maps to the void complex.
SimplicialComplex alexanderDual(const SimplicialComplex& complex);

/// Inclusion-minimal non-faces, canonically ordered.
std::vector<Face> minimalNonFaces(const SimplicialComplex& complex);

/// {G : G disjoint from F, G u F in complex}. Throws if F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, Face face);
/// Faces avoiding v.
SimplicialComplex deletion(const SimplicialComplex& complex, VertexId v);
/// Faces contained in W.
SimplicialComplex restriction(const SimplicialComplex& complex, Face subset);

/// Complex generated by the i-dimensional faces, -1 <= i <= dim.
SimplicialComplex pureSkeleton(const SimplicialComplex& complex, int dimension);

/**
 * Checks that (complex^beta)^(1 + delta_{i k_i}) and complex^(beta + delta_i)
 * have the same facets under the relabelling x_{rs1} -> x_{rs},
 * x_{i k_i 2} -> x_{i (k_i + 1)}.
 */
bool verifyEpsilonLemma(const SimplicialComplex& complex, const ExpansionVector& beta, VertexId i);

}  // namespace expanse

#endif  // EXPANSE_COMPLEX_HPP
