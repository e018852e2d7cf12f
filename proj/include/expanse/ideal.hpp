#ifndef EXPANSE_IDEAL_HPP
#define EXPANSE_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "expanse/betti.hpp"
#include "expanse/complex.hpp"

namespace expanse {

/**
 * A squarefree monomial ideal given by its minimal generators.
 *
 * Each generator is stored as its support (a nonempty Face over the variable
 * table). Generators form an antichain in canonical order. The zero ideal has
 * no generators.
 */
class MonomialIdeal {
  public:
    MonomialIdeal() = default;

    /// Minimalizes the generator list. Throws on empty supports or bad indices.
    static MonomialIdeal fromGenerators(std::vector<std::string> variables, std::vector<Face> supports);
    static MonomialIdeal zero(std::vector<std::string> variables);

    const std::vector<std::string>& variableNames() const { return vars_; }
    std::size_t variableCount() const { return vars_.size(); }
    const std::vector<Face>& generators() const { return gens_; }
    bool isZero() const { return gens_.empty(); }

    /// Membership of the squarefree monomial x^support.
    bool containsSquarefree(Face support) const;
    /// Union of generator supports.
    Face support() const;

    std::string format(Face monomial) const;
    std::string format() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  private:
    MonomialIdeal(std::vector<std::string> vars, std::vector<Face> gens) : vars_(std::move(vars)), gens_(std::move(gens)) {}

    std::vector<std::string> vars_;
    std::vector<Face> gens_;
};

/**
 * An order of linear quotients on G(I).
 *
 * `order[t]` indexes into `ideal.generators()`; `sets[t]` is the set of
 * variables generating (f_1, ..., f_{t-1}) : (f_t), empty for t = 0.
 */
struct LinearQuotientsCertificate {
    std::vector<std::size_t> order;
    std::vector<Face> sets;

    friend bool operator==(const LinearQuotientsCertificate&, const LinearQuotientsCertificate&) = default;
};

struct LinearQuotientsSearch {
    Decision decision = Decision::Undecided;
    std::optional<LinearQuotientsCertificate> certificate;
};

inline constexpr std::size_t kDefaultGeneratorCap = 12;

/// I(complex) = (x^F : F facet). Throws on the void or irrelevant complex.
MonomialIdeal facetIdeal(const SimplicialComplex& complex);

/// I_complex, generated by minimal non-faces. The full simplex gives the zero ideal.
MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex);

/// The complex whose Stanley-Reisner ideal is `ideal`.
SimplicialComplex complexOfIdeal(const MonomialIdeal& ideal);

/// Intersection of the primes (x_j : j in supp g) over generators g. Throws on the zero ideal.
MonomialIdeal alexanderDualIdeal(const MonomialIdeal& ideal);

/// J_complex = I(complex)^dual = intersection of P_F over facets.
MonomialIdeal dualJ(const SimplicialComplex& complex);

/// Replaces each variable x_i by x_{i1} ... x_{i k_i} over X^alpha.
MonomialIdeal expandJGenerators(const MonomialIdeal& ideal, const ExpansionVector& alpha);

/// Backtracking search for an order of linear quotients; Undecided above `generatorCap`.
LinearQuotientsSearch linearQuotientsOrder(const MonomialIdeal& ideal, std::size_t generatorCap = kDefaultGeneratorCap);

/**
 * Recomputes every colon ideal of `cert` from scratch with exponent-vector
 * membership and checks that it is generated by exactly `cert.sets[t]`.
 */
bool verifyLinearQuotients(const LinearQuotientsCertificate& cert, const MonomialIdeal& ideal);

/// beta_{i,j}(I) = sum over deg f_t = j - i of C(|set(f_t)|, i). Throws on a mismatched certificate.
BettiTable bettiFromLinearQuotients(const LinearQuotientsCertificate& cert, const MonomialIdeal& ideal);

/**
 * The order on G(I(complex^alpha)) induced by `cert` on G(I(complex)): by base
 * facet position first, then lexicographically on copy indices. The returned
 * sets are the true colon generators; throws if the order is not one of
 * linear quotients.
 */
LinearQuotientsCertificate expansionOrder(const SimplicialComplex& complex, const LinearQuotientsCertificate& cert,
                                          const ExpansionVector& alpha);

/**
 * Closed-form set of the expanded generator x^F (F a facet of complex^alpha):
 * all copies of variables in set(x^{base F}), plus the lower copies x_{it},
 * t < r, of each x_{ir} in F.
 */
Face expansionSetFormula(const SimplicialComplex& complex, const LinearQuotientsCertificate& cert,
                         const ExpansionVector& alpha, Face expandedFacet);

}  // namespace expanse

#endif  // EXPANSE_IDEAL_HPP
