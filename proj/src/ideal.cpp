#include "expanse/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace expanse {

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::fromGenerators(std::vector<std::string> variables, std::vector<Face> supports) {
    validateNames(variables);
    const Face all = Face::firstN(variables.size());
    for (Face g : supports) {
        if (g.empty()) {
            throw InvalidArgument("the unit monomial is not a valid generator");
        }
        if (!g.isSubsetOf(all)) {
            throw InvalidArgument("generator uses a variable index out of range");
        }
    }
    return MonomialIdeal(std::move(variables), minimalFaces(std::move(supports)));
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> variables) {
    return fromGenerators(std::move(variables), {});
}

bool MonomialIdeal::containsSquarefree(Face support) const {
    return std::any_of(gens_.begin(), gens_.end(), [support](Face g) { return g.isSubsetOf(support); });
}

Face MonomialIdeal::support() const {
    Face s;
    for (Face g : gens_) {
        s = s | g;
    }
    return s;
}

std::string MonomialIdeal::format(Face monomial) const {
    std::string s;
    bool first = true;
    monomial.forEach([&](VertexId v) {
        if (!first) {
            s += "*";
        }
        first = false;
        s += vars_.at(v);
    });
    return s;
}

std::string MonomialIdeal::format() const {
    std::string s = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k > 0) {
            s += ", ";
        }
        s += format(gens_[k]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Correspondences

MonomialIdeal facetIdeal(const SimplicialComplex& complex) {
    if (complex.isVoid()) {
        throw InvalidArgument("facet ideal of the void complex is undefined");
    }
    if (complex.isIrrelevant()) {
        throw InvalidArgument("facet ideal of the irrelevant complex would contain the unit monomial");
    }
    return MonomialIdeal::fromGenerators(complex.vertexNames(), complex.facets());
}

MonomialIdeal stanleyReisnerIdeal(const SimplicialComplex& complex) {
    if (complex.isVoid()) {
        throw InvalidArgument("Stanley-Reisner ideal of the void complex is the unit ideal");
    }
    return MonomialIdeal::fromGenerators(complex.vertexNames(), minimalNonFaces(complex));
}

SimplicialComplex complexOfIdeal(const MonomialIdeal& ideal) {
    // Split every facet containing a generator until no generator fits.
    std::vector<Face> facets{Face::firstN(ideal.variableCount())};
    for (Face g : ideal.generators()) {
        std::vector<Face> next;
        for (Face f : facets) {
            if (!g.isSubsetOf(f)) {
                next.push_back(f);
                continue;
            }
            g.forEach([&](VertexId v) { next.push_back(f.without(v)); });
        }
        facets = maximalFaces(std::move(next));
    }
    return SimplicialComplex::fromFacets(ideal.variableNames(), std::move(facets));
}

MonomialIdeal alexanderDualIdeal(const MonomialIdeal& ideal) {
    if (ideal.isZero()) {
        throw InvalidArgument("Alexander dual of the zero ideal is undefined");
    }
    // Berge: minimal transversals of the generator supports, one edge at a time.
    std::vector<Face> transversals{Face{}};
    for (Face edge : ideal.generators()) {
        std::vector<Face> next;
        for (Face t : transversals) {
            if (t.intersects(edge)) {
                next.push_back(t);
            } else {
                edge.forEach([&](VertexId v) { next.push_back(t.with(v)); });
            }
        }
        transversals = minimalFaces(std::move(next));
    }
    return MonomialIdeal::fromGenerators(ideal.variableNames(), std::move(transversals));
}

MonomialIdeal dualJ(const SimplicialComplex& complex) {
    return alexanderDualIdeal(facetIdeal(complex));
}

MonomialIdeal expandJGenerators(const MonomialIdeal& ideal, const ExpansionVector& alpha) {
    alpha.requireSize(ideal.variableCount());
    std::vector<std::string> names = alpha.expandedNames(ideal.variableNames());
    if (names.size() > kMaxVertices) {
        throw InvalidArgument("expanded variable table exceeds 64 variables");
    }
    std::vector<Face> gens;
    gens.reserve(ideal.generators().size());
    for (Face g : ideal.generators()) {
        Face expanded;
        g.forEach([&](VertexId v) { expanded = expanded | alpha.copiesOf(v); });
        gens.push_back(expanded);
    }
    return MonomialIdeal::fromGenerators(std::move(names), std::move(gens));
}

// ---------------------------------------------------------------------------
// Linear quotients

namespace {

// Variables x with supp(f_k) \ supp(f) = {x} for some earlier f_k, provided
// that set generates the whole colon ideal; nullopt otherwise.
std::optional<Face> colonVariables(std::span<const Face> earlier, Face f) {
    Face vars;
    for (Face g : earlier) {
        const Face diff = g - f;
        if (diff.size() == 1) {
            vars = vars | diff;
        }
    }
    for (Face g : earlier) {
        if (!(g - f).intersects(vars)) {
            return std::nullopt;
        }
    }
    return vars;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

bool isPermutation(const std::vector<std::size_t>& order, std::size_t n) {
    if (order.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (std::size_t k : order) {
        if (k >= n || seen[k]) {
            return false;
        }
        seen[k] = true;
    }
    return true;
}

}  // namespace

LinearQuotientsSearch linearQuotientsOrder(const MonomialIdeal& ideal, std::size_t generatorCap) {
    const std::vector<Face>& gens = ideal.generators();
    if (gens.empty()) {
        throw InvalidArgument("linear quotients of the zero ideal are undefined");
    }
    if (gens.size() > generatorCap || gens.size() > 63) {
        return {Decision::Undecided, std::nullopt};
    }
    const std::size_t m = gens.size();

    // Whether a prefix extends to a full order depends only on the set of
    // generators already placed, so dead sets are remembered.
    std::unordered_set<std::uint64_t> dead;
    std::vector<Face> prefix;
    std::vector<std::size_t> order;
    std::vector<Face> sets;

    std::function<bool(std::uint64_t)> search = [&](std::uint64_t used) -> bool {
        if (order.size() == m) {
            return true;
        }
        if (dead.contains(used)) {
            return false;
        }
        for (std::size_t k = 0; k < m; ++k) {
            if ((used >> k) & 1U) {
                continue;
            }
            const std::optional<Face> vars = colonVariables(prefix, gens[k]);
            if (!vars) {
                continue;
            }
            prefix.push_back(gens[k]);
            order.push_back(k);
            sets.push_back(*vars);
            if (search(used | (std::uint64_t{1} << k))) {
                return true;
            }
            prefix.pop_back();
            order.pop_back();
            sets.pop_back();
        }
        dead.insert(used);
        return false;
    };

    if (!search(0)) {
        return {Decision::No, std::nullopt};
    }
    return {Decision::Yes, LinearQuotientsCertificate{order, sets}};
}

bool verifyLinearQuotients(const LinearQuotientsCertificate& cert, const MonomialIdeal& ideal) {
    const std::vector<Face>& gens = ideal.generators();
    const std::size_t n = ideal.variableCount();
    if (!isPermutation(cert.order, gens.size()) || cert.sets.size() != gens.size()) {
        return false;
    }
    using Exponents = std::vector<int>;
    auto exponents = [n](Face f) {
        Exponents e(n, 0);
        f.forEach([&](VertexId v) { e[v] = 1; });
        return e;
    };
    auto divides = [n](const Exponents& a, const Exponents& b) {
        for (std::size_t v = 0; v < n; ++v) {
            if (a[v] > b[v]) {
                return false;
            }
        }
        return true;
    };

    for (std::size_t t = 0; t < gens.size(); ++t) {
        const Exponents ft = exponents(gens[cert.order[t]]);
        // Variables x with x * f_t in (f_1, ..., f_{t-1}).
        Face inColon;
        for (VertexId x = 0; x < n; ++x) {
            Exponents probe = ft;
            ++probe[x];
            for (std::size_t s = 0; s < t; ++s) {
                if (divides(exponents(gens[cert.order[s]]), probe)) {
                    inColon = inColon.with(x);
                    break;
                }
            }
        }
        if (inColon != cert.sets[t]) {
            return false;
        }
        // Each colon generator f_s / gcd(f_s, f_t) must be a multiple of one of them.
        for (std::size_t s = 0; s < t; ++s) {
            const Exponents fs = exponents(gens[cert.order[s]]);
            bool covered = false;
            inColon.forEach([&](VertexId x) { covered = covered || fs[x] > ft[x]; });
            if (!covered) {
                return false;
            }
        }
    }
    return true;
}

BettiTable bettiFromLinearQuotients(const LinearQuotientsCertificate& cert, const MonomialIdeal& ideal) {
    if (!verifyLinearQuotients(cert, ideal)) {
        throw InvalidArgument("certificate is not an order of linear quotients for " + ideal.format());
    }
    BettiTable table(ModuleKind::Ideal);
    for (std::size_t t = 0; t < cert.order.size(); ++t) {
        const auto degree = static_cast<int>(ideal.generators()[cert.order[t]].size());
        const std::size_t setSize = cert.sets[t].size();
        for (std::size_t i = 0; i <= setSize; ++i) {
            table.add(static_cast<int>(i), degree + static_cast<int>(i), binomial(setSize, i));
        }
    }
    return table;
}

namespace {

// Copy index of each member of `facet`, listed by increasing base vertex.
std::vector<unsigned> copyTuple(Face facet, const ExpansionVector& alpha) {
    std::vector<unsigned> tuple;
    facet.forEach([&](VertexId v) { tuple.push_back(alpha.baseOf(v).second); });
    return tuple;
}

std::size_t positionInOrder(const SimplicialComplex& complex, const LinearQuotientsCertificate& cert, Face baseFacet) {
    const auto& facets = complex.facets();
    const auto it = std::find(facets.begin(), facets.end(), baseFacet);
    if (it == facets.end()) {
        throw InvalidArgument("expanded facet does not project onto a facet of the base complex");
    }
    const auto index = static_cast<std::size_t>(std::distance(facets.begin(), it));
    return static_cast<std::size_t>(
        std::distance(cert.order.begin(), std::find(cert.order.begin(), cert.order.end(), index)));
}

}  // namespace

LinearQuotientsCertificate expansionOrder(const SimplicialComplex& complex, const LinearQuotientsCertificate& cert,
                                          const ExpansionVector& alpha) {
    alpha.requireSize(complex.vertexCount());
    if (!verifyLinearQuotients(cert, facetIdeal(complex))) {
        throw InvalidArgument("expansionOrder: certificate is not valid for the facet ideal");
    }
    const SimplicialComplex expanded = expand(complex, alpha);
    const std::vector<Face>& facets = expanded.facets();

    struct Key {
        std::size_t basePosition;
        std::vector<unsigned> copies;
        std::size_t index;
    };
    std::vector<Key> keys;
    keys.reserve(facets.size());
    for (std::size_t k = 0; k < facets.size(); ++k) {
        keys.push_back({positionInOrder(complex, cert, baseProjection(facets[k], alpha)), copyTuple(facets[k], alpha), k});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return std::tie(a.basePosition, a.copies) < std::tie(b.basePosition, b.copies);
    });

    LinearQuotientsCertificate out;
    std::vector<Face> prefix;
    for (const Key& key : keys) {
        const Face f = facets[key.index];
        const std::optional<Face> vars = colonVariables(prefix, f);
        if (!vars) {
            throw InvalidArgument("induced order on the expanded facet ideal is not an order of linear quotients");
        }
        out.order.push_back(key.index);
        out.sets.push_back(*vars);
        prefix.push_back(f);
    }
    return out;
}

Face expansionSetFormula(const SimplicialComplex& complex, const LinearQuotientsCertificate& cert,
                         const ExpansionVector& alpha, Face expandedFacet) {
    alpha.requireSize(complex.vertexCount());
    const Face base = baseProjection(expandedFacet, alpha);
    const std::size_t pos = positionInOrder(complex, cert, base);
    if (pos >= cert.sets.size()) {
        throw InvalidArgument("certificate does not cover every facet");
    }
    Face result;
    cert.sets[pos].forEach([&](VertexId i) { result = result | alpha.copiesOf(i); });
    expandedFacet.forEach([&](VertexId v) {
        const auto [i, r] = alpha.baseOf(v);
        for (unsigned t = 1; t < r; ++t) {
            result = result.with(alpha.expandedIndex(i, t));
        }
    });
    return result;
}

}  // namespace expanse
