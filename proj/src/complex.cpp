#include "expanse/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace expanse {

void validateNames(const std::vector<std::string>& names) {
    if (names.size() > kMaxVertices) {
        throw InvalidArgument("vertex table has " + std::to_string(names.size()) + " entries; at most 64 are supported");
    }
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw InvalidArgument("duplicate vertex name '" + *dup + "'");
    }
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::fromFacets(std::vector<std::string> names, std::vector<Face> faces) {
    validateNames(names);
    const Face all = Face::firstN(names.size());
    for (Face f : faces) {
        if (!f.isSubsetOf(all)) {
            throw InvalidArgument("face index out of range for a table of " + std::to_string(names.size()) + " vertices");
        }
    }
    return SimplicialComplex(std::move(names), maximalFaces(std::move(faces)));
}

SimplicialComplex SimplicialComplex::voidComplex(std::vector<std::string> names) {
    return fromFacets(std::move(names), {});
}

SimplicialComplex SimplicialComplex::irrelevant(std::vector<std::string> names) {
    return fromFacets(std::move(names), {Face{}});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> names) {
    const Face all = Face::firstN(names.size());
    return fromFacets(std::move(names), {all});
}

bool SimplicialComplex::isFullSimplex() const {
    return facets_.size() == 1 && facets_.front() == allVertices();
}

bool SimplicialComplex::isPure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [this](Face f) { return f.size() == facets_.front().size(); });
}

std::optional<int> SimplicialComplex::dimension() const {
    if (facets_.empty()) {
        return std::nullopt;
    }
    // Canonical order puts the largest facet last.
    return static_cast<int>(facets_.back().size()) - 1;
}

bool SimplicialComplex::containsFace(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.isSubsetOf(g); });
}

Face SimplicialComplex::support() const {
    Face s;
    for (Face f : facets_) {
        s = s | f;
    }
    return s;
}

std::vector<Face> SimplicialComplex::allFaces() const {
    std::unordered_set<std::uint64_t> seen;
    for (Face f : facets_) {
        // Enumerate all submasks of the facet.
        const std::uint64_t full = f.bits();
        std::uint64_t sub = full;
        while (true) {
            seen.insert(sub);
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & full;
        }
    }
    std::vector<Face> out;
    out.reserve(seen.size());
    for (std::uint64_t b : seen) {
        out.push_back(Face::fromBits(b));
    }
    std::sort(out.begin(), out.end(), canonicalLess);
    return out;
}

std::string SimplicialComplex::format(Face f) const {
    std::string s = "{";
    bool first = true;
    f.forEach([&](VertexId v) {
        if (!first) {
            s += ",";
        }
        first = false;
        s += v < names_.size() ? names_[v] : "#" + std::to_string(v);
    });
    return s + "}";
}

std::string SimplicialComplex::format() const {
    if (isVoid()) {
        return "<void>";
    }
    std::string s = "<";
    for (std::size_t k = 0; k < facets_.size(); ++k) {
        if (k > 0) {
            s += ",";
        }
        s += format(facets_[k]);
    }
    return s + ">";
}

// ---------------------------------------------------------------------------
// ExpansionVector

ExpansionVector::ExpansionVector(std::vector<unsigned> multiplicities) : mult_(std::move(multiplicities)) {
    offsets_.reserve(mult_.size() + 1);
    offsets_.push_back(0);
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0) {
            throw InvalidArgument("expansion multiplicity at position " + std::to_string(i) + " is zero; entries must be >= 1");
        }
        offsets_.push_back(offsets_.back() + mult_[i]);
    }
}

VertexId ExpansionVector::expandedIndex(VertexId base, unsigned copy) const {
    if (base >= mult_.size() || copy == 0 || copy > mult_[base]) {
        throw InvalidArgument("no copy " + std::to_string(copy) + " of vertex " + std::to_string(base));
    }
    return static_cast<VertexId>(offsets_[base] + copy - 1);
}

Face ExpansionVector::copiesOf(VertexId base) const {
    const std::uint64_t lo = Face::firstN(offsets_.at(base)).bits();
    const std::uint64_t hi = Face::firstN(offsets_.at(base + 1)).bits();
    return Face::fromBits(hi & ~lo);
}

std::pair<VertexId, unsigned> ExpansionVector::baseOf(VertexId expanded) const {
    if (expanded >= total()) {
        throw InvalidArgument("expanded vertex index out of range");
    }
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), static_cast<std::size_t>(expanded));
    const auto base = static_cast<VertexId>(std::distance(offsets_.begin(), it) - 1);
    return {base, static_cast<unsigned>(expanded - offsets_[base] + 1)};
}

ExpansionVector ExpansionVector::plusUnit(VertexId i) const {
    if (i >= mult_.size()) {
        throw InvalidArgument("vertex index " + std::to_string(i) + " out of range");
    }
    std::vector<unsigned> m = mult_;
    ++m[i];
    return ExpansionVector(std::move(m));
}

std::vector<std::string> ExpansionVector::expandedNames(const std::vector<std::string>& baseNames) const {
    requireSize(baseNames.size());
    std::vector<std::string> out;
    out.reserve(total());
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        for (unsigned c = 1; c <= mult_[i]; ++c) {
            out.push_back(baseNames[i] + "_" + std::to_string(c));
        }
    }
    return out;
}

void ExpansionVector::requireSize(std::size_t n) const {
    if (mult_.size() != n) {
        throw InvalidArgument("expansion vector has length " + std::to_string(mult_.size()) + " but the vertex table has " +
                              std::to_string(n) + " entries");
    }
}

Face baseProjection(Face expandedFace, const ExpansionVector& alpha) {
    Face base;
    expandedFace.forEach([&](VertexId v) { base = base.with(alpha.baseOf(v).first); });
    return base;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

// Appends every transversal picking one copy of each member of `facet`.
void expandFacet(Face facet, const ExpansionVector& alpha, std::vector<Face>& out) {
    std::vector<Face> partial{Face{}};
    facet.forEach([&](VertexId v) {
        std::vector<Face> next;
        next.reserve(partial.size() * alpha[v]);
        for (Face p : partial) {
            for (unsigned c = 1; c <= alpha[v]; ++c) {
                next.push_back(p.with(alpha.expandedIndex(v, c)));
            }
        }
        partial = std::move(next);
    });
    out.insert(out.end(), partial.begin(), partial.end());
}

}  // namespace

SimplicialComplex expand(const SimplicialComplex& complex, const ExpansionVector& alpha) {
    alpha.requireSize(complex.vertexCount());
    std::vector<std::string> names = alpha.expandedNames(complex.vertexNames());
    if (names.size() > kMaxVertices) {
        throw InvalidArgument("expanded vertex table exceeds 64 vertices");
    }
    std::vector<Face> faces;
    for (Face f : complex.facets()) {
        expandFacet(f, alpha, faces);
    }
    return SimplicialComplex::fromFacets(std::move(names), std::move(faces));
}

SimplicialComplex complement(const SimplicialComplex& complex) {
    if (complex.isVoid()) {
        throw InvalidArgument("complement of the void complex is undefined");
    }
    const Face all = complex.allVertices();
    std::vector<Face> faces;
    for (Face f : complex.facets()) {
        faces.push_back(all - f);
    }
    return SimplicialComplex::fromFacets(complex.vertexNames(), std::move(faces));
}

std::vector<Face> minimalNonFaces(const SimplicialComplex& complex) {
    if (complex.isVoid()) {
        return {Face{}};
    }
    const std::size_t n = complex.vertexCount();
    std::vector<Face> result;
    // A minimal non-face N of size k has every (k-1)-subset a face, so it is
    // F u {v} for some face F of size k-1 and v above max(F).
    std::vector<Face> faces = complex.allFaces();
    std::unordered_set<std::uint64_t> faceSet;
    for (Face f : faces) {
        faceSet.insert(f.bits());
    }
    for (Face f : faces) {
        const VertexId start = f.empty() ? 0 : f.highest() + 1;
        for (VertexId v = start; v < n; ++v) {
            const Face candidate = f.with(v);
            if (faceSet.contains(candidate.bits())) {
                continue;
            }
            bool minimal = true;
            candidate.forEach([&](VertexId u) {
                if (minimal && !faceSet.contains(candidate.without(u).bits())) {
                    minimal = false;
                }
            });
            if (minimal) {
                result.push_back(candidate);
            }
        }
    }
    std::sort(result.begin(), result.end(), canonicalLess);
    return result;
}

SimplicialComplex alexanderDual(const SimplicialComplex& complex) {
    const Face all = complex.allVertices();
    std::vector<Face> faces;
    for (Face n : minimalNonFaces(complex)) {
        faces.push_back(all - n);
    }
    return SimplicialComplex::fromFacets(complex.vertexNames(), std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& complex, Face face) {
    if (!complex.containsFace(face)) {
        throw InvalidArgument("link: " + complex.format(face) + " is not a face");
    }
    std::vector<Face> faces;
    for (Face g : complex.facets()) {
        if (face.isSubsetOf(g)) {
            faces.push_back(g - face);
        }
    }
    return SimplicialComplex::fromFacets(complex.vertexNames(), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& complex, VertexId v) {
    if (v >= complex.vertexCount()) {
        throw InvalidArgument("deletion: vertex index out of range");
    }
    std::vector<Face> faces;
    for (Face g : complex.facets()) {
        faces.push_back(g.without(v));
    }
    return SimplicialComplex::fromFacets(complex.vertexNames(), std::move(faces));
}

SimplicialComplex restriction(const SimplicialComplex& complex, Face subset) {
    if (!subset.isSubsetOf(complex.allVertices())) {
        throw InvalidArgument("restriction: subset out of range");
    }
    std::vector<Face> faces;
    for (Face g : complex.facets()) {
        faces.push_back(g & subset);
    }
    return SimplicialComplex::fromFacets(complex.vertexNames(), std::move(faces));
}

SimplicialComplex pureSkeleton(const SimplicialComplex& complex, int dimension) {
    const std::optional<int> dim = complex.dimension();
    if (!dim || dimension < -1 || dimension > *dim) {
        throw InvalidArgument("pureSkeleton: dimension " + std::to_string(dimension) + " out of range");
    }
    const auto size = static_cast<std::size_t>(dimension + 1);
    std::unordered_set<std::uint64_t> seen;
    for (Face f : complex.facets()) {
        if (f.size() < size) {
            continue;
        }
        // Walk all size-subsets of the facet by combinations of member positions.
        const std::vector<VertexId> members = f.members();
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Face g;
            for (std::size_t k : idx) {
                g = g.with(members[k]);
            }
            seen.insert(g.bits());
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == members.size() - size + pos - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++idx[pos - 1];
            for (std::size_t k = pos; k < size; ++k) {
                idx[k] = idx[k - 1] + 1;
            }
        }
    }
    std::vector<Face> faces;
    for (std::uint64_t b : seen) {
        faces.push_back(Face::fromBits(b));
    }
    return SimplicialComplex::fromFacets(complex.vertexNames(), std::move(faces));
}

bool verifyEpsilonLemma(const SimplicialComplex& complex, const ExpansionVector& beta, VertexId i) {
    beta.requireSize(complex.vertexCount());
    if (i >= complex.vertexCount()) {
        throw InvalidArgument("verifyEpsilonLemma: vertex index out of range");
    }
    const ExpansionVector alpha = beta.plusUnit(i);
    const unsigned ki = beta[i];

    // gamma = 1 + delta_{i k_i} on the vertex table X^beta.
    std::vector<unsigned> gammaEntries(beta.total(), 1);
    gammaEntries[beta.expandedIndex(i, ki)] = 2;
    const ExpansionVector gamma(std::move(gammaEntries));

    const SimplicialComplex twice = expand(expand(complex, beta), gamma);
    const SimplicialComplex once = expand(complex, alpha);

    // phi(x_{rst}) = x_{rs} for t = 1, x_{i(k_i+1)} for t = 2.
    std::vector<VertexId> phi(gamma.total());
    for (VertexId w = 0; w < gamma.total(); ++w) {
        const auto [u, t] = gamma.baseOf(w);
        const auto [r, s] = beta.baseOf(u);
        phi[w] = t == 1 ? alpha.expandedIndex(r, s) : alpha.expandedIndex(i, ki + 1);
    }
    std::vector<VertexId> image = phi;
    std::sort(image.begin(), image.end());
    if (image.size() != alpha.total() || std::adjacent_find(image.begin(), image.end()) != image.end()) {
        return false;
    }

    std::vector<Face> mapped;
    mapped.reserve(twice.facets().size());
    for (Face f : twice.facets()) {
        Face g;
        f.forEach([&](VertexId w) { g = g.with(phi[w]); });
        mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end(), canonicalLess);
    return mapped == once.facets();
}

}  // namespace expanse
