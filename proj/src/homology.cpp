#include "expanse/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace expanse {

std::string HomologyProfile::format() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, d] : dims) {
        os << (first ? "" : ", ") << "H" << k << "=" << d;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

std::vector<Face> facesOf(std::span<const Face> facets) {
    std::unordered_set<std::uint64_t> seen;
    for (Face f : facets) {
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
    return out;
}

}  // namespace

HomologyProfile reducedHomologyOfFaces(std::span<const Face> faces, FieldSpec field) {
    HomologyProfile profile;
    if (faces.empty()) {
        return profile;
    }
    std::size_t maxSize = 0;
    for (Face f : faces) {
        maxSize = std::max(maxSize, f.size());
    }
    // Faces grouped by size, each group sorted so matrices are reproducible.
    std::vector<std::vector<Face>> bySize(maxSize + 1);
    for (Face f : faces) {
        bySize[f.size()].push_back(f);
    }
    std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index(maxSize + 1);
    for (std::size_t s = 0; s <= maxSize; ++s) {
        std::sort(bySize[s].begin(), bySize[s].end(), canonicalLess);
        index[s].reserve(bySize[s].size());
        for (std::size_t k = 0; k < bySize[s].size(); ++k) {
            index[s].emplace(bySize[s][k].bits(), static_cast<std::uint32_t>(k));
        }
    }

    // boundaryRank[s] = rank of the boundary map from size-s faces to size-(s-1) faces.
    std::vector<std::size_t> boundaryRank(maxSize + 2, 0);
    for (std::size_t s = 1; s <= maxSize; ++s) {
        SparseMatrix m;
        m.columns = bySize[s - 1].size();
        m.rows.reserve(bySize[s].size());
        for (Face f : bySize[s]) {
            SparseMatrix::Row row;
            row.reserve(s);
            std::int64_t sign = 1;
            f.forEach([&](VertexId v) {
                row.emplace_back(index[s - 1].at(f.without(v).bits()), sign);
                sign = -sign;
            });
            std::sort(row.begin(), row.end());
            m.rows.push_back(std::move(row));
        }
        boundaryRank[s] = rank(m, field);
    }
    for (std::size_t s = 0; s <= maxSize; ++s) {
        const std::size_t dim = bySize[s].size() - boundaryRank[s] - boundaryRank[s + 1];
        if (dim != 0) {
            profile.dims[static_cast<int>(s) - 1] = dim;
        }
    }
    return profile;
}

HomologyProfile reducedHomology(const SimplicialComplex& complex, FieldSpec field) {
    if (complex.isVoid()) {
        throw InvalidArgument("reduced homology of the void complex is undefined");
    }
    const std::vector<Face> faces = facesOf(complex.facets());
    return reducedHomologyOfFaces(faces, field);
}

std::int64_t reducedEulerCharacteristic(const SimplicialComplex& complex) {
    std::int64_t chi = 0;
    for (Face f : complex.allFaces()) {
        chi += (f.size() % 2 == 1) ? 1 : -1;
    }
    return chi;
}

// ---------------------------------------------------------------------------
// Hochster's formula

namespace {

// Faces of Delta|_W for Delta = complexOfIdeal(I): subsets of W containing no generator.
void restrictedFaces(Face subset, const std::vector<std::vector<Face>>& generatorsThrough, std::vector<Face>& out) {
    out.clear();
    const std::vector<VertexId> vertices = subset.members();
    std::vector<std::pair<Face, std::size_t>> stack{{Face{}, 0}};
    while (!stack.empty()) {
        const auto [face, next] = stack.back();
        stack.pop_back();
        out.push_back(face);
        for (std::size_t k = next; k < vertices.size(); ++k) {
            const VertexId v = vertices[k];
            const Face grown = face.with(v);
            const auto& through = generatorsThrough[v];
            const bool blocked =
                std::any_of(through.begin(), through.end(), [grown](Face g) { return g.isSubsetOf(grown); });
            if (!blocked) {
                stack.emplace_back(grown, k + 1);
            }
        }
    }
}

}  // namespace

BettiTable hochsterBetti(const MonomialIdeal& ideal, FieldSpec field, ModuleKind kind) {
    if (ideal.isZero()) {
        throw InvalidArgument("Betti numbers of the zero ideal are not computed");
    }
    const std::size_t n = ideal.variableCount();
    if (n > kHochsterVariableCap) {
        throw CapExceeded("Hochster's formula is limited to " + std::to_string(kHochsterVariableCap) +
                          " variables; the ideal has " + std::to_string(n));
    }
    std::vector<std::vector<Face>> generatorsThrough(n);
    for (Face g : ideal.generators()) {
        g.forEach([&](VertexId v) { generatorsThrough[v].push_back(g); });
    }

    BettiTable quotient(ModuleKind::Quotient);
    quotient.add(0, 0, 1);
    std::vector<Face> faces;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        const Face w = Face::fromBits(bits);
        Face covered;
        for (Face g : ideal.generators()) {
            if (g.isSubsetOf(w)) {
                covered = covered | g;
            }
        }
        if (covered != w) {
            continue;  // Delta|_W is a cone over any uncovered vertex.
        }
        restrictedFaces(w, generatorsThrough, faces);
        const HomologyProfile h = reducedHomologyOfFaces(faces, field);
        const auto j = static_cast<int>(w.size());
        for (const auto& [k, dim] : h.dims) {
            quotient.add(j - k - 1, j, dim);
        }
    }
    return kind == ModuleKind::Quotient ? quotient : quotient.asIdeal();
}

// ---------------------------------------------------------------------------
// Cohen-Macaulay tests

namespace {

struct FacetListHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = v.size();
        for (std::uint64_t x : v) {
            h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class ReisnerChecker {
  public:
    explicit ReisnerChecker(FieldSpec field) : field_(field) {}

    // `facets` is an antichain in canonical order.
    bool cohenMacaulay(const std::vector<Face>& facets) {
        if (facets.size() <= 1) {
            return true;  // simplices, including {empty}
        }
        std::vector<std::uint64_t> key;
        key.reserve(facets.size());
        for (Face f : facets) {
            key.push_back(f.bits());
        }
        if (const auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        const bool result = evaluate(facets);
        memo_.emplace(std::move(key), result);
        return result;
    }

  private:
    bool evaluate(const std::vector<Face>& facets) {
        const std::size_t top = facets.back().size();
        // Cohen-Macaulay complexes are pure.
        if (facets.front().size() != top) {
            return false;
        }
        Face support;
        for (Face f : facets) {
            support = support | f;
        }
        // Links of nonempty faces are links inside vertex links.
        bool ok = true;
        support.forEach([&](VertexId v) {
            if (!ok) {
                return;
            }
            std::vector<Face> lk;
            for (Face f : facets) {
                if (f.contains(v)) {
                    lk.push_back(f.without(v));
                }
            }
            std::sort(lk.begin(), lk.end(), canonicalLess);
            ok = cohenMacaulay(lk);
        });
        if (!ok) {
            return false;
        }
        const HomologyProfile h = reducedHomologyOfFaces(facesOf(facets), field_);
        const int dim = static_cast<int>(top) - 1;
        return std::all_of(h.dims.begin(), h.dims.end(), [dim](const auto& entry) { return entry.first >= dim; });
    }

    FieldSpec field_;
    std::unordered_map<std::vector<std::uint64_t>, bool, FacetListHash> memo_;
};

}  // namespace

bool isCohenMacaulay(const SimplicialComplex& complex, FieldSpec field) {
    if (complex.isVoid()) {
        throw InvalidArgument("Cohen-Macaulay test on the void complex");
    }
    ReisnerChecker checker(field);
    return checker.cohenMacaulay(complex.facets());
}

bool isSequentiallyCohenMacaulay(const SimplicialComplex& complex, FieldSpec field) {
    if (complex.isVoid()) {
        throw InvalidArgument("sequentially Cohen-Macaulay test on the void complex");
    }
    ReisnerChecker checker(field);
    const int dim = *complex.dimension();
    for (int i = -1; i <= dim; ++i) {
        if (!checker.cohenMacaulay(pureSkeleton(complex, i).facets())) {
            return false;
        }
    }
    return true;
}

}  // namespace expanse
