#include "expanse/decomposability.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace expanse {

namespace {

// Whether `next` can follow the facets in `placed`.
bool extendsShelling(std::span<const Face> placed, Face next) {
    if (placed.empty()) {
        return true;
    }
    const std::size_t codimOne = next.size() - 1;
    std::vector<Face> ridges;
    for (Face f : placed) {
        const Face meet = f & next;
        if (meet.size() == codimOne && next.size() > 0) {
            ridges.push_back(meet);
        }
    }
    return std::all_of(placed.begin(), placed.end(), [&](Face f) {
        const Face meet = f & next;
        return std::any_of(ridges.begin(), ridges.end(), [meet](Face r) { return meet.isSubsetOf(r); });
    });
}

}  // namespace

bool isShellingOrder(std::span<const Face> order) {
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (!extendsShelling(order.subspan(0, k), order[k])) {
            return false;
        }
    }
    return true;
}

ShellingSearch isShellable(const SimplicialComplex& complex, std::size_t facetCap) {
    if (complex.isVoid()) {
        throw InvalidArgument("shellability of the void complex is undefined");
    }
    const std::vector<Face>& facets = complex.facets();
    const std::size_t t = facets.size();
    if (t > facetCap || t > 63) {
        return {Decision::Undecided, {}};
    }

    // Extendability depends only on which facets are placed, not their order.
    std::unordered_set<std::uint64_t> dead;
    std::vector<Face> placed;

    std::function<bool(std::uint64_t)> search = [&](std::uint64_t used) -> bool {
        if (placed.size() == t) {
            return true;
        }
        if (dead.contains(used)) {
            return false;
        }
        for (std::size_t k = 0; k < t; ++k) {
            if (((used >> k) & 1U) != 0 || !extendsShelling(placed, facets[k])) {
                continue;
            }
            placed.push_back(facets[k]);
            if (search(used | (std::uint64_t{1} << k))) {
                return true;
            }
            placed.pop_back();
        }
        dead.insert(used);
        return false;
    };

    if (search(0)) {
        return {Decision::Yes, placed};
    }
    return {Decision::No, {}};
}

namespace {

struct BudgetExhausted {};

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = v.size();
        for (std::uint64_t x : v) {
            h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class VertexDecomposer {
  public:
    explicit VertexDecomposer(std::size_t budget) : budget_(budget) {}

    bool decomposable(const std::vector<Face>& facets) {
        if (facets.size() <= 1) {
            return true;
        }
        std::vector<std::uint64_t> key;
        key.reserve(facets.size());
        for (Face f : facets) {
            key.push_back(f.bits());
        }
        if (const auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        if (memo_.size() >= budget_) {
            throw BudgetExhausted{};
        }
        const bool result = evaluate(facets);
        memo_.emplace(std::move(key), result);
        return result;
    }

  private:
    bool evaluate(const std::vector<Face>& facets) {
        Face support;
        for (Face f : facets) {
            support = support | f;
        }
        for (VertexId v : support.members()) {
            std::vector<Face> lk;
            std::vector<Face> del;
            for (Face f : facets) {
                if (f.contains(v)) {
                    lk.push_back(f.without(v));
                }
                del.push_back(f.without(v));
            }
            std::sort(lk.begin(), lk.end(), canonicalLess);
            del = maximalFaces(std::move(del));
            const bool shedding = std::none_of(lk.begin(), lk.end(), [&del](Face g) {
                return std::find(del.begin(), del.end(), g) != del.end();
            });
            if (shedding && decomposable(lk) && decomposable(del)) {
                return true;
            }
        }
        return false;
    }

    std::size_t budget_;
    std::unordered_map<std::vector<std::uint64_t>, bool, KeyHash> memo_;
};

}  // namespace

Decision isVertexDecomposable(const SimplicialComplex& complex, std::size_t stateBudget) {
    if (complex.isVoid()) {
        throw InvalidArgument("vertex decomposability of the void complex is undefined");
    }
    VertexDecomposer decomposer(stateBudget);
    try {
        return decomposer.decomposable(complex.facets()) ? Decision::Yes : Decision::No;
    } catch (const BudgetExhausted&) {
        return Decision::Undecided;
    }
}

}  // namespace expanse
