#ifndef EXPANSE_TESTS_SUPPORT_HPP
#define EXPANSE_TESTS_SUPPORT_HPP

#include <catch_amalgamated.hpp>
#include <random>
#include <vector>

#include "expanse/decomposability.hpp"
#include "expanse/graph.hpp"
#include "expanse/homology.hpp"
#include "expanse/ideal.hpp"
#include "expanse/io.hpp"

namespace expanse::test {

using Lists = std::vector<std::vector<VertexId>>;

inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) {
        out.push_back("x" + std::to_string(k));
    }
    return out;
}

/// 1-based vertex lists, as written by hand.
inline Face face1(const std::vector<VertexId>& members) {
    Face f;
    for (VertexId v : members) {
        f = f.with(v - 1);
    }
    return f;
}

inline std::vector<Face> faces1(const Lists& lists) {
    std::vector<Face> out;
    for (const auto& l : lists) {
        out.push_back(face1(l));
    }
    return out;
}

inline SimplicialComplex complex1(std::size_t n, const Lists& facets) {
    return SimplicialComplex::fromFacets(names(n), faces1(facets));
}

inline MonomialIdeal ideal1(std::size_t n, const Lists& gens) {
    return MonomialIdeal::fromGenerators(names(n), faces1(gens));
}

inline Graph graph1(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<Graph::Edge> e;
    for (const auto& [a, b] : edges) {
        e.emplace_back(a - 1, b - 1);
    }
    return Graph::fromEdges(names(n), std::move(e));
}

inline Graph cycle(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId v = 1; v <= n; ++v) {
        e.emplace_back(v, v % n + 1);
    }
    return graph1(n, e);
}

inline Graph completeGraph(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId a = 1; a <= n; ++a) {
        for (VertexId b = a + 1; b <= n; ++b) {
            e.emplace_back(a, b);
        }
    }
    return graph1(n, e);
}

/// Every face by subset enumeration of each facet.
inline std::vector<Face> bruteFaces(const SimplicialComplex& c) {
    std::vector<Face> out;
    const std::uint64_t all = Face::firstN(c.vertexCount()).bits();
    for (std::uint64_t s = all;; s = (s - 1) & all) {
        const Face f = Face::fromBits(s);
        for (Face g : c.facets()) {
            if (f.isSubsetOf(g)) {
                out.push_back(f);
                break;
            }
        }
        if (s == 0) {
            break;
        }
    }
    return out;
}

inline bool bruteContains(const SimplicialComplex& c, Face f) {
    for (Face g : c.facets()) {
        if (f.isSubsetOf(g)) {
            return true;
        }
    }
    return false;
}

/// Maximal elements of a family, sorted canonically.
inline std::vector<Face> maximalOf(std::vector<Face> family) {
    std::vector<Face> out;
    for (Face f : family) {
        bool maximal = true;
        for (Face g : family) {
            if (f != g && f.isSubsetOf(g)) {
                maximal = false;
            }
        }
        if (maximal && std::find(out.begin(), out.end(), f) == out.end()) {
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), canonicalLess);
    return out;
}

inline std::vector<Face> minimalOf(std::vector<Face> family) {
    std::vector<Face> out;
    for (Face f : family) {
        bool minimal = true;
        for (Face g : family) {
            if (f != g && g.isSubsetOf(f)) {
                minimal = false;
            }
        }
        if (minimal && std::find(out.begin(), out.end(), f) == out.end()) {
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), canonicalLess);
    return out;
}

/// Uniform small random complex for property tests.
inline SimplicialComplex randomComplex(std::mt19937_64& rng, std::size_t maxVertices, std::size_t maxFacets) {
    const std::size_t n = 1 + rng() % maxVertices;
    const std::size_t m = 1 + rng() % maxFacets;
    std::vector<Face> f;
    for (std::size_t k = 0; k < m; ++k) {
        f.push_back(Face::fromBits(rng() & Face::firstN(n).bits()));
    }
    return SimplicialComplex::fromFacets(names(n), f);
}

inline Graph randomGraph(std::mt19937_64& rng, std::size_t maxVertices) {
    const std::size_t n = 1 + rng() % maxVertices;
    std::vector<Graph::Edge> e;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            if (rng() % 2 == 0) {
                e.emplace_back(a, b);
            }
        }
    }
    return Graph::fromEdges(names(n), e);
}

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F2 = FieldSpec::prime(2);

/// The minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex projectivePlane() {
    return complex1(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                        {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

}  // namespace expanse::test

#endif  // EXPANSE_TESTS_SUPPORT_HPP
