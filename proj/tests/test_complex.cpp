#include "support.hpp"

using namespace expanse;
using namespace expanse::test;

TEST_CASE("fromFacets prunes and canonicalises") {
    const auto c = SimplicialComplex::fromFacets({"x1", "x2"}, {Face::of({0, 1}), Face::of({0})});
    CHECK(c.facets() == std::vector<Face>{Face::of({0, 1})});

    const auto v = SimplicialComplex::fromFacets({"x1"}, {});
    CHECK(v.isVoid());
    CHECK_FALSE(v.dimension().has_value());

    const auto irr = SimplicialComplex::fromFacets({"x1"}, {Face{}});
    CHECK(irr.isIrrelevant());
    CHECK(irr.dimension() == -1);

    CHECK(complex1(3, {{2, 3}, {1, 2}}) == complex1(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("fromFacets rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::fromFacets({"a", "a"}, {}), InvalidArgument);
    CHECK_THROWS_AS(SimplicialComplex::fromFacets({"a"}, {Face::of({1})}), InvalidArgument);
}

TEST_CASE("dimension and purity") {
    const auto c = complex1(3, {{1, 2}, {3}});
    CHECK(c.dimension() == 1);
    CHECK_FALSE(c.isPure());
    CHECK(complex1(3, {{1, 2}, {2, 3}}).isPure());
}

TEST_CASE("expansion vector") {
    CHECK_THROWS_AS(ExpansionVector({1, 0}), InvalidArgument);
    const ExpansionVector a({2, 1, 3});
    CHECK(a.total() == 6);
    CHECK(a.expandedIndex(2, 1) == 3);
    CHECK(a.baseOf(5) == std::pair<VertexId, unsigned>{2, 3});
    CHECK(a.copiesOf(0) == Face::of({0, 1}));
    CHECK(a.expandedNames({"x1", "x2", "x3"}) ==
          std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x3_1", "x3_2", "x3_3"});
    CHECK(a.plusUnit(1).values() == std::vector<unsigned>{2, 2, 3});
}

TEST_CASE("expand: worked examples") {
    const auto c = complex1(3, {{1, 2}, {2, 3}});
    const auto e = expand(c, ExpansionVector({2, 1, 1}));
    CHECK(e.vertexNames() == std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x3_1"});
    // <{x1_1,x2_1},{x1_2,x2_1},{x2_1,x3_1}>
    CHECK(e.facets() == std::vector<Face>{Face::of({0, 2}), Face::of({1, 2}), Face::of({2, 3})});

    const auto point = expand(complex1(1, {{1}}), ExpansionVector({3}));
    CHECK(point.facets() == std::vector<Face>{Face::of({0}), Face::of({1}), Face::of({2})});
}

TEST_CASE("expand along ones renames vertices only") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto c = randomComplex(rng, 6, 6);
        const auto e = expand(c, ExpansionVector::ones(c.vertexCount()));
        CHECK(e.facets() == c.facets());
        for (std::size_t k = 0; k < c.vertexCount(); ++k) {
            CHECK(e.vertexNames()[k] == c.vertexNames()[k] + "_1");
        }
    }
}

TEST_CASE("expand facet count is a sum of products") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 50; ++t) {
        const auto c = randomComplex(rng, 5, 5);
        std::vector<unsigned> m(c.vertexCount());
        for (auto& x : m) {
            x = 1 + rng() % 3;
        }
        const ExpansionVector a(m);
        std::size_t expected = 0;
        for (Face f : c.facets()) {
            std::size_t p = 1;
            f.forEach([&](VertexId v) { p *= m[v]; });
            expected += p;
        }
        const auto e = expand(c, a);
        CHECK(e.facets().size() == expected);
        for (Face f : e.facets()) {
            CHECK(baseProjection(f, a).size() == f.size());
        }
    }
}

TEST_CASE("expand of degenerate complexes") {
    CHECK(expand(SimplicialComplex::voidComplex(names(2)), ExpansionVector({2, 1})).isVoid());
    CHECK(expand(SimplicialComplex::irrelevant(names(2)), ExpansionVector({2, 1})).isIrrelevant());
    CHECK_THROWS_AS(expand(complex1(2, {{1}}), ExpansionVector({2})), InvalidArgument);
}

TEST_CASE("complement") {
    CHECK(complement(complex1(3, {{1, 2}, {2, 3}})) == complex1(3, {{3}, {1}}));
    CHECK(complement(SimplicialComplex::simplex(names(3))).isIrrelevant());
    CHECK(complement(complex1(2, {{1}, {2}})) == complex1(2, {{2}, {1}}));
    CHECK_THROWS_AS(complement(SimplicialComplex::voidComplex(names(2))), InvalidArgument);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const auto c = randomComplex(rng, 6, 5);
        if (c.support() == c.allVertices()) {
            CHECK(complement(complement(c)) == c);
        }
    }
}

TEST_CASE("Alexander dual: examples and brute force") {
    CHECK(alexanderDual(complex1(3, {{1, 2}, {2, 3}})) == complex1(3, {{2}}));
    CHECK(alexanderDual(SimplicialComplex::simplex(names(3))).isVoid());

    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const auto c = randomComplex(rng, 6, 5);
        const Face all = c.allVertices();
        std::vector<Face> dualFaces;
        for (std::uint64_t s = 0; s <= all.bits(); ++s) {
            const Face f = Face::fromBits(s);
            if (!bruteContains(c, f)) {
                dualFaces.push_back(all - f);
            }
        }
        const auto d = alexanderDual(c);
        CHECK(d.facets() == maximalOf(dualFaces));
        if (!d.isVoid()) {
            CHECK(alexanderDual(d) == c);
        }
    }
}

TEST_CASE("minimal non-faces by brute force") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 100; ++t) {
        const auto c = randomComplex(rng, 6, 5);
        std::vector<Face> non;
        for (std::uint64_t s = 0; s <= c.allVertices().bits(); ++s) {
            if (!bruteContains(c, Face::fromBits(s))) {
                non.push_back(Face::fromBits(s));
            }
        }
        CHECK(minimalNonFaces(c) == minimalOf(non));
    }
}

TEST_CASE("link, deletion, restriction") {
    const auto c = complex1(3, {{1, 2}, {2, 3}});
    CHECK(link(c, face1({2})) == complex1(3, {{1}, {3}}));
    CHECK(link(c, Face{}) == c);
    CHECK(restriction(c, face1({1, 3})) == complex1(3, {{1}, {3}}));
    CHECK(deletion(c, 1) == complex1(3, {{1}, {3}}));

    std::mt19937_64 rng(16);
    for (int t = 0; t < 50; ++t) {
        const auto k = randomComplex(rng, 6, 5);
        for (Face f : bruteFaces(k)) {
            std::vector<Face> lk;
            for (Face g : bruteFaces(k)) {
                if (!g.intersects(f) && bruteContains(k, g | f)) {
                    lk.push_back(g);
                }
            }
            const auto l = link(k, f);
            CHECK(l.facets() == maximalOf(lk));
            CHECK(isAntichain(l.facets()));
        }
    }
}

TEST_CASE("pure skeleton") {
    const auto c = complex1(3, {{1, 2}, {3}});
    CHECK(pureSkeleton(c, 0) == complex1(3, {{1}, {2}, {3}}));
    CHECK(pureSkeleton(c, 1) == complex1(3, {{1, 2}}));
    const auto p = complex1(4, {{1, 2, 3}, {2, 3, 4}});
    CHECK(pureSkeleton(p, 2) == p);
}

TEST_CASE("iterated expansion relabelling: examples") {
    CHECK(verifyEpsilonLemma(complex1(2, {{1, 2}}), ExpansionVector({1, 1}), 0));
    CHECK(verifyEpsilonLemma(complex1(2, {{1, 2}}), ExpansionVector({1, 1}), 1));
    CHECK(verifyEpsilonLemma(complex1(1, {{1}}), ExpansionVector({2}), 0));
}

TEST_CASE("iterated expansion relabelling: random instances") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const auto c = randomComplex(rng, 5, 5);
        std::vector<unsigned> b(c.vertexCount());
        for (auto& x : b) {
            x = 1 + rng() % 2;
        }
        for (VertexId i = 0; i < c.vertexCount(); ++i) {
            CHECK(verifyEpsilonLemma(c, ExpansionVector(b), i));
        }
    }
}
