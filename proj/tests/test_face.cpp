#include "support.hpp"

using namespace expanse;
using namespace expanse::test;

TEST_CASE("face set operations") {
    const Face a = Face::of({0, 2, 5});
    const Face b = Face::of({2, 3});
    CHECK(a.size() == 3);
    CHECK((a | b) == Face::of({0, 2, 3, 5}));
    CHECK((a & b) == Face::of({2}));
    CHECK((a - b) == Face::of({0, 5}));
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(1));
    CHECK(Face::of({2}).isSubsetOf(a));
    CHECK(a.intersects(b));
    CHECK(a.lowest() == 0);
    CHECK(a.highest() == 5);
    CHECK(a.members() == std::vector<VertexId>{0, 2, 5});
    CHECK(Face{}.empty());
    CHECK(Face::firstN(64).size() == 64);
}

TEST_CASE("face rejects vertices beyond 64") {
    CHECK_THROWS_AS(Face::of({64}), InvalidArgument);
}

TEST_CASE("canonical order is by size, then lexicographic") {
    std::vector<Face> fs = {Face::of({1, 2}), Face::of({3}), Face::of({0, 3}), Face::of({0, 2}), Face{}};
    std::sort(fs.begin(), fs.end(), canonicalLess);
    CHECK(fs == std::vector<Face>{Face{}, Face::of({3}), Face::of({0, 2}), Face::of({0, 3}), Face::of({1, 2})});
}

TEST_CASE("maximal and minimal elements") {
    const std::vector<Face> fam = {Face::of({0, 1}), Face::of({0}), Face::of({1, 2}), Face::of({0, 1})};
    CHECK(maximalFaces(fam) == maximalOf(fam));
    CHECK(minimalFaces(fam) == minimalOf(fam));
    CHECK(isAntichain(maximalFaces(fam)));
    CHECK_FALSE(isAntichain(fam));
}
