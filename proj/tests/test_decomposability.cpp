#include <numeric>

#include "support.hpp"

using namespace expanse;
using namespace expanse::test;

namespace {

// Shellability by trying every facet order.
bool bruteShellable(const SimplicialComplex& c) {
    std::vector<Face> order = c.facets();
    std::sort(order.begin(), order.end(), [](Face a, Face b) { return a.bits() < b.bits(); });
    do {
        if (isShellingOrder(order)) {
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end(), [](Face a, Face b) { return a.bits() < b.bits(); }));
    return false;
}

}  // namespace

TEST_CASE("shellability: examples") {
    const auto path = complex1(3, {{1, 2}, {2, 3}});
    const auto s = isShellable(path);
    CHECK(s.decision == Decision::Yes);
    CHECK(isShellingOrder(s.order));
    CHECK(isShellable(complex1(4, {{1, 2}, {3, 4}})).decision == Decision::No);
    CHECK(isShellable(SimplicialComplex::simplex(names(4))).decision == Decision::Yes);
    CHECK(isShellable(complex1(3, {{1, 2}, {3}})).decision == Decision::Yes);
    // Nonpure: the vertex must come last.
    CHECK_FALSE(isShellingOrder(faces1({{3}, {1, 2}})));
    CHECK(isShellingOrder(faces1({{1, 2}, {3}})));
    CHECK(isShellable(projectivePlane()).decision == Decision::No);
    CHECK(isShellable(complex1(11, {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}}), 10).decision ==
          Decision::Undecided);
}

TEST_CASE("shellability agrees with exhaustive search") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 150; ++t) {
        const auto c = randomComplex(rng, 6, 5);
        const auto s = isShellable(c);
        REQUIRE(s.decision != Decision::Undecided);
        CHECK((s.decision == Decision::Yes) == bruteShellable(c));
        if (s.decision == Decision::Yes) {
            CHECK(isShellingOrder(s.order));
            CHECK(isSequentiallyCohenMacaulay(c, Q));
            CHECK(isSequentiallyCohenMacaulay(c, F2));
        }
    }
}

TEST_CASE("vertex decomposability: examples") {
    CHECK(isVertexDecomposable(SimplicialComplex::simplex(names(3))) == Decision::Yes);
    CHECK(isVertexDecomposable(SimplicialComplex::irrelevant(names(2))) == Decision::Yes);
    CHECK(isVertexDecomposable(complex1(3, {{1, 2}, {2, 3}, {1, 3}})) == Decision::Yes);
    CHECK(isVertexDecomposable(complex1(4, {{1, 2}, {3, 4}})) == Decision::No);
    CHECK(isVertexDecomposable(complex1(3, {{1, 2}, {3}})) == Decision::Yes);
    CHECK(isVertexDecomposable(projectivePlane()) == Decision::No);
    CHECK_THROWS_AS(isVertexDecomposable(SimplicialComplex::voidComplex(names(1))), InvalidArgument);
}

TEST_CASE("vertex decomposable implies shellable") {
    std::mt19937_64 rng(52);
    int vd = 0;
    for (int t = 0; t < 200; ++t) {
        const auto c = randomComplex(rng, 6, 5);
        const Decision d = isVertexDecomposable(c);
        REQUIRE(d != Decision::Undecided);
        if (d == Decision::Yes) {
            ++vd;
            CHECK(isShellable(c).decision == Decision::Yes);
        }
    }
    CHECK(vd > 20);
}
