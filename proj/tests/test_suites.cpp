#include "expanse/suites.hpp"

#include "support.hpp"

using namespace expanse;
using namespace expanse::test;

TEST_CASE("uniform sampling stays in range") {
    std::mt19937_64 rng(81);
    std::vector<int> counts(5, 0);
    for (int t = 0; t < 5000; ++t) {
        const auto v = uniformInt(rng, 3, 7);
        REQUIRE(v >= 3);
        REQUIRE(v <= 7);
        ++counts[v - 3];
    }
    for (int c : counts) {
        CHECK(c > 800);
    }
    CHECK(uniformInt(rng, 9, 9) == 9);
    CHECK_THROWS_AS(uniformInt(rng, 2, 1), InvalidArgument);
}

TEST_CASE("every suite passes a short run") {
    for (const std::string& name : suiteNames()) {
        const SuiteReport r = verifySuite(name, 10, 7);
        INFO(formatReport(r));
        CHECK(r.ok());
        CHECK(r.passes + r.skipped + r.failures.size() == r.trials);
    }
}

TEST_CASE("suite reports are deterministic") {
    SuiteCaps caps;
    caps.maxVertices = 5;
    const auto a = verifySuite("dual-cm", 15, 3, caps);
    const auto b = verifySuite("dual-cm", 15, 3, caps);
    CHECK(formatReport(a) == formatReport(b));
    CHECK(toJson(a).dump() == toJson(b).dump());
}

TEST_CASE("unknown suite") {
    CHECK_THROWS_AS(verifySuite("no-such-suite", 1, 1), InvalidArgument);
}

TEST_CASE("suite examples") {
    // dual-betti on <{x1,x2},{x2,x3}> with (2,1,1): both sides (1,2,1).
    const auto c = complex1(3, {{1, 2}, {2, 3}});
    const ExpansionVector a({2, 1, 1});
    CHECK(hochsterBetti(dualJ(c), Q, ModuleKind::Quotient).totals() == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(hochsterBetti(dualJ(expand(c, a)), Q, ModuleKind::Quotient).totals() ==
          std::vector<std::uint64_t>{1, 2, 1});

    // pd-linear on the same complex with s = 2: 1*2 + 2*1 = 4.
    const auto e = expand(c, ExpansionVector::constant(3, 2));
    CHECK(hochsterBetti(facetIdeal(e), Q, ModuleKind::Ideal).projectiveDimension() == 4);

    // twin-removal on K3.
    const auto k3 = completeGraph(3);
    CHECK(isCohenMacaulay(independenceComplex(k3), Q));
    CHECK(isCohenMacaulay(independenceComplex(removeVertex(k3, 0)), Q));
}
