// Acceptance criteria: one PASS/FAIL line each. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "expanse/suites.hpp"

using namespace expanse;

namespace {

constexpr std::size_t kTrials = 200;
constexpr std::uint64_t kSeed = 1;

struct Result {
    bool pass = false;
    std::string detail;
};

std::string summarize(const SuiteReport& r) {
    std::ostringstream os;
    os << r.suite << " " << r.passes << "/" << r.trials << " passed, " << r.skipped << " skipped, "
       << r.failures.size() << " failed";
    return os.str();
}

Result suites(const std::vector<std::string>& names, const SuiteCaps& caps, std::size_t trials = kTrials) {
    Result result{true, ""};
    for (const std::string& name : names) {
        const SuiteReport r = verifySuite(name, trials, kSeed, caps);
        result.pass = result.pass && r.ok() && r.passes > 0;
        result.detail += (result.detail.empty() ? "" : "; ") + summarize(r);
        if (!r.ok()) {
            std::cerr << formatReport(r);
        }
    }
    return result;
}

SimplicialComplex complexOf(std::size_t n, const std::vector<std::vector<VertexId>>& facets) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) {
        names.push_back("x" + std::to_string(k));
    }
    std::vector<Face> faces;
    for (const auto& f : facets) {
        Face face;
        for (VertexId v : f) {
            face = face.with(v - 1);
        }
        faces.push_back(face);
    }
    return SimplicialComplex::fromFacets(names, faces);
}

Result engineRegressions() {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f2 = FieldSpec::prime(2);
    std::vector<std::string> problems;

    const auto triangle = complexOf(3, {{1, 2}, {2, 3}, {1, 3}});
    const HomologyProfile h = reducedHomology(triangle, q);
    if (!(h[1] == 1 && h.dims.size() == 1)) {
        problems.push_back("triangle boundary homology " + h.format());
    }

    const auto rp2 = complexOf(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                   {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
    if (!isCohenMacaulay(rp2, q) || isCohenMacaulay(rp2, f2)) {
        problems.push_back("RP2 Cohen-Macaulay flags");
    }

    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::string> names;
        std::vector<Face> gens;
        for (VertexId v = 0; v < n; ++v) {
            names.push_back("x" + std::to_string(v + 1));
            gens.push_back(Face::of({v}));
        }
        const BettiTable t = hochsterBetti(MonomialIdeal::fromGenerators(names, gens), q, ModuleKind::Ideal);
        std::uint64_t binom = 1;  // C(n, i + 1), updated incrementally
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < n; ++i) {
            binom = binom * (n - i) / (i + 1);
            if (t.at(static_cast<int>(i), static_cast<int>(i + 1)) != binom) {
                problems.push_back("Koszul n=" + std::to_string(n) + " i=" + std::to_string(i));
            }
            ++nonzero;
        }
        if (t.entries().size() != nonzero) {
            problems.push_back("Koszul n=" + std::to_string(n) + " has extra entries");
        }
    }

    Result r{problems.empty(), "triangle H1 = " + std::to_string(h[1]) + ", RP2 CM over Q only, Koszul n <= 5"};
    for (const auto& p : problems) {
        r.detail += "; " + p;
    }
    return r;
}

}  // namespace

int main() {
    SuiteCaps corpus;  // criteria 1-3: <= 6 vertices, alpha entries <= 2
    corpus.maxVertices = 6;
    corpus.maxMultiplicity = 2;

    SuiteCaps defaults;

    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"1 dual Betti invariance", [&] { return suites({"dual-betti"}, corpus); }},
        {"2 dual Cohen-Macaulay equivalence", [&] { return suites({"dual-cm"}, corpus); }},
        {"3 regularity invariance and linear resolution", [&] {
             return suites({"regularity", "linear-resolution"}, corpus);
         }},
        {"4 generators of J under expansion", [&] { return suites({"lemma-J"}, defaults); }},
        {"5 relabelling of iterated expansions", [&] { return suites({"lemma-epsilon"}, defaults); }},
        {"6 Betti numbers from linear quotients", [&] { return suites({"betti-lq"}, defaults); }},
        {"7 projective dimension of expanded facet ideals", [&] { return suites({"pd-linear"}, defaults); }},
        {"8 co-chordality and Froberg cross-check", [&] { return suites({"graph-cochordal"}, defaults); }},
        {"9 co-shellable, co-Cohen-Macaulay, dual vertex decomposable", [&] {
             return suites({"graph-coshellable", "graph-cocm", "graph-dual-vd"}, defaults);
         }},
        {"10 vertex duplication and twin removal", [&] {
             return suites({"vertex-duplication", "twin-removal"}, defaults);
         }},
        {"11 engine regressions", engineRegressions},
    };

    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", name.c_str(), r.detail.c_str(),
                    seconds);
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
