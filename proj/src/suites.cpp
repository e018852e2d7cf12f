#include "expanse/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "expanse/decomposability.hpp"

namespace expanse {

std::uint64_t uniformInt(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) {
        throw InvalidArgument("uniformInt: empty range");
    }
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) {
        return rng();
    }
    const std::uint64_t range = span + 1;
    // Draws below `threshold` would bias the residues; reject them.
    const std::uint64_t threshold = (0 - range) % range;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw < threshold);
    return lo + draw % range;
}

bool chance(std::mt19937_64& rng, std::uint64_t numerator, std::uint64_t denominator) {
    return uniformInt(rng, 0, denominator - 1) < numerator;
}

namespace {

using Rng = std::mt19937_64;

const FieldSpec kRationals = FieldSpec::rationals();
const FieldSpec kTwo = FieldSpec::prime(2);

// ---------------------------------------------------------------------------
// Random instances

std::vector<std::string> vertexNames(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) {
        names.push_back("x" + std::to_string(k));
    }
    return names;
}

Face randomNonemptySubset(Rng& rng, std::size_t n) {
    while (true) {
        Face f;
        for (VertexId v = 0; v < n; ++v) {
            if (chance(rng, 1, 2)) {
                f = f.with(v);
            }
        }
        if (!f.empty()) {
            return f;
        }
    }
}

Face randomSubsetOfSize(Rng& rng, std::size_t n, std::size_t size) {
    std::vector<VertexId> pool(n);
    for (VertexId v = 0; v < n; ++v) {
        pool[v] = v;
    }
    Face f;
    for (std::size_t k = 0; k < size; ++k) {
        const auto pick = static_cast<std::size_t>(uniformInt(rng, k, n - 1));
        std::swap(pool[k], pool[pick]);
        f = f.with(pool[k]);
    }
    return f;
}

SimplicialComplex randomComplex(Rng& rng, std::size_t maxVertices, std::size_t maxFacets) {
    const auto n = static_cast<std::size_t>(uniformInt(rng, 1, std::max<std::size_t>(1, maxVertices)));
    const auto m = static_cast<std::size_t>(uniformInt(rng, 1, std::max<std::size_t>(1, maxFacets)));
    std::vector<Face> faces;
    for (std::size_t k = 0; k < m; ++k) {
        faces.push_back(randomNonemptySubset(rng, n));
    }
    return SimplicialComplex::fromFacets(vertexNames(n), std::move(faces));
}

SimplicialComplex randomPureComplex(Rng& rng, std::size_t maxVertices, std::size_t maxFacets) {
    const auto n = static_cast<std::size_t>(uniformInt(rng, 1, std::max<std::size_t>(1, maxVertices)));
    const auto size = static_cast<std::size_t>(uniformInt(rng, 1, n));
    const auto m = static_cast<std::size_t>(uniformInt(rng, 1, std::max<std::size_t>(1, maxFacets)));
    std::vector<Face> faces;
    for (std::size_t k = 0; k < m; ++k) {
        faces.push_back(randomSubsetOfSize(rng, n, size));
    }
    return SimplicialComplex::fromFacets(vertexNames(n), std::move(faces));
}

/// Entries in [1, maxMult], lowered (largest first) until `fits` accepts or all are 1.
ExpansionVector randomAlpha(Rng& rng, std::size_t n, unsigned maxMult,
                            const std::function<bool(const ExpansionVector&)>& fits) {
    std::vector<unsigned> entries(n);
    for (unsigned& e : entries) {
        e = static_cast<unsigned>(uniformInt(rng, 1, std::max(1U, maxMult)));
    }
    while (true) {
        ExpansionVector alpha(entries);
        if (fits(alpha)) {
            return alpha;
        }
        const auto largest = std::max_element(entries.begin(), entries.end());
        if (*largest == 1) {
            return alpha;
        }
        --*largest;
    }
}

std::function<bool(const ExpansionVector&)> totalAtMost(std::size_t cap) {
    return [cap](const ExpansionVector& a) { return a.total() <= cap; };
}

Graph randomGraph(Rng& rng, std::size_t minVertices, std::size_t maxVertices) {
    const auto n = static_cast<std::size_t>(uniformInt(rng, minVertices, std::max(minVertices, maxVertices)));
    static constexpr std::uint64_t kDensities[] = {3, 5, 7};
    const std::uint64_t p = kDensities[uniformInt(rng, 0, 2)];
    std::vector<Graph::Edge> edges;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            if (chance(rng, p, 10)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph::fromEdges(vertexNames(n), std::move(edges));
}

// A random graph on k vertices with a pendant vertex attached to each; such
// graphs are Cohen-Macaulay, so implication suites see their premise hold.
Graph randomWhiskeredGraph(Rng& rng, std::size_t maxVertices) {
    const std::size_t baseMax = std::max<std::size_t>(1, maxVertices / 2);
    const Graph base = randomGraph(rng, 1, baseMax);
    const std::size_t k = base.vertexCount();
    std::vector<Graph::Edge> edges = base.edges();
    for (VertexId v = 0; v < k; ++v) {
        edges.emplace_back(v, static_cast<VertexId>(k + v));
    }
    return Graph::fromEdges(vertexNames(2 * k), std::move(edges));
}

Json alphaJson(const ExpansionVector& alpha) {
    return Json(alpha.values());
}

// ---------------------------------------------------------------------------
// Trials

struct Outcome {
    enum class Kind { Pass, Skip, Fail };
    Kind kind = Kind::Pass;
    std::string reason;
};

using Counters = std::map<std::string, std::size_t>;

struct TrialContext {
    Rng& rng;
    const SuiteCaps& caps;
    Counters& counters;
    Json& instance;
};

Outcome pass() { return {}; }
Outcome skip(std::string why) { return {Outcome::Kind::Skip, std::move(why)}; }
Outcome fail(std::string why) { return {Outcome::Kind::Fail, std::move(why)}; }

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        os << (k > 0 ? "," : "") << v[k];
    }
    os << ")";
    return os.str();
}

Outcome dualBetti(TrialContext& ctx) {
    const SimplicialComplex complex = randomComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets);
    const ExpansionVector alpha =
        randomAlpha(ctx.rng, complex.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(ctx.caps.variableCap));
    ctx.instance["complex"] = toJson(complex);
    ctx.instance["alpha"] = alphaJson(alpha);

    const MonomialIdeal j = dualJ(complex);
    const MonomialIdeal jExpanded = dualJ(expand(complex, alpha));
    const auto before = hochsterBetti(j, kRationals, ModuleKind::Quotient).totals();
    const auto after = hochsterBetti(jExpanded, kRationals, ModuleKind::Quotient).totals();
    if (before != after) {
        return fail("total Betti numbers of S/J differ: " + join(before) + " vs " + join(after));
    }
    return pass();
}

Outcome dualCm(TrialContext& ctx) {
    const SimplicialComplex complex = randomComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets);
    const ExpansionVector alpha =
        randomAlpha(ctx.rng, complex.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(ctx.caps.variableCap));
    ctx.instance["complex"] = toJson(complex);
    ctx.instance["alpha"] = alphaJson(alpha);

    const SimplicialComplex base = complexOfIdeal(dualJ(complex));
    const SimplicialComplex expanded = complexOfIdeal(dualJ(expand(complex, alpha)));
    for (FieldSpec field : {kRationals, kTwo}) {
        const bool a = isCohenMacaulay(base, field);
        const bool b = isCohenMacaulay(expanded, field);
        if (a) {
            ++ctx.counters["cm-" + field.name()];
        }
        if (a != b) {
            return fail("S/J Cohen-Macaulay over " + field.name() + ": " + (a ? "yes" : "no") + " vs expanded " +
                        (b ? "yes" : "no"));
        }
    }
    return pass();
}

bool hasLinearResolution(const MonomialIdeal& ideal, const BettiTable& table) {
    const std::size_t degree = ideal.generators().front().size();
    const bool equigenerated = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                           [degree](Face g) { return g.size() == degree; });
    return equigenerated && table.regularity() == static_cast<int>(degree);
}

Outcome regularity(TrialContext& ctx, bool preferPure) {
    const SimplicialComplex complex = preferPure && chance(ctx.rng, 3, 4)
                                          ? randomPureComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets)
                                          : randomComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets);
    const ExpansionVector alpha =
        randomAlpha(ctx.rng, complex.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(ctx.caps.variableCap));
    ctx.instance["complex"] = toJson(complex);
    ctx.instance["alpha"] = alphaJson(alpha);

    const MonomialIdeal ideal = facetIdeal(complex);
    const MonomialIdeal expanded = facetIdeal(expand(complex, alpha));
    const BettiTable before = hochsterBetti(ideal, kRationals, ModuleKind::Ideal);
    const BettiTable after = hochsterBetti(expanded, kRationals, ModuleKind::Ideal);
    if (!preferPure && before.regularity() != after.regularity()) {
        return fail("reg(I) = " + std::to_string(before.regularity()) + " but reg(I expanded) = " +
                    std::to_string(after.regularity()));
    }
    const bool linearBefore = hasLinearResolution(ideal, before);
    const bool linearAfter = hasLinearResolution(expanded, after);
    if (linearBefore) {
        ++ctx.counters["linear"];
    }
    if (linearBefore != linearAfter) {
        return fail(std::string("linear resolution: ") + (linearBefore ? "yes" : "no") + " vs expanded " +
                    (linearAfter ? "yes" : "no"));
    }
    return pass();
}

Outcome lemmaJ(TrialContext& ctx) {
    const SimplicialComplex complex = randomComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets);
    const ExpansionVector alpha =
        randomAlpha(ctx.rng, complex.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(kMaxVertices));
    ctx.instance["complex"] = toJson(complex);
    ctx.instance["alpha"] = alphaJson(alpha);

    const MonomialIdeal substituted = expandJGenerators(dualJ(complex), alpha);
    const MonomialIdeal direct = dualJ(expand(complex, alpha));
    if (substituted != direct) {
        return fail("substituted generators " + substituted.format() + " differ from J of the expansion " +
                    direct.format());
    }
    return pass();
}

Outcome lemmaEpsilon(TrialContext& ctx) {
    const SimplicialComplex complex = randomComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets);
    const ExpansionVector beta =
        randomAlpha(ctx.rng, complex.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(kMaxVertices - 1));
    ctx.instance["complex"] = toJson(complex);
    ctx.instance["beta"] = alphaJson(beta);
    for (VertexId i = 0; i < complex.vertexCount(); ++i) {
        if (!verifyEpsilonLemma(complex, beta, i)) {
            return fail("relabelling fails to match facets for i = " + complex.vertexName(i));
        }
    }
    return pass();
}

Outcome bettiLq(TrialContext& ctx) {
    const auto n = static_cast<std::size_t>(uniformInt(ctx.rng, 2, std::max<std::size_t>(2, ctx.caps.maxVertices)));
    const auto m = static_cast<std::size_t>(uniformInt(ctx.rng, 1, std::max<std::size_t>(1, ctx.caps.maxGenerators)));
    // Half the ideals are equigenerated, where minimalisation keeps more generators.
    const bool equigenerated = chance(ctx.rng, 1, 2);
    const auto degree = static_cast<std::size_t>(uniformInt(ctx.rng, std::min<std::size_t>(2, n), std::min<std::size_t>(3, n)));
    std::vector<Face> gens;
    for (std::size_t k = 0; k < m; ++k) {
        const auto size = equigenerated
                              ? degree
                              : static_cast<std::size_t>(uniformInt(ctx.rng, 1, std::min<std::size_t>(4, n)));
        gens.push_back(randomSubsetOfSize(ctx.rng, n, size));
    }
    const MonomialIdeal ideal = MonomialIdeal::fromGenerators(vertexNames(n), std::move(gens));
    ctx.instance["ideal"] = toJson(ideal);

    const LinearQuotientsSearch search = linearQuotientsOrder(ideal, ctx.caps.maxGenerators);
    if (search.decision == Decision::Undecided) {
        return skip("linear quotients search undecided");
    }
    if (search.decision == Decision::No) {
        ++ctx.counters["no-linear-quotients"];
        return pass();
    }
    ++ctx.counters["linear-quotients"];
    const LinearQuotientsCertificate& cert = *search.certificate;
    if (!verifyLinearQuotients(cert, ideal)) {
        return fail("certificate fails colon-ideal verification");
    }
    const BettiTable formula = bettiFromLinearQuotients(cert, ideal);
    for (FieldSpec field : {kRationals, kTwo}) {
        const BettiTable oracle = hochsterBetti(ideal, field, ModuleKind::Ideal);
        if (formula != oracle) {
            return fail("binomial formula " + formula.format() + " vs Hochster over " + field.name() + " " +
                        oracle.format());
        }
    }
    return pass();
}

Outcome pdLinear(TrialContext& ctx) {
    const SimplicialComplex complex = chance(ctx.rng, 1, 2)
                                          ? randomPureComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets)
                                          : randomComplex(ctx.rng, ctx.caps.maxVertices, ctx.caps.maxFacets);
    const std::size_t n = complex.vertexCount();
    unsigned s = chance(ctx.rng, 1, 2) ? 2 : 3;
    if (s * n > ctx.caps.variableCap) {
        s = 2;
    }
    ctx.instance["complex"] = toJson(complex);
    ctx.instance["s"] = s;
    if (s * n > ctx.caps.variableCap) {
        return skip("expanded ambient exceeds the variable cap");
    }
    const MonomialIdeal ideal = facetIdeal(complex);
    const LinearQuotientsSearch search = linearQuotientsOrder(ideal);
    if (search.decision == Decision::Undecided) {
        return skip("linear quotients search undecided");
    }
    if (search.decision == Decision::No) {
        ++ctx.counters["no-linear-quotients"];
        return pass();
    }
    const LinearQuotientsCertificate& cert = *search.certificate;
    const ExpansionVector alpha = ExpansionVector::constant(n, s);
    const SimplicialComplex expanded = expand(complex, alpha);
    const MonomialIdeal expandedIdeal = facetIdeal(expanded);

    const int pdBase = hochsterBetti(ideal, kRationals, ModuleKind::Ideal).projectiveDimension();
    const int pdExpanded = hochsterBetti(expandedIdeal, kRationals, ModuleKind::Ideal).projectiveDimension();
    const int d = *complex.dimension();
    const int bound = pdBase * static_cast<int>(s) + (d + 1) * (static_cast<int>(s) - 1);
    const std::string values = "pd(I) = " + std::to_string(pdBase) + ", pd(I expanded) = " + std::to_string(pdExpanded) +
                               ", pd(I)s + (d+1)(s-1) = " + std::to_string(bound);
    if (complex.isPure()) {
        ++ctx.counters["pure"];
        if (pdExpanded != bound) {
            return fail("pure complex: " + values);
        }
    } else {
        ++ctx.counters["nonpure"];
        if (pdExpanded > bound) {
            return fail("bound violated: " + values);
        }
    }

    // The induced order on the expansion and its closed-form sets.
    const LinearQuotientsCertificate induced = expansionOrder(complex, cert, alpha);
    if (!verifyLinearQuotients(induced, expandedIdeal)) {
        return fail("induced order on the expansion fails colon-ideal verification");
    }
    std::size_t largest = 0;
    for (std::size_t t = 0; t < induced.order.size(); ++t) {
        const Face facet = expandedIdeal.generators()[induced.order[t]];
        if (expansionSetFormula(complex, cert, alpha, facet) != induced.sets[t]) {
            return fail("closed-form set differs from the colon ideal for " + expanded.format(facet));
        }
        largest = std::max(largest, induced.sets[t].size());
    }
    if (static_cast<int>(largest) != pdExpanded) {
        return fail("largest set size " + std::to_string(largest) + " differs from oracle pd " +
                    std::to_string(pdExpanded));
    }
    return pass();
}

std::size_t expandedFacetCount(const SimplicialComplex& complex, const ExpansionVector& alpha) {
    std::size_t total = 0;
    for (Face f : complex.facets()) {
        std::size_t product = 1;
        f.forEach([&](VertexId v) { product *= alpha[v]; });
        total += product;
    }
    return total;
}

Outcome graphCochordal(TrialContext& ctx) {
    const Graph graph = randomGraph(ctx.rng, 1, ctx.caps.maxGraphVertices);
    const ExpansionVector alpha =
        randomAlpha(ctx.rng, graph.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(kMaxVertices));
    ctx.instance["graph"] = toJson(graph);
    ctx.instance["alpha"] = alphaJson(alpha);

    const Graph expanded = graphExpand(graph, alpha);
    const bool before = isCoChordal(graph);
    const bool after = isCoChordal(expanded);
    if (before) {
        ++ctx.counters["co-chordal"];
    }
    if (before != after) {
        return fail(std::string("co-chordal: ") + (before ? "yes" : "no") + " vs expanded " + (after ? "yes" : "no"));
    }
    // Froberg: co-chordal iff the edge ideal has a linear resolution (reg = 2).
    auto froberg = [&](const Graph& g, const char* label) -> std::optional<Outcome> {
        if (g.edges().empty() || g.vertexCount() > ctx.caps.variableCap) {
            return std::nullopt;
        }
        const bool chordalComplement = isCoChordal(g);
        for (FieldSpec field : {kRationals, kTwo}) {
            const bool linear = hochsterBetti(edgeIdeal(g), field, ModuleKind::Ideal).regularity() == 2;
            if (linear != chordalComplement) {
                return fail(std::string(label) + ": co-chordal " + (chordalComplement ? "yes" : "no") +
                            " but edge ideal regularity over " + field.name() + (linear ? " is" : " is not") + " 2");
            }
        }
        return std::nullopt;
    };
    if (auto bad = froberg(graph, "G")) {
        return *bad;
    }
    if (auto bad = froberg(expanded, "G^alpha")) {
        return *bad;
    }
    return pass();
}

SimplicialComplex complementIndependenceComplex(const Graph& graph) {
    return independenceComplex(complementGraph(graph));
}

Outcome graphCoshellable(TrialContext& ctx) {
    const Graph graph = randomGraph(ctx.rng, 1, ctx.caps.maxGraphVertices);
    const SimplicialComplex base = complementIndependenceComplex(graph);
    const std::size_t cap = ctx.caps.shellingFacetCap;
    const ExpansionVector alpha = randomAlpha(ctx.rng, graph.vertexCount(), ctx.caps.maxMultiplicity,
                                              [&](const ExpansionVector& a) { return expandedFacetCount(base, a) <= cap; });
    ctx.instance["graph"] = toJson(graph);
    ctx.instance["alpha"] = alphaJson(alpha);

    const SimplicialComplex expanded = complementIndependenceComplex(graphExpand(graph, alpha));
    const ShellingSearch before = isShellable(base, cap);
    const ShellingSearch after = isShellable(expanded, cap);
    if (before.decision == Decision::Undecided || after.decision == Decision::Undecided) {
        return skip("shelling search exceeded the facet cap");
    }
    if (before.decision == Decision::Yes) {
        ++ctx.counters["co-shellable"];
    }
    if (before.decision != after.decision) {
        return fail(std::string("co-shellable: ") + toString(before.decision) + " vs expanded " +
                    toString(after.decision));
    }
    return pass();
}

Outcome graphCocm(TrialContext& ctx) {
    const Graph graph = randomGraph(ctx.rng, 1, ctx.caps.maxGraphVertices);
    const ExpansionVector alpha =
        randomAlpha(ctx.rng, graph.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(ctx.caps.variableCap));
    ctx.instance["graph"] = toJson(graph);
    ctx.instance["alpha"] = alphaJson(alpha);

    const SimplicialComplex base = complementIndependenceComplex(graph);
    const SimplicialComplex expanded = complementIndependenceComplex(graphExpand(graph, alpha));
    for (FieldSpec field : {kRationals, kTwo}) {
        const bool a = isCohenMacaulay(base, field);
        const bool b = isCohenMacaulay(expanded, field);
        if (a) {
            ++ctx.counters["co-cm-" + field.name()];
        }
        if (a != b) {
            return fail("co-Cohen-Macaulay over " + field.name() + ": " + (a ? "yes" : "no") + " vs expanded " +
                        (b ? "yes" : "no"));
        }
    }
    return pass();
}

Outcome graphDualVd(TrialContext& ctx) {
    Graph graph = randomGraph(ctx.rng, 2, std::max<std::size_t>(2, ctx.caps.maxGraphVertices));
    while (graph.edges().empty()) {
        graph = randomGraph(ctx.rng, 2, std::max<std::size_t>(2, ctx.caps.maxGraphVertices));
    }
    const ExpansionVector alpha =
        randomAlpha(ctx.rng, graph.vertexCount(), ctx.caps.maxMultiplicity, totalAtMost(ctx.caps.variableCap));
    ctx.instance["graph"] = toJson(graph);
    ctx.instance["alpha"] = alphaJson(alpha);

    const SimplicialComplex base = alexanderDual(independenceComplex(graph));
    const SimplicialComplex expanded = alexanderDual(independenceComplex(graphExpand(graph, alpha)));
    const Decision before = isVertexDecomposable(base, ctx.caps.decompositionBudget);
    const Decision after = isVertexDecomposable(expanded, ctx.caps.decompositionBudget);
    if (before == Decision::Undecided || after == Decision::Undecided) {
        return skip("vertex decomposability search exceeded its budget");
    }
    if (before == Decision::Yes) {
        ++ctx.counters["dual-vd"];
    }
    if (before != after) {
        return fail(std::string("dual of independence complex vertex decomposable: ") + toString(before) +
                    " vs expanded " + toString(after));
    }
    // The dual is vertex decomposable exactly when G is co-chordal.
    if ((before == Decision::Yes) != isCoChordal(graph)) {
        return fail("vertex decomposability of the dual disagrees with co-chordality");
    }
    return pass();
}

// Properties of the independence complex checked for preservation.
struct GraphProperties {
    bool cmRational = false;
    bool cmTwo = false;
    bool scmRational = false;
    bool scmTwo = false;
    Decision shellable = Decision::Undecided;
};

GraphProperties propertiesOf(const Graph& graph, const SuiteCaps& caps) {
    const SimplicialComplex complex = independenceComplex(graph);
    GraphProperties p;
    p.cmRational = isCohenMacaulay(complex, kRationals);
    p.cmTwo = isCohenMacaulay(complex, kTwo);
    p.scmRational = isSequentiallyCohenMacaulay(complex, kRationals);
    p.scmTwo = isSequentiallyCohenMacaulay(complex, kTwo);
    p.shellable = isShellable(complex, caps.shellingFacetCap).decision;
    return p;
}

// Checks P(before) => P(after) for each property; returns a failure description if violated.
std::optional<std::string> preserved(const GraphProperties& before, const GraphProperties& after, Counters& counters,
                                     bool& undecided) {
    const std::pair<const char*, std::pair<bool, bool>> flags[] = {
        {"cm-Q", {before.cmRational, after.cmRational}},
        {"cm-GF(2)", {before.cmTwo, after.cmTwo}},
        {"scm-Q", {before.scmRational, after.scmRational}},
        {"scm-GF(2)", {before.scmTwo, after.scmTwo}},
    };
    for (const auto& [name, values] : flags) {
        if (values.first) {
            ++counters[name];
            if (!values.second) {
                return std::string(name) + " lost";
            }
        }
    }
    if (before.shellable == Decision::Yes) {
        if (after.shellable == Decision::Undecided) {
            undecided = true;
        } else {
            ++counters["shellable"];
            if (after.shellable == Decision::No) {
                return std::string("shellability lost");
            }
        }
    } else if (before.shellable == Decision::Undecided) {
        undecided = true;
    }
    return std::nullopt;
}

// The relabelling of X^(1 + delta_x) onto the vertex table of duplicateVertex(G, x).
std::vector<VertexId> duplicationRelabelling(std::size_t n, const ExpansionVector& alpha) {
    std::vector<VertexId> map(alpha.total());
    for (VertexId w = 0; w < alpha.total(); ++w) {
        const auto [base, copy] = alpha.baseOf(w);
        map[w] = copy == 1 ? base : static_cast<VertexId>(n);
    }
    return map;
}

Outcome vertexDuplication(TrialContext& ctx) {
    const Graph graph = chance(ctx.rng, 1, 3) ? randomWhiskeredGraph(ctx.rng, ctx.caps.maxGraphVertices)
                                              : randomGraph(ctx.rng, 1, ctx.caps.maxGraphVertices);
    const auto x = static_cast<VertexId>(uniformInt(ctx.rng, 0, graph.vertexCount() - 1));
    ctx.instance["graph"] = toJson(graph);
    ctx.instance["vertex"] = graph.vertexNames()[x];

    const Graph duplicated = duplicateVertex(graph, x);
    const std::size_t n = graph.vertexCount();
    const ExpansionVector alpha = ExpansionVector::ones(n).plusUnit(x);
    const std::vector<VertexId> relabel = duplicationRelabelling(n, alpha);

    // duplicateVertex(G, x) is the hat expansion along 1 + delta_x.
    const Graph hat = graphExpandHat(graph, alpha);
    std::vector<Graph::Edge> mapped;
    for (const auto& [a, b] : hat.edges()) {
        mapped.emplace_back(std::min(relabel[a], relabel[b]), std::max(relabel[a], relabel[b]));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped != duplicated.edges()) {
        return fail("duplicated graph differs from the hat expansion along 1 + delta_x");
    }
    // Its independence complex is the expansion of the original one.
    const SimplicialComplex expandedComplex = expand(independenceComplex(graph), alpha);
    std::vector<Face> expandedFacets;
    for (Face f : expandedComplex.facets()) {
        Face g;
        f.forEach([&](VertexId w) { g = g.with(relabel[w]); });
        expandedFacets.push_back(g);
    }
    std::sort(expandedFacets.begin(), expandedFacets.end(), canonicalLess);
    if (expandedFacets != independenceComplex(duplicated).facets()) {
        return fail("independence complex of the duplicated graph is not the expanded complex");
    }

    bool undecided = false;
    const auto broken =
        preserved(propertiesOf(graph, ctx.caps), propertiesOf(duplicated, ctx.caps), ctx.counters, undecided);
    if (broken) {
        return fail("duplicating " + graph.vertexNames()[x] + ": " + *broken);
    }
    return undecided ? skip("shellability undecided") : pass();
}

Outcome twinRemoval(TrialContext& ctx) {
    const Graph base = chance(ctx.rng, 1, 3) ? randomWhiskeredGraph(ctx.rng, ctx.caps.maxGraphVertices - 1)
                                             : randomGraph(ctx.rng, 1, ctx.caps.maxGraphVertices - 1);
    const auto y = static_cast<VertexId>(uniformInt(ctx.rng, 0, base.vertexCount() - 1));
    const Graph graph = duplicateVertex(base, y);
    ctx.instance["graph"] = toJson(graph);

    const GraphProperties whole = propertiesOf(graph, ctx.caps);
    bool undecided = false;
    for (const auto& [a, b] : closedTwins(graph)) {
        ++ctx.counters["twin-pairs"];
        for (VertexId removed : {a, b}) {
            const Graph smaller = removeVertex(graph, removed);
            const auto broken = preserved(whole, propertiesOf(smaller, ctx.caps), ctx.counters, undecided);
            if (broken) {
                return fail("removing " + graph.vertexNames()[removed] + " (twin pair " + graph.vertexNames()[a] + ", " +
                            graph.vertexNames()[b] + "): " + *broken);
            }
        }
    }
    return undecided ? skip("shellability undecided") : pass();
}

using TrialFn = std::function<Outcome(TrialContext&)>;

const std::vector<std::pair<std::string, TrialFn>>& registry() {
    static const std::vector<std::pair<std::string, TrialFn>> suites = {
        {"dual-betti", dualBetti},
        {"dual-cm", dualCm},
        {"regularity", [](TrialContext& c) { return regularity(c, false); }},
        {"linear-resolution", [](TrialContext& c) { return regularity(c, true); }},
        {"lemma-J", lemmaJ},
        {"lemma-epsilon", lemmaEpsilon},
        {"betti-lq", bettiLq},
        {"pd-linear", pdLinear},
        {"graph-cochordal", graphCochordal},
        {"graph-coshellable", graphCoshellable},
        {"graph-cocm", graphCocm},
        {"graph-dual-vd", graphDualVd},
        {"vertex-duplication", vertexDuplication},
        {"twin-removal", twinRemoval},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return names;
}

SuiteReport verifySuite(const std::string& name, std::size_t trials, std::uint64_t seed, const SuiteCaps& caps) {
    const auto& suites = registry();
    const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& e) { return e.first == name; });
    if (it == suites.end()) {
        throw InvalidArgument("unknown suite '" + name + "'");
    }
    SuiteReport report;
    report.suite = name;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trialSeed = seed + t;
        Rng rng(trialSeed);
        Json instance = Json::object();
        TrialContext ctx{rng, caps, report.counters, instance};
        Outcome outcome;
        try {
            outcome = it->second(ctx);
        } catch (const CapExceeded& e) {
            outcome = skip(e.what());
        }
        switch (outcome.kind) {
            case Outcome::Kind::Pass: ++report.passes; break;
            case Outcome::Kind::Skip: ++report.skipped; break;
            case Outcome::Kind::Fail: report.failures.push_back({trialSeed, outcome.reason, instance}); break;
        }
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const SuiteFailure& a, const SuiteFailure& b) { return a.seed < b.seed; });
    return report;
}

std::string formatReport(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << ": trials=" << report.trials << " passes=" << report.passes
       << " skipped=" << report.skipped << " failures=" << report.failures.size() << "\n";
    for (const auto& [key, count] : report.counters) {
        os << "  " << key << ": " << count << "\n";
    }
    for (const SuiteFailure& f : report.failures) {
        os << "  FAIL seed=" << f.seed << ": " << f.reason << "\n";
        os << "    instance: " << f.instance.dump() << "\n";
    }
    return os.str();
}

Json toJson(const SuiteReport& report) {
    Json out;
    out["suite"] = report.suite;
    out["trials"] = report.trials;
    out["passes"] = report.passes;
    out["skipped"] = report.skipped;
    out["failures"] = Json::array();
    for (const SuiteFailure& f : report.failures) {
        out["failures"].push_back({{"seed", f.seed}, {"reason", f.reason}, {"instance", f.instance}});
    }
    out["counters"] = Json::object();
    for (const auto& [key, count] : report.counters) {
        out["counters"][key] = count;
    }
    return out;
}

}  // namespace expanse
