#include "expanse/graph.hpp"

#include <algorithm>
#include <functional>

namespace expanse {

Graph Graph::fromEdges(std::vector<std::string> names, std::vector<Edge> edges) {
    validateNames(names);
    const std::size_t n = names.size();
    for (Edge& e : edges) {
        if (e.first >= n || e.second >= n) {
            throw InvalidArgument("edge endpoint out of range");
        }
        if (e.first == e.second) {
            throw InvalidArgument("loop at vertex '" + names[e.first] + "'");
        }
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.names_ = std::move(names);
    g.edges_ = std::move(edges);
    g.adjacency_.assign(n, Face{});
    for (const auto& [a, b] : g.edges_) {
        g.adjacency_[a] = g.adjacency_[a].with(b);
        g.adjacency_[b] = g.adjacency_[b].with(a);
    }
    return g;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    return a < adjacency_.size() && adjacency_[a].contains(b);
}

Face Graph::neighbours(VertexId x) const {
    if (x >= adjacency_.size()) {
        throw InvalidArgument("vertex index " + std::to_string(x) + " out of range");
    }
    return adjacency_[x];
}

std::string Graph::format() const {
    std::string s = "G(" + std::to_string(names_.size()) + " vertices; ";
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        s += (k > 0 ? " " : "") + names_[edges_[k].first] + "-" + names_[edges_[k].second];
    }
    return s + ")";
}

SimplicialComplex independenceComplex(const Graph& graph) {
    const std::size_t n = graph.vertexCount();
    const Face all = Face::firstN(n);
    std::vector<Face> nonAdjacent(n);
    for (VertexId v = 0; v < n; ++v) {
        nonAdjacent[v] = (all - graph.neighbours(v)).without(v);
    }
    // Bron-Kerbosch with pivoting on the complement graph.
    std::vector<Face> maximal;
    std::function<void(Face, Face, Face)> extend = [&](Face current, Face candidates, Face excluded) {
        if (candidates.empty() && excluded.empty()) {
            maximal.push_back(current);
            return;
        }
        const Face pool = candidates | excluded;
        VertexId pivot = pool.lowest();
        std::size_t best = 0;
        pool.forEach([&](VertexId u) {
            const std::size_t c = (candidates & nonAdjacent[u]).size();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        (candidates - nonAdjacent[pivot]).forEach([&](VertexId v) {
            extend(current.with(v), candidates & nonAdjacent[v], excluded & nonAdjacent[v]);
            candidates = candidates.without(v);
            excluded = excluded.with(v);
        });
    };
    extend(Face{}, all, Face{});
    return SimplicialComplex::fromFacets(graph.vertexNames(), std::move(maximal));
}

namespace {

Graph expandEdges(const Graph& graph, const ExpansionVector& alpha, bool joinCopies) {
    alpha.requireSize(graph.vertexCount());
    std::vector<std::string> names = alpha.expandedNames(graph.vertexNames());
    if (names.size() > kMaxVertices) {
        throw InvalidArgument("expanded vertex table exceeds 64 vertices");
    }
    std::vector<Graph::Edge> edges;
    for (const auto& [a, b] : graph.edges()) {
        for (unsigned r = 1; r <= alpha[a]; ++r) {
            for (unsigned s = 1; s <= alpha[b]; ++s) {
                edges.emplace_back(alpha.expandedIndex(a, r), alpha.expandedIndex(b, s));
            }
        }
    }
    if (joinCopies) {
        for (VertexId i = 0; i < graph.vertexCount(); ++i) {
            for (unsigned r = 1; r <= alpha[i]; ++r) {
                for (unsigned s = r + 1; s <= alpha[i]; ++s) {
                    edges.emplace_back(alpha.expandedIndex(i, r), alpha.expandedIndex(i, s));
                }
            }
        }
    }
    return Graph::fromEdges(std::move(names), std::move(edges));
}

}  // namespace

Graph graphExpand(const Graph& graph, const ExpansionVector& alpha) {
    return expandEdges(graph, alpha, false);
}

Graph graphExpandHat(const Graph& graph, const ExpansionVector& alpha) {
    return expandEdges(graph, alpha, true);
}

Graph complementGraph(const Graph& graph) {
    std::vector<Graph::Edge> edges;
    const auto n = static_cast<VertexId>(graph.vertexCount());
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            if (!graph.adjacent(a, b)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph::fromEdges(graph.vertexNames(), std::move(edges));
}

std::vector<VertexId> maximumCardinalitySearch(const Graph& graph) {
    const std::size_t n = graph.vertexCount();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<VertexId> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        VertexId pick = 0;
        bool found = false;
        for (VertexId v = 0; v < n; ++v) {
            if (!numbered[v] && (!found || weight[v] > weight[pick])) {
                pick = v;
                found = true;
            }
        }
        numbered[pick] = true;
        visit.push_back(pick);
        graph.neighbours(pick).forEach([&](VertexId u) { ++weight[u]; });
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

bool isPerfectEliminationOrder(const Graph& graph, const std::vector<VertexId>& order) {
    const std::size_t n = graph.vertexCount();
    if (order.size() != n) {
        return false;
    }
    Face later = Face::firstN(n);
    for (VertexId v : order) {
        if (!later.contains(v)) {
            return false;  // repeated vertex
        }
        later = later.without(v);
        const Face forward = graph.neighbours(v) & later;
        bool clique = true;
        forward.forEach([&](VertexId u) { clique = clique && (forward.without(u)).isSubsetOf(graph.neighbours(u)); });
        if (!clique) {
            return false;
        }
    }
    return true;
}

bool isChordal(const Graph& graph) {
    return isPerfectEliminationOrder(graph, maximumCardinalitySearch(graph));
}

bool isCoChordal(const Graph& graph) {
    return isChordal(complementGraph(graph));
}

Graph duplicateVertex(const Graph& graph, VertexId x) {
    if (x >= graph.vertexCount()) {
        throw InvalidArgument("duplicateVertex: vertex index out of range");
    }
    std::vector<std::string> names = graph.vertexNames();
    std::string fresh = names[x] + "'";
    while (std::find(names.begin(), names.end(), fresh) != names.end()) {
        fresh += "'";
    }
    names.push_back(fresh);
    const auto copy = static_cast<VertexId>(names.size() - 1);
    std::vector<Graph::Edge> edges = graph.edges();
    graph.closedNeighbourhood(x).forEach([&](VertexId u) { edges.emplace_back(u, copy); });
    return Graph::fromEdges(std::move(names), std::move(edges));
}

std::vector<Graph::Edge> closedTwins(const Graph& graph) {
    std::vector<Graph::Edge> twins;
    const auto n = static_cast<VertexId>(graph.vertexCount());
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            if (graph.closedNeighbourhood(a) == graph.closedNeighbourhood(b)) {
                twins.emplace_back(a, b);
            }
        }
    }
    return twins;
}

Graph removeVertex(const Graph& graph, VertexId x) {
    if (x >= graph.vertexCount()) {
        throw InvalidArgument("removeVertex: vertex index out of range");
    }
    std::vector<std::string> names = graph.vertexNames();
    names.erase(names.begin() + x);
    auto shift = [x](VertexId v) { return v > x ? v - 1 : v; };
    std::vector<Graph::Edge> edges;
    for (const auto& [a, b] : graph.edges()) {
        if (a != x && b != x) {
            edges.emplace_back(shift(a), shift(b));
        }
    }
    return Graph::fromEdges(std::move(names), std::move(edges));
}

MonomialIdeal edgeIdeal(const Graph& graph) {
    if (graph.edges().empty()) {
        throw InvalidArgument("edge ideal of an edgeless graph is the zero ideal");
    }
    std::vector<Face> gens;
    for (const auto& [a, b] : graph.edges()) {
        gens.push_back(Face::of({a, b}));
    }
    return MonomialIdeal::fromGenerators(graph.vertexNames(), std::move(gens));
}

}  // namespace expanse
