#ifndef EXPANSE_GRAPH_HPP
#define EXPANSE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "expanse/complex.hpp"
#include "expanse/ideal.hpp"

namespace expanse {

/// A simple undirected graph on a named vertex table.
class Graph {
  public:
    using Edge = std::pair<VertexId, VertexId>;

    Graph() = default;

    /// Normalises each edge to (smaller, larger) and sorts. Throws on loops or bad indices.
    static Graph fromEdges(std::vector<std::string> names, std::vector<Edge> edges);

    const std::vector<std::string>& vertexNames() const { return names_; }
    std::size_t vertexCount() const { return names_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(VertexId a, VertexId b) const;
    /// N(x).
    Face neighbours(VertexId x) const;
    /// N[x] = N(x) u {x}.
    Face closedNeighbourhood(VertexId x) const { return neighbours(x).with(x); }

    std::string format() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.names_ == b.names_ && a.edges_ == b.edges_; }

  private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<Face> adjacency_;
};

/// Maximal independent sets as facets.
SimplicialComplex independenceComplex(const Graph& graph);

/// G^alpha: copies of adjacent vertices are adjacent; copies of one vertex are not.
Graph graphExpand(const Graph& graph, const ExpansionVector& alpha);

/// G^alpha plus every edge between two copies of the same vertex.
Graph graphExpandHat(const Graph& graph, const ExpansionVector& alpha);

Graph complementGraph(const Graph& graph);

/// Maximum cardinality search order, reversed into a candidate perfect elimination order.
std::vector<VertexId> maximumCardinalitySearch(const Graph& graph);
/// True iff `order` is a perfect elimination ordering of `graph`.
bool isPerfectEliminationOrder(const Graph& graph, const std::vector<VertexId>& order);

bool isChordal(const Graph& graph);
bool isCoChordal(const Graph& graph);

/// Adds x' adjacent to every vertex of N[x]; x' is appended with the name x + "'".
Graph duplicateVertex(const Graph& graph, VertexId x);

/// Unordered pairs {x, y}, x < y, with N[x] = N[y].
std::vector<Graph::Edge> closedTwins(const Graph& graph);

/// G \ x; later vertices shift down by one.
Graph removeVertex(const Graph& graph, VertexId x);

/// (x_i x_j : {i, j} an edge). Throws on an edgeless graph.
MonomialIdeal edgeIdeal(const Graph& graph);

}  // namespace expanse

#endif  // EXPANSE_GRAPH_HPP
