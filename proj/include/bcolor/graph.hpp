#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bcolor {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: as one bit row per vertex (for set algebra in the
/// colouring checks) and as sorted neighbour lists (for iteration). Labels are
/// an optional display layer; no algorithm looks at them.
class Graph {
public:
  Graph() = default;

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet &row(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return lists_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string> &labels() const { return labels_; }

  /// The label if present, otherwise the 1-based index used in files.
  std::string display(Vertex v) const;

  /// Structural equality; labels are ignored.
  bool same_structure(const Graph &other) const { return rows_ == other.rows_; }

  friend Graph graph_from_edges(std::size_t n, std::span<const Edge> edges,
                                std::vector<std::string> labels);

private:
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
/// out-of-range endpoints throw InputError. `labels` must be empty or have
/// exactly n entries.
Graph graph_from_edges(std::size_t n, std::span<const Edge> edges,
                       std::vector<std::string> labels = {});

Graph complete_graph(std::size_t k);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// N[v] = N(v) ∪ {v}.
VertexSet closed_neighborhood(const Graph &g, Vertex v);

/// Common degree if the graph is regular, nullopt otherwise. Throws on the
/// empty graph.
std::optional<std::size_t> regularity(const Graph &g);

struct Girth {
  std::optional<std::size_t> length; // nullopt means infinite
  bool infinite() const { return !length.has_value(); }
  friend bool operator==(const Girth &, const Girth &) = default;
};

/// Shortest cycle length by breadth-first search from every vertex.
Girth girth(const Graph &g);

/// Side (0 or 1) of every vertex in a proper 2-colouring, or nullopt.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph &g);
inline bool is_bipartite(const Graph &g) { return bipartition(g).has_value(); }

std::size_t connected_components(const Graph &g);

} // namespace bcolor
