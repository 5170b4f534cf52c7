#include "bcolor/graph.hpp"

#include "bcolor/error.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>

namespace bcolor {

namespace {

[[maybe_unused]] bool invariants_hold(const Graph &g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.adjacent(v, v))
      return false;
    for (Vertex u : g.neighbors(v))
      if (u >= g.vertex_count() || !g.adjacent(u, v))
        return false;
    if (g.row(v).count() != g.degree(v))
      return false;
  }
  return true;
}

} // namespace

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges,
                       std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n)
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match vertex count " + std::to_string(n));
  if (n > std::numeric_limits<Vertex>::max())
    throw InputError("vertex count too large");

  Graph g;
  g.rows_.assign(n, VertexSet(n));
  for (const Edge &e : edges) {
    if (e.u >= n || e.v >= n)
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside [0," + std::to_string(n) + ")");
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.rows_[e.u].set(e.v);
    g.rows_[e.v].set(e.u);
  }

  g.lists_.resize(n);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto &list = g.lists_[v];
    list.reserve(g.rows_[v].count());
    for (auto u = g.rows_[v].find_first(); u != VertexSet::npos; u = g.rows_[v].find_next(u))
      list.push_back(static_cast<Vertex>(u));
    degree_sum += list.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.labels_ = std::move(labels);

  assert(invariants_hold(g));
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : lists_[u])
      if (u < v)
        out.push_back({u, v});
  return out;
}

std::string Graph::display(Vertex v) const {
  if (has_labels())
    return labels_[v];
  return std::to_string(v + 1);
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v)
      edges.push_back({u, v});
  return graph_from_edges(k, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return graph_from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v)
    edges.push_back({v, v + 1});
  return graph_from_edges(n, edges);
}

VertexSet closed_neighborhood(const Graph &g, Vertex v) {
  if (v >= g.vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  VertexSet out = g.row(v);
  out.set(v);
  return out;
}

std::optional<std::size_t> regularity(const Graph &g) {
  if (g.vertex_count() == 0)
    throw InputError("regularity is undefined for the empty graph");
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d)
      return std::nullopt;
  return d;
}

Girth girth(const Graph &g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = unseen;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);

  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = root;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      // cycles closed from depth d have length >= 2d
      if (best != unseen && 2 * dist[u] >= best)
        break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == unseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == unseen)
    return {};
  return {best};
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph &g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t unset = 2;
  std::vector<std::uint8_t> side(n, unset);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != unset)
      continue;
    side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == unset) {
          side[w] = side[u] ^ 1;
          queue.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::size_t connected_components(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    ++components;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return components;
}

} // namespace bcolor
