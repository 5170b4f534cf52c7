#pragma once

// Brute-force references for the tests. Everything here works on plain edge
// lists and integer vectors and shares no code with the library algorithms.

#include "bcolor/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix matrix(std::size_t n, const std::vector<std::pair<int, int>> &edges) {
  AdjMatrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges)
    a[u][v] = a[v][u] = true;
  return a;
}

inline AdjMatrix matrix(const bcolor::Graph &g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto &e : g.edges())
    edges.emplace_back(int(e.u), int(e.v));
  return matrix(g.vertex_count(), edges);
}

// Every simple cycle, by depth-first extension of paths whose start is the
// smallest vertex on the cycle. Calls visit(length) once per direction.
template <class Visit>
void each_cycle(const AdjMatrix &a, Visit visit) {
  const int n = int(a.size());
  std::vector<bool> on(n, false);
  auto dfs = [&](auto &self, int start, int at, int len) -> void {
    for (int next = start; next < n; ++next) {
      if (!a[at][next])
        continue;
      if (next == start && len >= 3)
        visit(len);
      else if (next > start && !on[next]) {
        on[next] = true;
        self(self, start, next, len + 1);
        on[next] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = true;
    dfs(dfs, s, s, 1);
    on[s] = false;
  }
}

inline std::optional<std::size_t> girth(const AdjMatrix &a) {
  std::optional<std::size_t> best;
  each_cycle(a, [&](int len) {
    if (!best || std::size_t(len) < *best)
      best = len;
  });
  return best;
}

inline bool has_odd_cycle(const AdjMatrix &a) {
  bool odd = false;
  each_cycle(a, [&](int len) { odd = odd || len % 2 == 1; });
  return odd;
}

// Colorful per the glossary, from scratch: proper, every colour used, and
// each colour class holds a vertex whose closed neighbourhood sees all k.
inline bool colorful(const AdjMatrix &a, const std::vector<int> &color, int k) {
  const int n = int(a.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a[u][v] && color[u] == color[v])
        return false;
  for (int c = 1; c <= k; ++c) {
    bool found = false;
    for (int x = 0; x < n && !found; ++x) {
      if (color[x] != c)
        continue;
      std::set<int> seen{c};
      for (int y = 0; y < n; ++y)
        if (a[x][y])
          seen.insert(color[y]);
      found = int(seen.size()) == k;
    }
    if (!found)
      return false;
  }
  return true;
}

// Visits every map {0..n-1} -> {1..k}; stops early when visit returns false.
template <class Visit>
void each_assignment(int n, int k, Visit visit) {
  std::vector<int> c(n, 1);
  while (true) {
    if (!visit(c))
      return;
    int i = 0;
    while (i < n && c[i] == k)
      c[i++] = 1;
    if (i == n)
      return;
    ++c[i];
  }
}

inline bool colorful_exists(const AdjMatrix &a, int k) {
  bool found = false;
  each_assignment(int(a.size()), k, [&](const std::vector<int> &c) {
    found = colorful(a, c, k);
    return !found;
  });
  return found;
}

// Semi-local surjectivity straight from the definition.
inline bool sls(const AdjMatrix &g, const AdjMatrix &h, const std::vector<int> &f) {
  const int n = int(g.size()), m = int(h.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g[x][y] && !h[f[x]][f[y]])
        return false;
  for (int u = 0; u < m; ++u) {
    bool witnessed = false;
    for (int a = 0; a < n && !witnessed; ++a) {
      if (f[a] != u)
        continue;
      witnessed = true;
      for (int v = 0; v < m && witnessed; ++v) {
        if (!h[u][v])
          continue;
        bool hit = false;
        for (int b = 0; b < n && !hit; ++b)
          hit = g[a][b] && f[b] == v;
        witnessed = hit;
      }
    }
    if (!witnessed)
      return false;
  }
  return true;
}

// Graphs on n vertices encoded as bit masks over the pairs (i<j) in
// lexicographic order; a mask is canonical when no relabelling gives a
// smaller one.
inline std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.emplace_back(i, j);
  return out;
}

inline std::vector<std::uint32_t> isomorphism_classes(int n) {
  const auto ps = pairs(n);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int i = 0; i < int(ps.size()); ++i) {
    index[ps[i].first][ps[i].second] = i;
    index[ps[i].second][ps[i].first] = i;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::uint32_t> reps;
  const std::uint32_t total = std::uint32_t{1} << ps.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto &q : perms) {
      std::uint32_t image = 0;
      for (int i = 0; i < int(ps.size()); ++i)
        if (mask >> i & 1)
          image |= std::uint32_t{1} << index[q[ps[i].first]][q[ps[i].second]];
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (canonical)
      reps.push_back(mask);
  }
  return reps;
}

inline std::vector<bcolor::Edge> edges_of(int n, std::uint32_t mask) {
  std::vector<bcolor::Edge> out;
  const auto ps = pairs(n);
  for (int i = 0; i < int(ps.size()); ++i)
    if (mask >> i & 1)
      out.push_back({bcolor::Vertex(ps[i].first), bcolor::Vertex(ps[i].second)});
  return out;
}

inline bcolor::Graph random_graph(std::mt19937_64 &rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<bcolor::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.push_back({bcolor::Vertex(i), bcolor::Vertex(j)});
  return bcolor::graph_from_edges(n, edges);
}

} // namespace oracle
