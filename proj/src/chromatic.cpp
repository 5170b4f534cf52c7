#include "bcolor/search.hpp"

#include "bcolor/error.hpp"

#include <bit>
#include <cassert>

namespace bcolor {

namespace {

using ColorMask = std::uint64_t;

ColorMask bit(Color c) { return ColorMask{1} << (c - 1); }

std::vector<Vertex> greedy_clique(const Graph &g) {
  std::vector<Vertex> best;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    std::vector<Vertex> clique{start};
    VertexSet candidates = g.row(start);
    while (candidates.any()) {
      // keep the candidate that leaves the most candidates; lowest index on ties
      Vertex pick = 0;
      std::size_t pick_score = 0;
      bool have_pick = false;
      for (auto u = candidates.find_first(); u != VertexSet::npos; u = candidates.find_next(u)) {
        const std::size_t score = (candidates & g.row(static_cast<Vertex>(u))).count();
        if (!have_pick || score > pick_score) {
          pick = static_cast<Vertex>(u);
          pick_score = score;
          have_pick = true;
        }
      }
      clique.push_back(pick);
      candidates &= g.row(pick);
    }
    if (clique.size() > best.size())
      best = std::move(clique);
  }
  return best;
}

struct Partial {
  std::vector<ColorMask> domain;
  std::vector<Color> color;
  Color max_used = 0;
};

// Colour v with c and strike c from the uncoloured neighbours.
bool assign(const Graph &g, Partial &p, Vertex v, Color c) {
  p.color[v] = c;
  p.domain[v] = bit(c);
  p.max_used = std::max(p.max_used, c);
  for (Vertex u : g.neighbors(v)) {
    if (p.color[u] == c)
      return false;
    if (p.color[u] == 0) {
      p.domain[u] &= ~bit(c);
      if (p.domain[u] == 0)
        return false;
    }
  }
  return true;
}

// Most constrained uncoloured vertex: fewest colours left, then highest
// degree, then lowest index. Returns vertex_count() when all are coloured.
Vertex select_vertex(const Graph &g, const Partial &p) {
  Vertex best = static_cast<Vertex>(g.vertex_count());
  int best_options = 0;
  std::size_t best_degree = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (p.color[v] != 0)
      continue;
    const int options = std::popcount(p.domain[v]);
    if (best == g.vertex_count() || options < best_options ||
        (options == best_options && g.degree(v) > best_degree)) {
      best = v;
      best_options = options;
      best_degree = g.degree(v);
    }
  }
  return best;
}

bool extend(const Graph &g, Partial &p, std::size_t k) {
  const Vertex v = select_vertex(g, p);
  if (v == g.vertex_count())
    return true;
  for (Color c = 1; c <= k; ++c) {
    if (!(p.domain[v] & bit(c)))
      continue;
    // unused colours are interchangeable: only try the first one
    if (c > p.max_used + 1)
      break;
    Partial next = p;
    if (assign(g, next, v, c) && extend(g, next, k)) {
      p = std::move(next);
      return true;
    }
  }
  return false;
}

std::optional<Coloring> k_coloring(const Graph &g, std::size_t k, const std::vector<Vertex> &clique) {
  if (clique.size() > k)
    return std::nullopt;
  const ColorMask full = k == 64 ? ~ColorMask{0} : (ColorMask{1} << k) - 1;
  Partial p{std::vector<ColorMask>(g.vertex_count(), full), std::vector<Color>(g.vertex_count(), 0), 0};
  for (std::size_t i = 0; i < clique.size(); ++i)
    if (!assign(g, p, clique[i], static_cast<Color>(i + 1)))
      return std::nullopt;
  if (!extend(g, p, k))
    return std::nullopt;
  return Coloring(k, p.color);
}

// DSATUR without backtracking, used as the starting upper bound.
Coloring dsatur_greedy(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<Color> color(n, 0);
  std::vector<VertexSet> seen(n, VertexSet(n + 1));
  Color used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    std::size_t pick_sat = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v])
        continue;
      const std::size_t sat = seen[v].count();
      if (!have || sat > pick_sat || (sat == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = sat;
        have = true;
      }
    }
    Color c = 1;
    while (seen[pick].test(c))
      ++c;
    color[pick] = c;
    used = std::max(used, c);
    for (Vertex u : g.neighbors(pick))
      seen[u].set(c);
  }
  return Coloring(used, std::move(color));
}

} // namespace

ChromaticResult chromatic_number(const Graph &g) {
  if (g.vertex_count() == 0)
    throw InputError("chromatic number is undefined for the empty graph");

  Coloring upper = dsatur_greedy(g);
  const std::vector<Vertex> clique = greedy_clique(g);
  for (std::size_t k = clique.size(); k < upper.k(); ++k) {
    if (k > max_search_colors)
      throw InputError("chromatic search supports at most " + std::to_string(max_search_colors) +
                       " colors");
    if (auto coloring = k_coloring(g, k, clique)) {
      assert(is_proper(g, *coloring));
      return {k, std::move(*coloring)};
    }
  }
  return {upper.k(), std::move(upper)};
}

} // namespace bcolor
