#include "bcolor/coloring.hpp"

#include "bcolor/error.hpp"

namespace bcolor {

namespace {

void check_cover(const Graph &g, const Coloring &c) {
  if (c.size() != g.vertex_count())
    throw InputError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
}

} // namespace

Coloring::Coloring(std::size_t k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {
  for (std::size_t v = 0; v < colors_.size(); ++v)
    if (colors_[v] < 1 || colors_[v] > k_)
      throw InputError("vertex " + std::to_string(v) + " has color " +
                       std::to_string(colors_[v]) + " outside [1," + std::to_string(k_) + "]");
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(k_, VertexSet(colors_.size()));
  for (std::size_t v = 0; v < colors_.size(); ++v)
    out[colors_[v] - 1].set(v);
  return out;
}

bool is_proper(const Graph &g, const Coloring &c) {
  check_cover(g, c);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u))
      if (c[u] == c[v])
        return false;
  return true;
}

bool is_b_dominating(const Graph &g, const Coloring &c, Vertex v) {
  check_cover(g, c);
  if (v >= g.vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  std::vector<bool> seen(c.k() + 1, false);
  std::size_t distinct = 1;
  seen[c[v]] = true;
  for (Vertex u : g.neighbors(v))
    if (!seen[c[u]]) {
      seen[c[u]] = true;
      ++distinct;
    }
  return distinct == c.k();
}

ColorfulVerdict check_colorful(const Graph &g, const Coloring &c) {
  ColorfulVerdict verdict;
  verdict.proper = is_proper(g, c);
  if (!verdict.proper)
    return verdict;

  const std::size_t k = c.k();
  std::vector<Vertex> witnesses(k);
  std::vector<bool> found(k, false);
  std::size_t remaining = k;
  for (Vertex v = 0; v < g.vertex_count() && remaining > 0; ++v) {
    const Color color = c[v];
    if (found[color - 1] || !is_b_dominating(g, c, v))
      continue;
    found[color - 1] = true;
    witnesses[color - 1] = v;
    --remaining;
  }
  if (remaining > 0) {
    for (std::size_t i = 0; i < k; ++i)
      if (!found[i]) {
        verdict.missing_color = static_cast<Color>(i + 1);
        break;
      }
    return verdict;
  }
  verdict.colorful = true;
  verdict.witnesses = std::move(witnesses);
  return verdict;
}

} // namespace bcolor
