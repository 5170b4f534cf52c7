#pragma once

#include "bcolor/graph.hpp"

#include <cstdint>
#include <vector>

namespace bcolor {

/// Colours are 1-based.
using Color = std::uint32_t;

/// A total assignment vertex -> {1..k}. Construction rejects colours outside
/// the range; it does not require every colour to be used.
class Coloring {
public:
  Coloring() = default;
  Coloring(std::size_t k, std::vector<Color> colors);

  std::size_t k() const { return k_; }
  std::size_t size() const { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_[v]; }
  const std::vector<Color> &colors() const { return colors_; }

  /// Vertex sets of colours 1..k (index i holds colour i + 1).
  std::vector<VertexSet> classes() const;

  friend bool operator==(const Coloring &, const Coloring &) = default;

private:
  std::size_t k_ = 0;
  std::vector<Color> colors_;
};

/// No monochromatic edge. Throws InputError if the colouring does not cover
/// exactly the vertices of `g`.
bool is_proper(const Graph &g, const Coloring &c);

/// Every colour 1..k appears on N[v]. Properness is not checked.
bool is_b_dominating(const Graph &g, const Coloring &c, Vertex v);

struct ColorfulVerdict {
  bool proper = false;
  bool colorful = false;
  /// When colorful: witnesses[i] is the lowest-index b-dominating vertex of colour i + 1.
  std::vector<Vertex> witnesses;
  /// When proper but not colorful: first colour with no b-dominating vertex (0 if none).
  Color missing_color = 0;
};

/// Proper, all k classes nonempty, and every class holds a b-dominating vertex.
ColorfulVerdict check_colorful(const Graph &g, const Coloring &c);
inline bool is_colorful(const Graph &g, const Coloring &c) { return check_colorful(g, c).colorful; }

} // namespace bcolor
