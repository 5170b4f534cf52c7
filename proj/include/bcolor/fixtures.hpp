#pragma once

#include "bcolor/coloring.hpp"
#include "bcolor/graph.hpp"
#include "bcolor/kneser.hpp"

#include <array>
#include <memory>
#include <vector>

namespace bcolor::fixtures {

/// The colorful 4-colouring of KG(7,3) with classes V1..V4 (colours 1..4)
/// and one designated b-dominating vertex per class.
struct Kg73Fixture {
  std::shared_ptr<const KneserGraph> graph;
  Coloring coloring;
  std::array<std::vector<KneserLabel>, 4> classes;
  std::array<Vertex, 4> designated;
};

/// Built from the explicit class lists. Throws std::logic_error if those lists
/// disagree with the set-builder form or fail to partition the 35 vertices.
Kg73Fixture kg73_colorful_four();

/// The classes as written in set-builder form (V2 and V4 as a range of
/// subsets with exceptions removed/added), expanded here independently.
std::array<std::vector<SubsetMask>, 4> kg73_set_builder_classes();

/// A colorful 5-colouring of KG(7,3) produced by the exact search and frozen
/// here, one colour per vertex in colex order.
Coloring kg73_colorful_five();

Graph petersen();
Graph q3();
/// Point-line incidence graph of the Fano plane: points P1..P7, lines L1..L7.
Graph heawood();

} // namespace bcolor::fixtures
