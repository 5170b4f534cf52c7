#pragma once

#include "bcolor/graph.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bcolor {

/// An m-subset of {1..n}, members strictly increasing.
struct KneserLabel {
  int n = 0;
  std::vector<int> members;
  friend bool operator==(const KneserLabel &, const KneserLabel &) = default;
};

/// Bit i-1 set iff i is a member. Universe sizes up to 63 are supported.
using SubsetMask = std::uint64_t;

constexpr int max_universe = 63;

std::uint64_t binomial(int n, int k);

SubsetMask to_mask(const KneserLabel &label);
KneserLabel from_mask(int n, SubsetMask mask);

/// Throws InputError unless `label` is a strictly increasing m-subset of {1..n}.
void validate_label(int n, int m, const KneserLabel &label);

/// "{a,b,c}" with ascending members and no spaces.
std::string render_label(const KneserLabel &label);
KneserLabel parse_label(int n, std::string_view text);

/// Colexicographic rank among the m-subsets of {1..n}.
std::size_t rank_subset(int n, int m, const KneserLabel &label);
KneserLabel unrank_subset(int n, int m, std::size_t index);

/// KG(n, m) with vertex i carrying the i-th m-subset in colex order.
class KneserGraph {
public:
  KneserGraph(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const Graph &graph() const { return *graph_; }
  std::shared_ptr<const Graph> shared_graph() const { return graph_; }

  SubsetMask mask(Vertex v) const { return masks_[v]; }
  KneserLabel label(Vertex v) const { return from_mask(n_, masks_[v]); }
  Vertex vertex_of(const KneserLabel &label) const {
    return static_cast<Vertex>(rank_subset(n_, m_, label));
  }

private:
  int n_;
  int m_;
  std::vector<SubsetMask> masks_;
  std::shared_ptr<const Graph> graph_;
};

/// Requires 1 <= m <= n <= 63. Edgeless when n < 2m.
KneserGraph kneser_graph(int n, int m);

/// n - 2m + 2, the known chromatic number of KG(n, m) for n >= 2m. This is an
/// oracle value; nothing is computed on a graph.
int lovasz_chromatic(int n, int m);

} // namespace bcolor
