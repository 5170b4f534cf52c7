#pragma once

#include "bcolor/coloring.hpp"
#include "bcolor/graph.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

namespace bcolor {

/// Colour counts handled by the exact searches (domains are 64-bit masks).
constexpr std::size_t max_search_colors = 64;

struct ChromaticResult {
  std::size_t chi = 0;
  Coloring witness;
};

/// Exact chromatic number by DSATUR-ordered backtracking with forward
/// checking, started from a greedy clique lower bound.
ChromaticResult chromatic_number(const Graph &g);

struct SearchBudget {
  std::uint64_t max_nodes = 4'000'000'000ULL;
  std::chrono::milliseconds max_time{std::chrono::minutes(10)};
};

struct SearchOptions {
  SearchBudget budget;
  /// 1 selects the serial search. Larger values run the OpenMP kernel.
  int workers = 1;
};

enum class SearchStatus { Found, NotExists, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NotExists;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

/// Exact search for a colorful k-colouring.
///
/// Root branches are increasing tuples x_1 < ... < x_k of vertices with degree
/// at least k - 1, where x_j is fixed to colour j and must end up
/// b-dominating. Inside a root the search first satisfies the domination
/// requirements (colour c somewhere on N(x_j)) by branching on the supporting
/// neighbour, then extends to a proper colouring. NotExists is only returned
/// after the whole tree was explored.
SearchResult find_colorful_coloring(const Graph &g, std::size_t k, const SearchOptions &options = {});

/// Reference implementation: single thread, roots in lexicographic order.
SearchResult find_colorful_coloring_serial(const Graph &g, std::size_t k, const SearchBudget &budget = {});

/// Root prefixes are distributed over OpenMP threads. Among roots that
/// succeed, the lexicographically first wins, so a Found result matches the
/// serial one whenever neither run hits the budget.
SearchResult find_colorful_coloring_parallel(const Graph &g, std::size_t k, const SearchBudget &budget = {},
                                             int workers = 0);

/// Largest d with at least d vertices of degree >= d - 1.
std::size_t m_degree_bound(const Graph &g);

struct BSpectrumReport {
  std::size_t chi = 0;
  std::size_t b = 0;
  std::size_t upper_bound = 0;
  std::set<std::size_t> spectrum;
  /// k values whose search ran out of budget.
  std::set<std::size_t> unknown;
  /// nullopt when any k was inconclusive.
  std::optional<bool> continuous;
  std::map<std::size_t, Coloring> witnesses;
  std::uint64_t nodes = 0;
};

BSpectrumReport b_spectrum(const Graph &g, const SearchOptions &options = {});

} // namespace bcolor
