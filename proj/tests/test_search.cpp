#include "bcolor/error.hpp"
#include "bcolor/fixtures.hpp"
#include "bcolor/kneser.hpp"
#include "bcolor/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace bcolor;

namespace {

SearchResult search(const Graph &g, std::size_t k) { return find_colorful_coloring_serial(g, k); }

} // namespace

TEST_CASE("chromatic number of small graphs") {
  CHECK(chromatic_number(complete_graph(1)).chi == 1);
  CHECK(chromatic_number(graph_from_edges(4, {})).chi == 1);
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(cycle_graph(6)).chi == 2);
  CHECK(chromatic_number(complete_graph(5)).chi == 5);
  CHECK(chromatic_number(fixtures::petersen()).chi == 3);
  CHECK(chromatic_number(fixtures::heawood()).chi == 2);
  CHECK_THROWS_AS(chromatic_number(Graph{}), InputError);

  const auto r = chromatic_number(kneser_graph(7, 3).graph());
  CHECK(r.chi == 3);
  CHECK(r.witness.k() == 3);
  CHECK(is_proper(kneser_graph(7, 3).graph(), r.witness));
}

TEST_CASE("m-degree bound") {
  CHECK(m_degree_bound(fixtures::petersen()) == 4);
  CHECK(m_degree_bound(complete_graph(3)) == 3);
  CHECK(m_degree_bound(graph_from_edges(5, {})) == 1);
  CHECK(m_degree_bound(kneser_graph(7, 3).graph()) == 5);
  CHECK(m_degree_bound(fixtures::q3()) == 4);
}

TEST_CASE("Q3 colorful searches") {
  const Graph cube = fixtures::q3();
  CHECK(search(cube, 3).status == SearchStatus::NotExists);
  for (std::size_t k : {2, 4}) {
    const auto r = search(cube, k);
    REQUIRE(r.status == SearchStatus::Found);
    REQUIRE(r.coloring.has_value());
    CHECK(r.coloring->k() == k);
    CHECK(is_colorful(cube, *r.coloring));
  }
  CHECK(search(cube, 5).status == SearchStatus::NotExists);
}

TEST_CASE("Petersen has no colorful 4-coloring") {
  CHECK(search(fixtures::petersen(), 4).status == SearchStatus::NotExists);
  const auto three = search(fixtures::petersen(), 3);
  REQUIRE(three.status == SearchStatus::Found);
  CHECK(is_colorful(fixtures::petersen(), *three.coloring));
}

TEST_CASE("trivial color counts") {
  const auto single = search(complete_graph(1), 1);
  REQUIRE(single.status == SearchStatus::Found);
  CHECK(single.coloring->colors() == std::vector<Color>{1});
  CHECK(search(graph_from_edges(3, {}), 1).status == SearchStatus::Found);
  CHECK(search(complete_graph(2), 1).status == SearchStatus::NotExists);
  CHECK_THROWS_AS(search(complete_graph(2), 0), InputError);
  CHECK(search(complete_graph(2), 65).status == SearchStatus::NotExists);
  CHECK_THROWS_AS(search(complete_graph(66), 65), InputError);
}

TEST_CASE("a tiny budget reports BudgetExceeded, never NotExists") {
  SearchBudget tiny;
  tiny.max_nodes = 10;
  const auto serial = find_colorful_coloring_serial(fixtures::petersen(), 4, tiny);
  CHECK(serial.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(serial.coloring.has_value());
  const auto parallel = find_colorful_coloring_parallel(fixtures::petersen(), 4, tiny, 4);
  CHECK(parallel.status == SearchStatus::BudgetExceeded);

  SearchBudget no_time;
  no_time.max_time = std::chrono::milliseconds(0);
  CHECK(find_colorful_coloring_serial(fixtures::petersen(), 4, no_time).status == SearchStatus::BudgetExceeded);
}

TEST_CASE("serial and parallel searches agree and are deterministic") {
  const Graph kg = kneser_graph(7, 3).graph();
  for (std::size_t k = 3; k <= 6; ++k) {
    CAPTURE(k);
    const auto a = find_colorful_coloring_serial(kg, k);
    const auto b = find_colorful_coloring_serial(kg, k);
    const auto c = find_colorful_coloring_parallel(kg, k, {}, 4);
    CHECK(a.status == b.status);
    CHECK(a.status == c.status);
    CHECK(a.coloring == b.coloring);
    CHECK(a.coloring == c.coloring);
  }
  CHECK(find_colorful_coloring_serial(kg, 5).status == SearchStatus::Found);
  CHECK(find_colorful_coloring_serial(kg, 6).status == SearchStatus::NotExists);
}

TEST_CASE("b-spectrum reports") {
  const auto cube = b_spectrum(fixtures::q3());
  CHECK(cube.spectrum == std::set<std::size_t>{2, 4});
  CHECK(cube.chi == 2);
  CHECK(cube.b == 4);
  CHECK(cube.unknown.empty());
  CHECK(cube.continuous == false);

  const auto pete = b_spectrum(fixtures::petersen());
  CHECK(pete.spectrum == std::set<std::size_t>{3});
  CHECK(pete.b == 3);
  CHECK(pete.upper_bound == 4);
  CHECK(pete.continuous == true);

  CHECK(b_spectrum(complete_graph(3)).spectrum == std::set<std::size_t>{3});
  CHECK(b_spectrum(complete_graph(1)).spectrum == std::set<std::size_t>{1});
  CHECK_THROWS_AS(b_spectrum(Graph{}), InputError);

  for (const auto &report : {cube, pete})
    for (std::size_t k : report.spectrum) {
      REQUIRE(report.witnesses.count(k) == 1);
      CHECK(report.witnesses.at(k).k() == k);
    }
}

TEST_CASE("an exhausted budget leaves continuity undecided") {
  SearchOptions options;
  options.budget.max_nodes = 10;
  const auto report = b_spectrum(fixtures::petersen(), options);
  CHECK(report.unknown == std::set<std::size_t>{4});
  CHECK_FALSE(report.continuous.has_value());
  CHECK(report.spectrum.count(3) == 1);
}

TEST_CASE("property: search agrees with naive enumeration on random graphs") {
  std::mt19937_64 rng(0x5EA2C4);
  int graphs = 0;
  for (; graphs < 250; ++graphs) {
    const int n = 1 + int(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * double(rng() % 6));
    const auto a = oracle::matrix(g);
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(graphs);
      CAPTURE(k);
      const bool exists = oracle::colorful_exists(a, k);
      const auto serial = find_colorful_coloring_serial(g, k);
      const auto parallel = find_colorful_coloring_parallel(g, k, {}, 3);
      REQUIRE(serial.status != SearchStatus::BudgetExceeded);
      CHECK((serial.status == SearchStatus::Found) == exists);
      CHECK(parallel.status == serial.status);
      CHECK(parallel.coloring == serial.coloring);
      if (serial.coloring)
        CHECK(is_colorful(g, *serial.coloring));
      if (exists)
        CHECK(std::size_t(k) <= m_degree_bound(g));
    }
  }
  CHECK(graphs >= 200);
}
