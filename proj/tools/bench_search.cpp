// Times the serial reference kernels against their OpenMP counterparts and
// checks that both produce the same answer.

#include "bcolor/fixtures.hpp"
#include "bcolor/homlift.hpp"
#include "bcolor/kneser.hpp"
#include "bcolor/search.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace bcolor;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double best_of(int repeat, F &&f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto start = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
  }
  return best;
}

const char *status_name(SearchStatus s) {
  switch (s) {
  case SearchStatus::Found:
    return "found";
  case SearchStatus::NotExists:
    return "none";
  case SearchStatus::BudgetExceeded:
    return "budget";
  }
  return "?";
}

struct SearchCase {
  std::string name;
  Graph graph;
  std::size_t k;
  std::uint64_t max_nodes;
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"serial vs OpenMP kernels"};
  int workers = 0;
  int repeat = 3;
  std::uint64_t nodes = 200'000;
  app.add_option("--workers", workers, "OpenMP threads (0 = runtime default)");
  app.add_option("--repeat", repeat, "runs per measurement, best time kept")->check(CLI::PositiveNumber);
  app.add_option("--nodes", nodes, "node budget for the open-ended searches");
  CLI11_PARSE(app, argc, argv);

  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::printf("threads: %d\n\n", threads);

  std::vector<SearchCase> cases;
  cases.push_back({"petersen k=4", fixtures::petersen(), 4, ~0ULL});
  cases.push_back({"q3 k=3", fixtures::q3(), 3, ~0ULL});
  cases.push_back({"heawood k=4", fixtures::heawood(), 4, ~0ULL});
  cases.push_back({"KG(7,3) k=5", kneser_graph(7, 3).graph(), 5, ~0ULL});
  cases.push_back({"KG(7,3) k=6", kneser_graph(7, 3).graph(), 6, ~0ULL});
  cases.push_back({"KG(8,3) k=10", kneser_graph(8, 3).graph(), 10, ~0ULL});
  cases.push_back({"KG(8,3) k=11", kneser_graph(8, 3).graph(), 11, nodes});

  bool all_agree = true;
  std::printf("%-16s %10s %10s %12s %12s %9s %8s %s\n", "colorful search", "serial s", "omp s", "serial nodes",
              "omp nodes", "status", "speedup", "same");
  for (const auto &c : cases) {
    SearchBudget budget;
    budget.max_nodes = c.max_nodes;
    SearchResult serial, parallel;
    const double ts = best_of(repeat, [&] { serial = find_colorful_coloring_serial(c.graph, c.k, budget); });
    const double tp = best_of(repeat, [&] { parallel = find_colorful_coloring_parallel(c.graph, c.k, budget, workers); });
    // a budget cut is not an answer, so only decided runs have to match
    const bool decided = serial.status != SearchStatus::BudgetExceeded && parallel.status != SearchStatus::BudgetExceeded;
    const bool same = !decided || (serial.status == parallel.status && serial.coloring == parallel.coloring);
    all_agree = all_agree && same;
    std::printf("%-16s %10.4f %10.4f %12llu %12llu %9s %8.2f %s\n", c.name.c_str(), ts, tp,
                static_cast<unsigned long long>(serial.nodes), static_cast<unsigned long long>(parallel.nodes),
                status_name(serial.status), ts / tp, decided ? (same ? "yes" : "NO") : "n/a");
  }

  std::printf("\n%-16s %10s %10s %9s %s\n", "sls check", "serial s", "omp s", "speedup", "same");
  for (auto [n, m] : {std::pair{7, 3}, std::pair{9, 4}, std::pair{11, 5}}) {
    const KneserStep step = kneser_step_hom(n, m);
    SlsVerdict serial, parallel;
    const double ts = best_of(repeat, [&] { serial = sls_check_serial(step.map); });
    const double tp = best_of(repeat, [&] { parallel = sls_check_parallel(step.map, workers); });
    bool same = bool(serial) == bool(parallel);
    if (same && serial)
      for (Vertex u = 0; u < step.map.target().vertex_count(); ++u)
        same = same && serial.certificate->per_target[u].anchor == parallel.certificate->per_target[u].anchor;
    all_agree = all_agree && same;
    const std::string name = "step(" + std::to_string(n) + "," + std::to_string(m) + ")";
    std::printf("%-16s %10.4f %10.4f %9.2f %s\n", name.c_str(), ts, tp, ts / tp, same ? "yes" : "NO");
  }
  return all_agree ? 0 : 1;
}
