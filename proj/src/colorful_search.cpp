#include "bcolor/search.hpp"

#include "bcolor/error.hpp"

#include <omp.h>

#include <atomic>
#include <bit>
#include <cassert>
#include <limits>

namespace bcolor {

namespace {

using ColorMask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::size_t no_root = std::numeric_limits<std::size_t>::max();

ColorMask bit(Color c) { return ColorMask{1} << (c - 1); }
bool single(ColorMask m) { return m != 0 && (m & (m - 1)) == 0; }
Color only_color(ColorMask m) { return static_cast<Color>(std::countr_zero(m) + 1); }

// State shared by every worker of one search.
struct Control {
  Control(const SearchBudget &budget) : budget(budget), deadline(Clock::now() + budget.max_time) {}

  const SearchBudget &budget;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> best_root{no_root};
};

struct State {
  std::vector<ColorMask> domain;
  std::vector<Color> color; // 0 = uncoloured
  std::vector<Vertex> dominators; // dominators[j] carries colour j + 1
};

class Kernel {
public:
  Kernel(const Graph &g, std::size_t k, Control &control) : g_(g), k_(k), control_(control) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) + 1 >= k)
        candidates_.push_back(v);
  }

  ~Kernel() { control_.nodes.fetch_add(pending_nodes_); }

  const std::vector<Vertex> &candidates() const { return candidates_; }

  State initial_state() const {
    const ColorMask full = k_ == 64 ? ~ColorMask{0} : (ColorMask{1} << k_) - 1;
    return {std::vector<ColorMask>(g_.vertex_count(), full), std::vector<Color>(g_.vertex_count(), 0), {}};
  }

  void set_root(std::size_t root) {
    root_ = root;
    stopped_ = false;
  }
  bool stopped() const { return stopped_; }

  /// Enumerates the dominators of colours j+1..k from candidate position
  /// `from` on, then completes the colouring.
  std::optional<Coloring> place(const State &s, std::size_t j, std::size_t from) {
    if (j == k_)
      return satisfy(s);
    const Color c = static_cast<Color>(j + 1);
    for (std::size_t i = from; i + (k_ - j) <= candidates_.size(); ++i) {
      const Vertex x = candidates_[i];
      if (!(s.domain[x] & bit(c)))
        continue;
      if (!tick())
        return std::nullopt;
      State next = s;
      if (!place_dominator(next, x, c))
        continue;
      if (auto found = place(next, j + 1, i + 1))
        return found;
      if (stopped_)
        return std::nullopt;
    }
    return std::nullopt;
  }

  bool place_dominator(State &s, Vertex x, Color c) {
    if (!assign(s, x, c))
      return false;
    s.dominators.push_back(x);
    return settle(s);
  }

private:
  bool tick() {
    if (stopped_)
      return false;
    if (++pending_nodes_ < 64)
      return true;
    return flush();
  }

  bool flush() {
    const std::uint64_t total = control_.nodes.fetch_add(pending_nodes_) + pending_nodes_;
    pending_nodes_ = 0;
    if (total > control_.budget.max_nodes || Clock::now() > control_.deadline)
      control_.out_of_budget = true;
    if (control_.out_of_budget || control_.best_root.load() < root_)
      stopped_ = true;
    return !stopped_;
  }

  // Colour v with c and propagate forced colours to neighbours.
  bool assign(State &s, Vertex v, Color c) {
    queue_.clear();
    queue_.push_back({v, c});
    while (!queue_.empty()) {
      const auto [x, col] = queue_.back();
      queue_.pop_back();
      if (s.color[x] == col)
        continue;
      if (s.color[x] != 0 || !(s.domain[x] & bit(col)))
        return false;
      s.color[x] = col;
      s.domain[x] = bit(col);
      for (Vertex u : g_.neighbors(x)) {
        if (s.color[u] == col)
          return false;
        if (s.color[u] == 0 && (s.domain[u] & bit(col))) {
          s.domain[u] &= ~bit(col);
          if (s.domain[u] == 0)
            return false;
          if (single(s.domain[u]))
            queue_.push_back({u, only_color(s.domain[u])});
        }
      }
    }
    return true;
  }

  bool forbid(State &s, Vertex v, Color c) {
    if (s.color[v] == c)
      return false;
    if (s.color[v] != 0 || !(s.domain[v] & bit(c)))
      return true;
    s.domain[v] &= ~bit(c);
    if (s.domain[v] == 0)
      return false;
    if (single(s.domain[v]))
      return assign(s, v, only_color(s.domain[v]));
    return true;
  }

  struct Support {
    bool satisfied = false;
    std::size_t count = 0;
    Vertex first = 0;
  };

  Support support(const State &s, Vertex x, Color c) const {
    Support out;
    for (Vertex u : g_.neighbors(x)) {
      if (s.color[u] == c) {
        out.satisfied = true;
        return out;
      }
      if (s.color[u] == 0 && (s.domain[u] & bit(c))) {
        if (out.count++ == 0)
          out.first = u;
      }
    }
    return out;
  }

  // Domination requirements to fixpoint: fail when a colour has no possible
  // carrier around a dominator, or when the missing colours outnumber the
  // uncoloured neighbours; colour a lone carrier.
  bool settle(State &s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < s.dominators.size(); ++j) {
        const Vertex x = s.dominators[j];
        std::size_t open = 0;
        for (Vertex u : g_.neighbors(x))
          if (s.color[u] == 0)
            ++open;
        std::size_t missing = 0;
        for (Color c = 1; c <= k_; ++c) {
          if (c == j + 1)
            continue;
          const Support sup = support(s, x, c);
          if (sup.satisfied)
            continue;
          if (sup.count == 0)
            return false;
          ++missing;
          if (sup.count == 1) {
            if (!assign(s, sup.first, c))
              return false;
            changed = true;
            break;
          }
        }
        if (changed)
          break;
        if (missing > open)
          return false;
      }
    }
    return true;
  }

  std::optional<Coloring> satisfy(const State &s) {
    if (!tick())
      return std::nullopt;

    // Scarcest unmet requirement first; lowest dominator, then lowest colour on ties.
    bool have_requirement = false;
    Vertex req_x = 0;
    Color req_c = 0;
    std::size_t req_count = 0;
    for (std::size_t j = 0; j < s.dominators.size(); ++j)
      for (Color c = 1; c <= k_; ++c) {
        if (c == j + 1)
          continue;
        const Support sup = support(s, s.dominators[j], c);
        if (sup.satisfied)
          continue;
        if (!have_requirement || sup.count < req_count) {
          have_requirement = true;
          req_x = s.dominators[j];
          req_c = c;
          req_count = sup.count;
        }
      }

    if (have_requirement) {
      // Branch i colours the i-th carrier and excludes the colour from the
      // earlier ones, so the branches are disjoint.
      State base = s;
      for (Vertex u : g_.neighbors(req_x)) {
        if (base.color[u] != 0 || !(base.domain[u] & bit(req_c)))
          continue;
        State next = base;
        if (assign(next, u, req_c) && settle(next))
          if (auto found = satisfy(next))
            return found;
        if (stopped_)
          return std::nullopt;
        if (!forbid(base, u, req_c) || !settle(base))
          break;
        // propagation may have coloured a later carrier already
        if (support(base, req_x, req_c).satisfied)
          return satisfy(base);
      }
      return std::nullopt;
    }

    Vertex pick = static_cast<Vertex>(g_.vertex_count());
    int pick_options = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (s.color[v] != 0)
        continue;
      const int options = std::popcount(s.domain[v]);
      if (pick == g_.vertex_count() || options < pick_options) {
        pick = v;
        pick_options = options;
      }
    }
    if (pick == g_.vertex_count()) {
      Coloring result(k_, s.color);
      assert(is_colorful(g_, result));
      return result;
    }
    for (Color c = 1; c <= k_; ++c) {
      if (!(s.domain[pick] & bit(c)))
        continue;
      State next = s;
      if (assign(next, pick, c) && settle(next))
        if (auto found = satisfy(next))
          return found;
      if (stopped_)
        return std::nullopt;
    }
    return std::nullopt;
  }

  const Graph &g_;
  std::size_t k_;
  Control &control_;
  std::vector<Vertex> candidates_;
  std::vector<std::pair<Vertex, Color>> queue_;
  std::uint64_t pending_nodes_ = 0;
  std::size_t root_ = 0;
  bool stopped_ = false;
};

// Cases the kernel does not handle. Returns nullopt when the kernel must run.
std::optional<SearchResult> trivial_case(const Graph &g, std::size_t k) {
  if (k == 0)
    throw InputError("number of colors must be at least 1");
  if (k == 1) {
    // a single class whose vertices are trivially dominating, iff there are no edges
    if (g.vertex_count() > 0 && g.edge_count() == 0)
      return SearchResult{SearchStatus::Found, Coloring(1, std::vector<Color>(g.vertex_count(), 1)), 0};
    return SearchResult{SearchStatus::NotExists, std::nullopt, 0};
  }
  if (m_degree_bound(g) < k)
    return SearchResult{SearchStatus::NotExists, std::nullopt, 0};
  if (k > max_search_colors)
    throw InputError("colorful search supports at most " + std::to_string(max_search_colors) + " colors");
  return std::nullopt;
}

SearchResult finish(const Control &control, std::optional<Coloring> found) {
  SearchResult result;
  result.nodes = control.nodes.load();
  if (found) {
    result.status = SearchStatus::Found;
    result.coloring = std::move(found);
  } else if (control.out_of_budget) {
    result.status = SearchStatus::BudgetExceeded;
  } else {
    result.status = SearchStatus::NotExists;
  }
  return result;
}

} // namespace

std::size_t m_degree_bound(const Graph &g) {
  const std::size_t n = g.vertex_count();
  // at_least[d] = number of vertices with degree >= d
  std::vector<std::size_t> at_least(n + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    ++at_least[g.degree(v)];
  for (std::size_t d = n; d-- > 0;)
    at_least[d] += at_least[d + 1];
  std::size_t best = 0;
  for (std::size_t d = 1; d <= n; ++d)
    if (at_least[d - 1] >= d)
      best = d;
  return best;
}

SearchResult find_colorful_coloring_serial(const Graph &g, std::size_t k, const SearchBudget &budget) {
  if (auto trivial = trivial_case(g, k))
    return *trivial;
  Control control(budget);
  std::optional<Coloring> found;
  {
    Kernel kernel(g, k, control);
    found = kernel.place(kernel.initial_state(), 0, 0);
  }
  return finish(control, std::move(found));
}

SearchResult find_colorful_coloring_parallel(const Graph &g, std::size_t k, const SearchBudget &budget,
                                             int workers) {
  if (auto trivial = trivial_case(g, k))
    return *trivial;
  if (workers <= 0)
    workers = omp_get_max_threads();

  Control control(budget);

  // Roots are (x_1, x_2) candidate-position pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> roots;
  {
    Kernel probe(g, k, control);
    const std::size_t c = probe.candidates().size();
    for (std::size_t a = 0; a + k <= c; ++a)
      for (std::size_t b = a + 1; b + (k - 1) <= c; ++b)
        roots.emplace_back(a, b);
  }
  std::vector<std::optional<Coloring>> results(roots.size());
  const auto root_count = static_cast<std::int64_t>(roots.size());

#pragma omp parallel num_threads(workers)
  {
    Kernel kernel(g, k, control);
    const auto &cand = kernel.candidates();
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < root_count; ++r) {
      const auto root = static_cast<std::size_t>(r);
      if (control.out_of_budget || control.best_root.load() < root)
        continue;
      kernel.set_root(root);
      State s = kernel.initial_state();
      const auto [a, b] = roots[root];
      if (!kernel.place_dominator(s, cand[a], 1) || !kernel.place_dominator(s, cand[b], 2))
        continue;
      if (auto found = kernel.place(s, 2, b + 1)) {
        results[root] = std::move(found);
        std::size_t current = control.best_root.load();
        while (root < current && !control.best_root.compare_exchange_weak(current, root)) {
        }
      }
    }
  }

  const std::size_t best = control.best_root.load();
  return finish(control, best == no_root ? std::nullopt : std::move(results[best]));
}

SearchResult find_colorful_coloring(const Graph &g, std::size_t k, const SearchOptions &options) {
  if (options.workers == 1)
    return find_colorful_coloring_serial(g, k, options.budget);
  return find_colorful_coloring_parallel(g, k, options.budget, options.workers);
}

} // namespace bcolor
