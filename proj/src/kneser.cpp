#include "bcolor/kneser.hpp"

#include "bcolor/error.hpp"

#include <algorithm>
#include <charconv>

namespace bcolor {

namespace {

void check_parameters(int n, int m) {
  if (n < 1 || n > max_universe)
    throw InputError("universe size n=" + std::to_string(n) + " outside [1," +
                     std::to_string(max_universe) + "]");
  if (m < 1 || m > n)
    throw InputError("subset size m=" + std::to_string(m) + " outside [1,n] for n=" +
                     std::to_string(n));
}

constexpr std::size_t max_kneser_vertices = 1u << 13;

} // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i)
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(result);
}

SubsetMask to_mask(const KneserLabel &label) {
  SubsetMask mask = 0;
  for (int x : label.members)
    mask |= SubsetMask{1} << (x - 1);
  return mask;
}

KneserLabel from_mask(int n, SubsetMask mask) {
  KneserLabel label{n, {}};
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1)
      label.members.push_back(i + 1);
  return label;
}

void validate_label(int n, int m, const KneserLabel &label) {
  check_parameters(n, m);
  if (static_cast<int>(label.members.size()) != m)
    throw InputError("label " + render_label(label) + " does not have " + std::to_string(m) +
                     " members");
  int previous = 0;
  for (int x : label.members) {
    if (x <= previous)
      throw InputError("label " + render_label(label) + " is not strictly increasing");
    if (x > n)
      throw InputError("label " + render_label(label) + " has a member outside [1," +
                       std::to_string(n) + "]");
    previous = x;
  }
}

std::string render_label(const KneserLabel &label) {
  std::string out = "{";
  for (std::size_t i = 0; i < label.members.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(label.members[i]);
  }
  out += '}';
  return out;
}

KneserLabel parse_label(int n, std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw InputError("malformed subset label '" + std::string(text) + "'");
  KneserLabel label{n, {}};
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || ptr == body.data())
      throw InputError("malformed subset label '" + std::string(text) + "'");
    label.members.push_back(value);
    body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
    if (!body.empty()) {
      if (body.front() != ',' || body.size() == 1)
        throw InputError("malformed subset label '" + std::string(text) + "'");
      body.remove_prefix(1);
    }
  }
  return label;
}

// Colex rank of a_0 < a_1 < ... (0-based) is sum_i C(a_i, i + 1).
std::size_t rank_subset(int n, int m, const KneserLabel &label) {
  validate_label(n, m, label);
  std::size_t rank = 0;
  for (int i = 0; i < m; ++i)
    rank += binomial(label.members[i] - 1, i + 1);
  return rank;
}

KneserLabel unrank_subset(int n, int m, std::size_t index) {
  check_parameters(n, m);
  if (index >= binomial(n, m))
    throw InputError("subset index " + std::to_string(index) + " out of range for C(" +
                     std::to_string(n) + "," + std::to_string(m) + ")");
  KneserLabel label{n, std::vector<int>(m)};
  std::uint64_t remaining = index;
  int candidate = n - 1;
  for (int i = m; i >= 1; --i) {
    while (binomial(candidate, i) > remaining)
      --candidate;
    label.members[i - 1] = candidate + 1;
    remaining -= binomial(candidate, i);
    --candidate;
  }
  return label;
}

KneserGraph::KneserGraph(int n, int m) : n_(n), m_(m) {
  check_parameters(n, m);
  const std::uint64_t count = binomial(n, m);
  if (count > max_kneser_vertices)
    throw InputError("KG(" + std::to_string(n) + "," + std::to_string(m) + ") has " +
                     std::to_string(count) + " vertices; limit is " +
                     std::to_string(max_kneser_vertices));

  masks_.reserve(count);
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    KneserLabel label = unrank_subset(n, m, i);
    masks_.push_back(to_mask(label));
    labels.push_back(render_label(label));
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < count; ++u)
    for (Vertex v = u + 1; v < count; ++v)
      if ((masks_[u] & masks_[v]) == 0)
        edges.push_back({u, v});
  graph_ = std::make_shared<const Graph>(graph_from_edges(count, edges, std::move(labels)));
}

KneserGraph kneser_graph(int n, int m) { return KneserGraph(n, m); }

int lovasz_chromatic(int n, int m) {
  check_parameters(n, m);
  if (n < 2 * m)
    throw InputError("chromatic formula needs n >= 2m, got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m));
  return n - 2 * m + 2;
}

} // namespace bcolor
