#include "bcolor/io.hpp"

#include "bcolor/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace bcolor::io {

namespace {

// Line-oriented tokenizer that skips blanks and 'c' comments.
class LineReader {
public:
  LineReader(std::istream &in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::vector<std::string> &tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;)
        tokens.push_back(std::move(t));
      if (tokens.empty() || tokens.front() == "c")
        continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &message) const {
    throw InputError(source_ + ":" + std::to_string(line_no_) + ": " + message);
  }

  std::size_t number(const std::string &token) const {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      fail("expected a non-negative integer, got '" + token + "'");
    return value;
  }

  std::size_t line() const { return line_no_; }

private:
  std::istream &in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

std::ifstream open_in(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path &path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::optional<std::size_t> as_index(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    return std::nullopt;
  return value;
}

// Label lookup for one graph.
class VertexResolver {
public:
  explicit VertexResolver(const Graph &g) : g_(g) {
    for (Vertex v = 0; v < g.vertex_count() && g.has_labels(); ++v)
      by_label_.emplace(g.labels()[v], v);
  }

  std::optional<Vertex> resolve(std::string_view token) const {
    if (auto it = by_label_.find(std::string(token)); it != by_label_.end())
      return it->second;
    if (auto index = as_index(token); index && *index >= 1 && *index <= g_.vertex_count())
      return static_cast<Vertex>(*index - 1);
    return std::nullopt;
  }

private:
  const Graph &g_;
  std::unordered_map<std::string, Vertex> by_label_;
};

std::filesystem::path labels_path(const std::filesystem::path &path) {
  return std::filesystem::path(path.string() + ".labels");
}

} // namespace

Graph read_col(std::istream &in, std::vector<std::string> labels) {
  LineReader reader(in, "graph");
  std::vector<std::string> t;
  std::optional<std::size_t> n;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  while (reader.next(t)) {
    if (t[0] == "p") {
      if (n)
        reader.fail("second problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
        reader.fail("expected 'p edge <n> <m>'");
      n = reader.number(t[2]);
      declared = reader.number(t[3]);
    } else if (t[0] == "e") {
      if (!n)
        reader.fail("edge line before the problem line");
      if (t.size() != 3)
        reader.fail("expected 'e <u> <v>'");
      const std::size_t u = reader.number(t[1]);
      const std::size_t v = reader.number(t[2]);
      if (u < 1 || u > *n || v < 1 || v > *n)
        reader.fail("endpoint outside [1," + std::to_string(*n) + "]");
      if (u == v)
        reader.fail("self-loop at vertex " + std::to_string(u));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      reader.fail("unknown line type '" + t[0] + "'");
    }
  }
  if (!n)
    throw InputError("graph: missing 'p edge <n> <m>' line");
  if (edges.size() != declared)
    throw InputError("graph: problem line declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(edges.size()));
  return graph_from_edges(*n, edges, std::move(labels));
}

void write_col(std::ostream &out, const Graph &g, std::string_view comment) {
  if (!comment.empty())
    out << "c " << comment << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges())
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::vector<std::string> read_labels(std::istream &in, std::size_t vertex_count) {
  LineReader reader(in, "labels");
  std::vector<std::string> labels(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::string> t;
  while (reader.next(t)) {
    if (t.size() != 2)
      reader.fail("expected '<index> <label>'");
    const std::size_t index = reader.number(t[0]);
    if (index < 1 || index > vertex_count)
      reader.fail("index outside [1," + std::to_string(vertex_count) + "]");
    if (seen[index - 1])
      reader.fail("vertex " + t[0] + " labelled twice");
    seen[index - 1] = true;
    labels[index - 1] = t[1];
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InputError("labels: not every vertex has a label");
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("labels: duplicate label");
  return labels;
}

void write_labels(std::ostream &out, const Graph &g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << v + 1 << ' ' << g.labels()[v] << '\n';
}

Graph load_graph(const std::filesystem::path &path) {
  std::vector<std::string> labels;
  // the vertex count is needed to read labels, so parse the graph first
  std::ifstream in = open_in(path);
  Graph bare;
  try {
    bare = read_col(in);
  } catch (const InputError &e) {
    throw InputError(path.string() + ": " + e.what());
  }
  const auto sidecar = labels_path(path);
  if (!std::filesystem::exists(sidecar))
    return bare;
  std::ifstream lin = open_in(sidecar);
  try {
    labels = read_labels(lin, bare.vertex_count());
  } catch (const InputError &e) {
    throw InputError(sidecar.string() + ": " + e.what());
  }
  const auto edges = bare.edges();
  return graph_from_edges(bare.vertex_count(), edges, std::move(labels));
}

void save_graph(const std::filesystem::path &path, const Graph &g, std::string_view comment) {
  {
    std::ofstream out = open_out(path);
    write_col(out, g, comment);
  }
  const auto sidecar = labels_path(path);
  if (g.has_labels()) {
    std::ofstream out = open_out(sidecar);
    write_labels(out, g);
  } else if (std::filesystem::exists(sidecar)) {
    std::filesystem::remove(sidecar);
  }
}

Vertex parse_vertex(const Graph &g, std::string_view token) {
  if (auto v = VertexResolver(g).resolve(token))
    return *v;
  throw InputError("unknown vertex '" + std::string(token) + "'");
}

Coloring read_coloring(std::istream &in, const Graph &g) {
  LineReader reader(in, "coloring");
  VertexResolver resolver(g);
  std::vector<std::string> t;
  if (!reader.next(t) || t.size() != 2 || t[0] != "k")
    reader.fail("expected 'k <number of colors>' first");
  const std::size_t k = reader.number(t[1]);
  if (k < 1)
    reader.fail("number of colors must be at least 1");

  std::vector<Color> colors(g.vertex_count(), 0);
  while (reader.next(t)) {
    if (t.size() != 2)
      reader.fail("expected '<vertex> <color>'");
    const auto v = resolver.resolve(t[0]);
    if (!v)
      reader.fail("unknown vertex '" + t[0] + "'");
    const std::size_t color = reader.number(t[1]);
    if (color < 1 || color > k)
      reader.fail("color " + t[1] + " outside [1," + std::to_string(k) + "]");
    if (colors[*v] != 0)
      reader.fail("vertex '" + t[0] + "' colored twice");
    colors[*v] = static_cast<Color>(color);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (colors[v] == 0)
      throw InputError("coloring: vertex '" + g.display(v) + "' has no color");
  return Coloring(k, std::move(colors));
}

void write_coloring(std::ostream &out, const Graph &g, const Coloring &c) {
  if (c.size() != g.vertex_count())
    throw InputError("coloring does not match the graph");
  out << "k " << c.k() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << g.display(v) << ' ' << c[v] << '\n';
}

Coloring load_coloring(const std::filesystem::path &path, const Graph &g) {
  std::ifstream in = open_in(path);
  try {
    return read_coloring(in, g);
  } catch (const InputError &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_coloring(const std::filesystem::path &path, const Graph &g, const Coloring &c) {
  std::ofstream out = open_out(path);
  write_coloring(out, g, c);
}

MapFile load_map(const std::filesystem::path &path) {
  std::ifstream in = open_in(path);
  LineReader reader(in, path.string());
  std::vector<std::string> t;
  if (!reader.next(t) || t.size() != 3 || t[0] != "map")
    reader.fail("expected 'map <source-file> <target-file>' first");
  const auto base = path.parent_path();
  const std::filesystem::path source_file = base / t[1];
  const std::filesystem::path target_file = base / t[2];
  auto source = std::make_shared<const Graph>(load_graph(source_file));
  auto target = std::make_shared<const Graph>(load_graph(target_file));

  VertexResolver from(*source);
  VertexResolver to(*target);
  constexpr Vertex unset = ~Vertex{0};
  std::vector<Vertex> image(source->vertex_count(), unset);
  while (reader.next(t)) {
    if (t.size() != 2)
      reader.fail("expected '<source vertex> <target vertex>'");
    const auto a = from.resolve(t[0]);
    if (!a)
      reader.fail("unknown source vertex '" + t[0] + "'");
    const auto b = to.resolve(t[1]);
    if (!b)
      reader.fail("unknown target vertex '" + t[1] + "'");
    if (image[*a] != unset)
      reader.fail("source vertex '" + t[0] + "' mapped twice");
    image[*a] = *b;
  }
  for (Vertex v = 0; v < image.size(); ++v)
    if (image[v] == unset)
      throw InputError(path.string() + ": source vertex '" + source->display(v) + "' is not mapped");
  return {source_file, target_file, VertexMap(std::move(source), std::move(target), std::move(image))};
}

void save_map(const std::filesystem::path &path, const VertexMap &f, const std::string &source_ref,
              const std::string &target_ref) {
  std::ofstream out = open_out(path);
  out << "map " << source_ref << ' ' << target_ref << '\n';
  for (Vertex v = 0; v < f.source().vertex_count(); ++v)
    out << f.source().display(v) << ' ' << f.target().display(f(v)) << '\n';
}

} // namespace bcolor::io
