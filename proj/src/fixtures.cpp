#include "bcolor/fixtures.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

namespace bcolor::fixtures {

namespace {

using Triple = std::array<int, 3>;

SubsetMask mask_of(const Triple &t) {
  return to_mask(KneserLabel{7, {t[0], t[1], t[2]}});
}

// {fixed, x, y} for x < y drawn from `pool`.
std::vector<SubsetMask> with_fixed(int fixed, std::initializer_list<int> pool) {
  std::vector<int> p(pool);
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      out.push_back(to_mask(KneserLabel{7, {fixed}}) | (SubsetMask{1} << (p[i] - 1)) |
                    (SubsetMask{1} << (p[j] - 1)));
  return out;
}

std::vector<SubsetMask> masks(std::initializer_list<Triple> triples) {
  std::vector<SubsetMask> out;
  for (const Triple &t : triples)
    out.push_back(mask_of(t));
  return out;
}

std::vector<SubsetMask> minus(std::vector<SubsetMask> set, const std::vector<SubsetMask> &removed) {
  std::erase_if(set, [&](SubsetMask m) { return std::find(removed.begin(), removed.end(), m) != removed.end(); });
  return set;
}

// Hand-expanded class lists.
const std::array<std::vector<Triple>, 4> explicit_classes = {{
    {{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {1, 2, 6}, {1, 2, 7}, {1, 3, 6}, {1, 6, 7}, {1, 4, 6}},
    {{1, 2, 5}, {1, 3, 5}, {1, 5, 6}, {1, 5, 7}, {2, 3, 5}, {2, 4, 5},
     {2, 5, 7}, {3, 4, 5}, {3, 5, 6}, {3, 5, 7}, {4, 5, 6}, {5, 6, 7}},
    {{1, 2, 4}, {1, 3, 7}, {4, 5, 7}, {1, 4, 7}, {2, 6, 7}},
    {{1, 3, 4}, {2, 3, 4}, {2, 4, 6}, {2, 4, 7}, {3, 4, 6},
     {3, 4, 7}, {4, 6, 7}, {2, 3, 6}, {2, 3, 7}, {3, 6, 7}},
}};

const std::array<Triple, 4> designated_triples = {{{1, 2, 3}, {5, 6, 7}, {2, 6, 7}, {1, 3, 4}}};

} // namespace

std::array<std::vector<SubsetMask>, 4> kg73_set_builder_classes() {
  std::array<std::vector<SubsetMask>, 4> out;
  out[0] = masks({{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {1, 2, 6}, {1, 2, 7}, {1, 3, 6}, {1, 6, 7}, {1, 4, 6}});
  out[1] = minus(with_fixed(5, {1, 2, 3, 4, 6, 7}), masks({{1, 4, 5}, {2, 5, 6}, {4, 5, 7}}));
  out[2] = masks({{1, 2, 4}, {1, 3, 7}, {4, 5, 7}, {1, 4, 7}, {2, 6, 7}});
  out[3] = minus(with_fixed(4, {1, 2, 3, 6, 7}), masks({{1, 2, 4}, {1, 4, 6}, {1, 4, 7}}));
  for (SubsetMask m : masks({{2, 3, 6}, {2, 3, 7}, {3, 6, 7}}))
    out[3].push_back(m);
  return out;
}

Kg73Fixture kg73_colorful_four() {
  auto graph = std::make_shared<const KneserGraph>(7, 3);
  const std::size_t n = graph->graph().vertex_count();

  const auto builder = kg73_set_builder_classes();
  std::vector<Color> colors(n, 0);
  Kg73Fixture fixture;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<SubsetMask> listed;
    for (const Triple &t : explicit_classes[i]) {
      KneserLabel label{7, {t[0], t[1], t[2]}};
      const Vertex v = graph->vertex_of(label);
      if (colors[v] != 0)
        throw std::logic_error("KG(7,3) fixture: " + render_label(label) + " listed in two classes");
      colors[v] = static_cast<Color>(i + 1);
      fixture.classes[i].push_back(std::move(label));
      listed.push_back(mask_of(t));
    }
    auto expected = builder[i];
    std::sort(listed.begin(), listed.end());
    std::sort(expected.begin(), expected.end());
    if (listed != expected)
      throw std::logic_error("KG(7,3) fixture: class V" + std::to_string(i + 1) +
                             " disagrees with its set-builder form");
  }
  if (std::count(colors.begin(), colors.end(), Color{0}) != 0)
    throw std::logic_error("KG(7,3) fixture: classes do not cover every vertex");

  for (std::size_t i = 0; i < 4; ++i) {
    const Triple &t = designated_triples[i];
    fixture.designated[i] = graph->vertex_of(KneserLabel{7, {t[0], t[1], t[2]}});
    if (colors[fixture.designated[i]] != i + 1)
      throw std::logic_error("KG(7,3) fixture: designated vertex outside its class");
  }
  fixture.coloring = Coloring(4, std::move(colors));
  fixture.graph = std::move(graph);
  return fixture;
}

Coloring kg73_colorful_five() {
  // colours of the 35 vertices of KG(7,3) in colex order
  static constexpr std::array<Color, 35> colors = {
      1, 2, 3, 4, 5, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2,
      1, 2, 3, 3, 3, 3, 3, 1, 1, 1, 4, 3, 3, 4, 3, 4, 5};
  return Coloring(5, std::vector<Color>(colors.begin(), colors.end()));
}

Graph petersen() { return kneser_graph(5, 2).graph(); }

Graph q3() {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < 8; ++v) {
    labels.push_back(std::string{static_cast<char>('0' + (v >> 2 & 1)), static_cast<char>('0' + (v >> 1 & 1)),
                                 static_cast<char>('0' + (v & 1))});
    for (Vertex b = 1; b < 8; b <<= 1)
      if (!(v & b))
        edges.push_back({v, v | b});
  }
  return graph_from_edges(8, edges, std::move(labels));
}

Graph heawood() {
  // lines of the Fano plane are the translates of the difference set {0,1,3} mod 7
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int p = 0; p < 7; ++p)
    labels.push_back("P" + std::to_string(p + 1));
  for (int l = 0; l < 7; ++l)
    labels.push_back("L" + std::to_string(l + 1));
  for (Vertex line = 0; line < 7; ++line)
    for (Vertex offset : {0u, 1u, 3u})
      edges.push_back({(line + offset) % 7, 7 + line});
  return graph_from_edges(14, edges, std::move(labels));
}

} // namespace bcolor::fixtures
