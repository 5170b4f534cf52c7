#include "bcolor/homlift.hpp"

#include "bcolor/error.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace bcolor {

VertexMap::VertexMap(std::shared_ptr<const Graph> source, std::shared_ptr<const Graph> target,
                     std::vector<Vertex> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_)
    throw InputError("vertex map needs both a source and a target graph");
  if (image_.size() != source_->vertex_count())
    throw InputError("vertex map covers " + std::to_string(image_.size()) +
                     " vertices, source graph has " + std::to_string(source_->vertex_count()));
  for (std::size_t v = 0; v < image_.size(); ++v)
    if (image_[v] >= target_->vertex_count())
      throw InputError("vertex " + std::to_string(v) + " maps to " + std::to_string(image_[v]) +
                       ", outside the target graph");
}

VertexMap identity_map(std::shared_ptr<const Graph> g) {
  std::vector<Vertex> image(g->vertex_count());
  std::iota(image.begin(), image.end(), Vertex{0});
  return VertexMap(g, g, std::move(image));
}

bool is_homomorphism(const VertexMap &f) {
  for (const Edge &e : f.source().edges())
    if (!f.target().adjacent(f(e.u), f(e.v)))
      return false;
  return true;
}

bool is_surjective(const VertexMap &f) {
  std::vector<bool> hit(f.target().vertex_count(), false);
  for (Vertex image : f.image())
    hit[image] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

namespace {

std::vector<std::vector<Vertex>> preimages(const VertexMap &f) {
  std::vector<std::vector<Vertex>> out(f.target().vertex_count());
  for (Vertex v = 0; v < f.source().vertex_count(); ++v)
    out[f(v)].push_back(v);
  return out;
}

// Homomorphism and surjectivity; fills the verdict and returns false on failure.
bool precheck(const VertexMap &f, const std::vector<std::vector<Vertex>> &pre, SlsVerdict &verdict) {
  for (const Edge &e : f.source().edges())
    if (!f.target().adjacent(f(e.u), f(e.v))) {
      verdict.failure = SlsFailure::NotHomomorphism;
      verdict.bad_edge = e;
      return false;
    }
  for (Vertex u = 0; u < pre.size(); ++u)
    if (pre[u].empty()) {
      verdict.failure = SlsFailure::NotSurjective;
      verdict.failing_vertex = u;
      return false;
    }
  return true;
}

std::optional<SlsWitness> find_anchor(const VertexMap &f, const std::vector<Vertex> &candidates, Vertex u) {
  const Graph &source = f.source();
  const Graph &target = f.target();
  VertexSet covered(target.vertex_count());
  for (Vertex a : candidates) {
    covered.reset();
    for (Vertex b : source.neighbors(a))
      covered.set(f(b));
    if (!target.row(u).is_subset_of(covered))
      continue;
    SlsWitness witness{a, {}};
    witness.neighbor_witnesses.reserve(target.degree(u));
    for (Vertex v : target.neighbors(u)) {
      const auto nbrs = source.neighbors(a);
      const auto b = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex x) { return f(x) == v; });
      assert(b != nbrs.end());
      witness.neighbor_witnesses.emplace_back(v, *b);
    }
    return witness;
  }
  return std::nullopt;
}

SlsVerdict assemble(std::vector<std::optional<SlsWitness>> anchors) {
  SlsVerdict verdict;
  SlsCertificate certificate;
  certificate.per_target.reserve(anchors.size());
  for (Vertex u = 0; u < anchors.size(); ++u) {
    if (!anchors[u]) {
      verdict.failure = SlsFailure::NoAnchor;
      verdict.failing_vertex = u;
      return verdict;
    }
    certificate.per_target.push_back(std::move(*anchors[u]));
  }
  verdict.certificate = std::move(certificate);
  return verdict;
}

} // namespace

SlsVerdict sls_check_serial(const VertexMap &f) {
  SlsVerdict verdict;
  const auto pre = preimages(f);
  if (!precheck(f, pre, verdict))
    return verdict;
  std::vector<std::optional<SlsWitness>> anchors(pre.size());
  for (Vertex u = 0; u < pre.size(); ++u)
    anchors[u] = find_anchor(f, pre[u], u);
  return assemble(std::move(anchors));
}

SlsVerdict sls_check_parallel(const VertexMap &f, int workers) {
  SlsVerdict verdict;
  const auto pre = preimages(f);
  if (!precheck(f, pre, verdict))
    return verdict;
  if (workers <= 0)
    workers = omp_get_max_threads();
  std::vector<std::optional<SlsWitness>> anchors(pre.size());
  const auto count = static_cast<std::int64_t>(pre.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
  for (std::int64_t u = 0; u < count; ++u)
    anchors[u] = find_anchor(f, pre[u], static_cast<Vertex>(u));
  return assemble(std::move(anchors));
}

SlsVerdict is_semi_locally_surjective(const VertexMap &f, int workers) {
  return workers == 1 ? sls_check_serial(f) : sls_check_parallel(f, workers);
}

bool verify_certificate(const VertexMap &f, const SlsCertificate &certificate) {
  const Graph &source = f.source();
  const Graph &target = f.target();
  if (!is_homomorphism(f) || certificate.per_target.size() != target.vertex_count())
    return false;
  for (Vertex u = 0; u < target.vertex_count(); ++u) {
    const SlsWitness &w = certificate.per_target[u];
    if (w.anchor >= source.vertex_count() || f(w.anchor) != u)
      return false;
    VertexSet listed(target.vertex_count());
    for (const auto &[v, b] : w.neighbor_witnesses) {
      if (v >= target.vertex_count() || b >= source.vertex_count())
        return false;
      if (!target.adjacent(u, v) || listed.test(v))
        return false;
      if (!source.adjacent(w.anchor, b) || f(b) != v)
        return false;
      listed.set(v);
    }
    if (listed != target.row(u))
      return false;
  }
  return true;
}

VertexMap compose(const VertexMap &f, const VertexMap &g) {
  if (!f.target().same_structure(g.source()))
    throw InputError("cannot compose: target of the first map is not the source of the second");
  std::vector<Vertex> image(f.source().vertex_count());
  for (Vertex v = 0; v < image.size(); ++v)
    image[v] = g(f(v));
  return VertexMap(f.shared_source(), g.shared_target(), std::move(image));
}

SubsetMask kneser_step_image(int n, SubsetMask a) {
  const SubsetMask top = (SubsetMask{1} << n) | (SubsetMask{1} << (n + 1));
  auto highest = [](SubsetMask m) { return SubsetMask{1} << (63 - std::countl_zero(m)); };
  if ((a & top) != top)
    return a & ~highest(a);
  const SubsetMask rest = a & ~top;
  const SubsetMask free = ((SubsetMask{1} << n) - 1) & ~rest;
  return rest | highest(free);
}

KneserStep kneser_step_hom(int n, int m) {
  if (m < 1 || n <= 2 * m)
    throw InputError("kneser step map needs m >= 1 and n > 2m, got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m));
  auto source = std::make_shared<const KneserGraph>(n + 2, m + 1);
  auto target = std::make_shared<const KneserGraph>(n, m);
  std::vector<Vertex> image(source->graph().vertex_count());
  for (Vertex v = 0; v < image.size(); ++v) {
    const SubsetMask b = kneser_step_image(n, source->mask(v));
    assert(std::popcount(b) == m && b < (SubsetMask{1} << n));
    image[v] = target->vertex_of(from_mask(n, b));
  }
  VertexMap map(source->shared_graph(), target->shared_graph(), std::move(image));
  return {std::move(source), std::move(target), std::move(map)};
}

LiftResult lift_coloring(const VertexMap &f, const Coloring &c) {
  if (c.size() != f.target().vertex_count())
    throw InputError("coloring covers " + std::to_string(c.size()) + " vertices, target graph has " +
                     std::to_string(f.target().vertex_count()));
  const SlsVerdict sls = is_semi_locally_surjective(f);
  if (!sls)
    throw PreconditionError("map is not semi-locally-surjective");
  const ColorfulVerdict colorful = check_colorful(f.target(), c);
  if (!colorful.colorful)
    throw PreconditionError("coloring is not colorful on the target graph");

  std::vector<Color> colors(f.source().vertex_count());
  for (Vertex v = 0; v < colors.size(); ++v)
    colors[v] = c[f(v)];
  LiftResult result{Coloring(c.k(), std::move(colors)), {}};
  result.witnesses.reserve(c.k());
  for (Vertex x : colorful.witnesses) {
    const Vertex a = sls.certificate->per_target[x].anchor;
    assert(is_b_dominating(f.source(), result.coloring, a));
    result.witnesses.push_back(a);
  }
  return result;
}

VertexMap coloring_as_hom(std::shared_ptr<const Graph> g, const Coloring &c) {
  if (!is_proper(*g, c))
    throw InputError("coloring is not proper, so it is no homomorphism to a complete graph");
  std::vector<bool> used(c.k(), false);
  for (Color col : c.colors())
    used[col - 1] = true;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      throw InputError("color class " + std::to_string(i + 1) + " is empty");
  std::vector<Vertex> image(c.size());
  for (Vertex v = 0; v < image.size(); ++v)
    image[v] = c[v] - 1;
  return VertexMap(std::move(g), std::make_shared<const Graph>(complete_graph(c.k())), std::move(image));
}

Coloring hom_as_coloring(const VertexMap &f) {
  const std::size_t k = f.target().vertex_count();
  if (f.target().edge_count() != k * (k - 1) / 2)
    throw InputError("target graph is not complete");
  std::vector<Color> colors(f.source().vertex_count());
  for (Vertex v = 0; v < colors.size(); ++v)
    colors[v] = f(v) + 1;
  return Coloring(k, std::move(colors));
}

} // namespace bcolor
