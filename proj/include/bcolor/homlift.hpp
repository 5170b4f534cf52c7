#pragma once

#include "bcolor/coloring.hpp"
#include "bcolor/graph.hpp"
#include "bcolor/kneser.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace bcolor {

/// A total vertex map between two graphs. Both graphs are shared so maps can
/// outlive the code that built them.
class VertexMap {
public:
  VertexMap(std::shared_ptr<const Graph> source, std::shared_ptr<const Graph> target,
            std::vector<Vertex> image);

  const Graph &source() const { return *source_; }
  const Graph &target() const { return *target_; }
  const std::shared_ptr<const Graph> &shared_source() const { return source_; }
  const std::shared_ptr<const Graph> &shared_target() const { return target_; }

  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex> &image() const { return image_; }

private:
  std::shared_ptr<const Graph> source_;
  std::shared_ptr<const Graph> target_;
  std::vector<Vertex> image_;
};

VertexMap identity_map(std::shared_ptr<const Graph> g);

bool is_homomorphism(const VertexMap &f);
bool is_surjective(const VertexMap &f);

/// Witness data for one target vertex u: an anchor a with f(a) = u, and for
/// each neighbour v of u a neighbour b of a with f(b) = v.
struct SlsWitness {
  Vertex anchor = 0;
  std::vector<std::pair<Vertex, Vertex>> neighbor_witnesses; // (v, b)
};

struct SlsCertificate {
  std::vector<SlsWitness> per_target; // indexed by target vertex
};

enum class SlsFailure { None, NotHomomorphism, NotSurjective, NoAnchor };

struct SlsVerdict {
  std::optional<SlsCertificate> certificate;
  SlsFailure failure = SlsFailure::None;
  /// Target vertex with no preimage (NotSurjective) or no valid anchor (NoAnchor).
  Vertex failing_vertex = 0;
  /// Source edge mapped onto a non-edge (NotHomomorphism).
  Edge bad_edge{0, 0};

  explicit operator bool() const { return certificate.has_value(); }
};

/// Decides semi-local surjectivity: f is a surjective homomorphism and every
/// target vertex u has a preimage a whose neighbourhood maps onto N(u).
/// Anchors are scanned in ascending source index; the first one that works is
/// kept.
SlsVerdict is_semi_locally_surjective(const VertexMap &f, int workers = 1);

/// Serial reference for the anchor search.
SlsVerdict sls_check_serial(const VertexMap &f);
/// Target vertices split across OpenMP threads; output equals the serial one.
SlsVerdict sls_check_parallel(const VertexMap &f, int workers = 0);

/// Re-checks a certificate edge by edge against f. Independent of the search.
bool verify_certificate(const VertexMap &f, const SlsCertificate &certificate);

/// g ∘ f, for f: G3 -> G2 and g: G2 -> G1. Throws InputError unless f's target
/// and g's source have the same structure.
VertexMap compose(const VertexMap &f, const VertexMap &g);

struct KneserStep {
  std::shared_ptr<const KneserGraph> source; // KG(n+2, m+1)
  std::shared_ptr<const KneserGraph> target; // KG(n, m)
  VertexMap map;
};

/// Image of an (m+1)-subset A of [n+2]: drop max A, unless both n+1 and n+2
/// are in A, in which case both are replaced by max([n] \ A).
SubsetMask kneser_step_image(int n, SubsetMask a);

/// The step map KG(n+2, m+1) -> KG(n, m). Requires n > 2m.
KneserStep kneser_step_hom(int n, int m);

struct LiftResult {
  Coloring coloring;
  /// witnesses[i]: b-dominating source vertex of colour i + 1, taken as the
  /// certificate anchor of the target's witness.
  std::vector<Vertex> witnesses;
};

/// Pulls a colorful colouring of f's target back along f. Throws
/// PreconditionError if f is not semi-locally-surjective or c is not colorful.
LiftResult lift_coloring(const VertexMap &f, const Coloring &c);

/// The map v -> K_k sending v to vertex c(v) - 1. Throws InputError when a
/// colour class is empty or c is not proper.
VertexMap coloring_as_hom(std::shared_ptr<const Graph> g, const Coloring &c);

/// Inverse of coloring_as_hom. Throws InputError unless the target is complete.
Coloring hom_as_coloring(const VertexMap &f);

} // namespace bcolor
