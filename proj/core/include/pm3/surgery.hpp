#pragma once

// Global surgery: connected sum, handle addition, vertex folding and edge
// folding via admissible facet bijections, together with the constructive
// inverses (splitting at a missing tetrahedron, vertex/edge unfolding).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pm3/complex.hpp"
#include "pm3/detection.hpp"

namespace pm3 {

enum class GlueKind { Sum, Handle, VertexFold, EdgeFold };

const char* to_string(GlueKind k);

// pairing source[i] -> image[i]; fixed vertices pair with themselves
struct FacetBijection {
  Facet source{};
  Facet target{};
  std::array<VertexId, 4> image{};  // image[i] = psi(source[i])

  VertexId apply(VertexId x) const;
  std::vector<std::pair<VertexId, VertexId>> pairs() const;
};

FacetBijection make_bijection(
    const Facet& source, const Facet& target,
    const std::vector<std::pair<VertexId, VertexId>>& pairs);

struct Admissibility {
  bool ok = true;
  std::string reason;
  std::vector<VertexId> witness_path;  // a violating short path, if any
};

// Path-length conditions within one complex (Handle / VertexFold / EdgeFold,
// and Sum when both facets live in the same object).
Admissibility check_admissible(const Complex3& K, const FacetBijection& psi,
                               GlueKind kind);

struct SurgeryRecord {
  GlueKind kind{};
  Facet sigma1{}, sigma2{};
  std::array<VertexId, 4> image{};
  std::map<VertexId, VertexId> relabel;  // applied to K2 during a sum
  long g2_delta = 0;
};

// Glue K2's sigma2 onto K1's sigma1 along psi (sigma1[i] ~ psi-image), remove
// the identified facet. K1 keeps its labels; K2 vertices keep theirs unless
// they collide. g2 is additive.
Complex3 connected_sum(const Complex3& K1, const Facet& sigma1,
                       const Complex3& K2, const Facet& sigma2,
                       const std::vector<std::pair<VertexId, VertexId>>& pairs,
                       SurgeryRecord* rec = nullptr);

// Identify two facets of one complex (admissible for Handle); g2 += 10.
Complex3 handle_addition(const Complex3& K, const FacetBijection& psi,
                         SurgeryRecord* rec = nullptr);

// Facets meeting in exactly the fixed vertex; g2 += 6.
Complex3 vertex_folding(const Complex3& K, const FacetBijection& psi,
                        SurgeryRecord* rec = nullptr);

// Facets meeting in exactly the fixed edge; g2 += 3.
Complex3 edge_folding(const Complex3& K, const FacetBijection& psi,
                      SurgeryRecord* rec = nullptr);

// Inverse data for re-folding during certificate replay.
struct UnfoldRecord {
  GlueKind kind{};
  FacetBijection refold;  // apply vertex/edge_folding with this to undo
  std::vector<VertexId> fresh;
  long g2_delta = 0;
};

struct HandleWitness {
  Complex3 complex;       // handle undone
  FacetBijection rehandle;
  std::vector<VertexId> fresh;
};

struct SplitOutcome {
  bool is_sum = false;
  // when is_sum: the two summands, each containing sigma as a facet; labels
  // are inherited from K, shared exactly on sigma
  std::optional<Complex3> left, right;
  std::optional<HandleWitness> handle;  // when the cut stays connected
  Facet sigma{};
};

// Cut along the boundary 2-sphere of a missing tetrahedron whose four
// vertex links are all separated by the opposite triangles.
SplitOutcome split_connected_sum(const Complex3& K, const Facet& sigma);

// Lemma 2.7 pattern: boundary separates lk(x) for the three non-apex
// vertices and does not separate lk(apex); g2 -= 6.
Complex3 vertex_unfolding(const Complex3& K, const Facet& sigma, VertexId apex,
                          UnfoldRecord* rec = nullptr);

// Lemma 2.8 pattern: sigma = {a,b,u,v} with fold edge uv; the links of u and
// v carry Moebius neighbourhoods of the opposite cycles; g2 -= 3.
Complex3 edge_unfolding(const Complex3& K, const Facet& sigma, const Edge& uv,
                        UnfoldRecord* rec = nullptr);

}  // namespace pm3
