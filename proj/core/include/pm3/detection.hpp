#pragma once

// Missing-face enumeration, link separation and disc tests, annulus/Moebius
// neighbourhood classification, and the missing-tetrahedron taxonomy that
// drives the reduction engine.

#include <optional>
#include <vector>

#include "pm3/complex.hpp"
#include "pm3/surface.hpp"

namespace pm3 {

// triangles with full boundary present but the face itself absent
std::vector<Triangle> missing_triangles(const Complex3& K);

// 4-sets whose four boundary triangles are present but the facet absent;
// exhaustive scan over 4-subsets of the vertex set (desk scale)
std::vector<Facet> missing_tetrahedra(const Complex3& K);

// Components of a triangle set under adjacency that crosses every shared
// edge except those in `cut`.
std::vector<std::vector<Triangle>> cut_components(
    const std::vector<Triangle>& tris, const std::vector<Edge>& cut);

struct Separation {
  bool separates = false;
  std::vector<Triangle> side1, side2;  // empty when non-separating
};

// Does the 3-cycle abc (all edges in lk(x)) separate lk(x)? Adjacency in the
// triangle graph of lk(x) crosses every edge except ab, bc, ca.
Separation separates_link(const Complex3& K, VertexId x, const Triangle& abc);

// Close the side with the cycle as boundary; disc iff chi = 1 (the side from
// a Separation is connected by construction).
bool side_is_disc(const std::vector<Triangle>& side, const Triangle& cycle);
bool side_is_disc_edges(const std::vector<Triangle>& side,
                        const std::vector<Edge>& cycle_edges);

enum class NeighborhoodType { Annulus, Moebius };

// Side-consistency parity of a walk around the 3-cycle in S.
NeighborhoodType neighborhood_type(const Surface2& S, const Triangle& cycle);

enum class TetraType {
  T1_NoSingular,
  T2_SepDisc,
  T3_Unfoldable,        // two-singularity Moebius pattern (edge unfolding)
  T4_VertexFoldPattern, // non-separating at the tracked singular vertex
  T5_SepNoDisc,
};

const char* to_string(TetraType t);

struct PerVertexReport {
  VertexId vertex{};
  Separation separation;
  bool disc1 = false, disc2 = false;           // per side, when separating
  std::optional<NeighborhoodType> neighborhood;  // when non-separating
};

struct MissingTetraReport {
  Facet tetra{};
  std::vector<PerVertexReport> per_vertex;  // one entry per tetra vertex
  TetraType type_tag = TetraType::T1_NoSingular;
  std::vector<VertexId> fold_vertices;  // apex (T4) or folded edge (T3)
};

// Classifies sigma against the tracked singular set (empty, {t} or {t,t1});
// sigma must be missing.
MissingTetraReport classify_missing_tetra(const Complex3& K, const Facet& sigma,
                                          const std::vector<VertexId>& singular);

}  // namespace pm3
