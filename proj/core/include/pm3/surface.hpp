#pragma once

// Closed triangulated surfaces (vertex links of a normal 3-pseudomanifold)
// and their classification by Euler characteristic and orientability.

#include <cstdint>
#include <string>
#include <vector>

#include "pm3/complex.hpp"

namespace pm3 {

class Surface2 {
 public:
  static Surface2 from_triangles(std::vector<Triangle> triangles);

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(const Edge& e) const;
  bool has_triangle(const Triangle& t) const;

  // neighbours of v in the surface's 1-skeleton
  const std::vector<VertexId>& link_vertices(VertexId v) const;
  std::vector<Triangle> star_triangles(VertexId v) const;

  long euler_characteristic() const;

  // closed: every edge in exactly two triangles, connected, vertex links
  // single cycles. On failure *why names the first violated condition.
  bool is_closed_surface(std::string* why = nullptr) const;

  bool operator==(const Surface2& o) const { return triangles_ == o.triangles_; }

 private:
  Surface2() = default;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<VertexId>> nbrs_;
  std::size_t vertex_index(VertexId v) const;
};

enum class SurfaceKind { Sphere, OrientableGenus, NonOrientableGenus };

struct SurfaceType {
  SurfaceKind kind = SurfaceKind::Sphere;
  int genus = 0;  // 0 for sphere, g for orientable, k = crosscap count otherwise
  long euler_characteristic = 2;
  int first_betti_mod2 = 0;  // 2 - chi for non-spheres

  bool is_sphere() const { return kind == SurfaceKind::Sphere; }
  bool orientable() const { return kind != SurfaceKind::NonOrientableGenus; }
};

std::string to_string(const SurfaceType& t);

// Requires a closed connected surface; orientability decided by propagating
// a facet orientation across edge adjacencies.
SurfaceType classify_surface(const Surface2& S);

// g2 of a 2-complex: f1 - 3 f0 + 6.
long g2_of_surface(const Surface2& S);

// Non-sphere links with classification, ascending by vertex label.
std::vector<std::pair<VertexId, SurfaceType>> singular_vertices(const Complex3& K);

// The distinguished singular vertex t: maximal b1(lk t), then d(t) >= 8 when
// achievable among the maxima, then smallest label. nullopt when K has no
// singular vertex.
std::optional<VertexId> distinguished_singular_vertex(const Complex3& K);

}  // namespace pm3
