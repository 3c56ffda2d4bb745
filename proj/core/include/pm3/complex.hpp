#pragma once

// Facet-set model of a pure 3-dimensional simplicial complex over integer
// vertex labels, with eagerly built face and link caches. Complexes are
// immutable after construction; every operation in this library returns a
// new complex.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pm3 {

using VertexId = std::uint32_t;
using Edge = std::array<VertexId, 2>;      // sorted
using Triangle = std::array<VertexId, 3>;  // sorted
using Facet = std::array<VertexId, 4>;     // sorted

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

Edge make_edge(VertexId a, VertexId b);
Triangle make_triangle(VertexId a, VertexId b, VertexId c);
Facet make_facet(VertexId a, VertexId b, VertexId c, VertexId d);

std::string to_string(const Edge& e);
std::string to_string(const Triangle& t);
std::string to_string(const Facet& f);

// f_{-1} = 1 is implicit.
struct FVector {
  long f0 = 0, f1 = 0, f2 = 0, f3 = 0;
  bool operator==(const FVector&) const = default;
};

// h-vector of Eq (2.1) at d = 3, plus g2 = h2 - h1.
struct GInvariants {
  std::array<long, 5> h{};
  long g2 = 0;
};

struct ValidationReport {
  bool triangles_in_two_facets = true;
  bool strongly_connected = true;
  bool vertex_links_closed_surfaces = true;
  bool edge_links_single_cycles = true;
  std::vector<std::string> failures;
  bool ok() const {
    return triangles_in_two_facets && strongly_connected &&
           vertex_links_closed_surfaces && edge_links_single_cycles;
  }
};

class Surface2;

class Complex3 {
 public:
  // Duplicate facets collapse; throws on repeated vertices or empty input.
  static Complex3 from_facets(std::vector<Facet> facets);

  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(const Edge& e) const;
  bool has_triangle(const Triangle& t) const;
  bool has_facet(const Facet& f) const;

  // d(v): vertex count of lk(v).
  std::size_t degree(VertexId v) const { return link_vertices(v).size(); }
  // d(uv): vertex count of lk(uv).
  std::size_t edge_degree(const Edge& e) const {
    return edge_link_vertices(e).size();
  }

  // lk(v) as the set of triangles opposite v; throws if v not present.
  const std::vector<Triangle>& link_triangles(VertexId v) const;
  const std::vector<VertexId>& link_vertices(VertexId v) const;
  // lk(uv) as the set of vertices opposite the edge.
  const std::vector<VertexId>& edge_link_vertices(const Edge& e) const;
  // lk(uv) ordered into a closed cycle; throws if it is not one.
  std::vector<VertexId> edge_link_cycle(const Edge& e) const;

  Surface2 vertex_link(VertexId v) const;

  std::vector<Facet> star(VertexId v) const;
  std::vector<Facet> star(const Edge& e) const;

  bool adjacent(VertexId u, VertexId v) const;
  // true iff u lies in st(v), i.e. u == v or uv is an edge.
  bool in_star(VertexId u, VertexId v) const;

  VertexId max_vertex() const { return vertices_.back(); }
  VertexId fresh_vertex() const { return max_vertex() + 1; }

  bool operator==(const Complex3& other) const {
    return facets_ == other.facets_;
  }

 private:
  Complex3() = default;
  void build_caches();

  std::vector<Facet> facets_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<Triangle>> vertex_links_;   // parallel to vertices_
  std::vector<std::vector<VertexId>> vertex_nbrs_;    // parallel to vertices_
  std::vector<std::vector<VertexId>> edge_links_;     // parallel to edges_
  std::size_t vertex_index(VertexId v) const;
  std::size_t edge_index(const Edge& e) const;
};

FVector f_vector(const Complex3& K);
GInvariants g_invariants(const Complex3& K);

// Vertex/edge counts of st(v); f0 = d(v)+1, f1 = f1(lk) + d(v).
struct StarCounts {
  long f0 = 0, f1 = 0;
};
StarCounts star_counts(const Complex3& K, VertexId v);

ValidationReport validate_normal(const Complex3& K);

// Graph distance in the 1-skeleton; nullopt when disconnected.
std::optional<int> skeleton_distance(const Complex3& K, VertexId a, VertexId b);

}  // namespace pm3
