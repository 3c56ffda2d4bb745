#include "pm3/weights.hpp"

#include <set>

#include "pm3/surface.hpp"

namespace pm3 {

namespace {

// edge uv lies in st(t) iff t is an endpoint or tuv is a triangle
bool edge_in_star(const Complex3& K, VertexId t, VertexId u, VertexId v) {
  if (u == t || v == t) return true;
  return K.has_triangle(make_triangle(t, u, v));
}

mpq_class lambda_impl(const Complex3& K, VertexId t, VertexId u, VertexId v,
                      bool allow_reciprocal) {
  if (!K.has_edge(make_edge(u, v)))
    throw error("lambda: {" + std::to_string(u) + " " + std::to_string(v) +
                "} not an edge");
  const bool off_star = !K.in_star(u, t) || !K.in_star(v, t);
  const std::size_t du = K.degree(u);
  if (off_star) {
    if (du == 6) return mpq_class(2, 3);
    if (du == 7) {
      const std::size_t duv = K.edge_degree(make_edge(u, v));
      if (duv == 5) return mpq_class(3, 4);
      if (duv == 4) return mpq_class(1, 2);
    }
    if (du == 8) return mpq_class(1, 2);
    if (du >= 9 && K.degree(v) <= 8 && allow_reciprocal)
      return 1 - lambda_impl(K, t, v, u, false);
  }
  return mpq_class(1, 2);
}

}  // namespace

mpq_class lambda_weight(const Complex3& K, VertexId t, VertexId u, VertexId v) {
  if (!K.has_vertex(t)) throw error("lambda: no vertex " + std::to_string(t));
  return lambda_impl(K, t, u, v, true);
}

mpq_class vertex_weight(const Complex3& K, VertexId t, VertexId u) {
  mpq_class sum = 0;
  for (VertexId v : K.link_vertices(u)) sum += lambda_weight(K, t, u, v);
  return sum;
}

mpq_class outer_weight(const Complex3& K, VertexId t, VertexId u) {
  if (!K.adjacent(u, t))
    throw error("outer_weight: " + std::to_string(u) + " not in lk(" +
                std::to_string(t) + ")");
  mpq_class sum = 0;
  for (VertexId v : K.link_vertices(u)) {
    if (edge_in_star(K, t, u, v)) continue;
    sum += lambda_weight(K, t, u, v);
  }
  return sum;
}

WeightTable WeightTable::build(const Complex3& K, VertexId t) {
  WeightTable w;
  w.base_vertex_t = t;
  for (const auto& e : K.edges()) {
    w.lambda[{e[0], e[1]}] = lambda_weight(K, t, e[0], e[1]);
    w.lambda[{e[1], e[0]}] = lambda_weight(K, t, e[1], e[0]);
  }
  return w;
}

IdentityReport verify_weight_identities(const Complex3& K, VertexId t) {
  if (singular_vertices(K).empty() ||
      classify_surface(K.vertex_link(t)).is_sphere())
    throw error("verify_weight_identities: " + std::to_string(t) +
                " is not singular");

  IdentityReport rep;
  rep.t = t;
  WeightTable w = WeightTable::build(K, t);

  long star_edges = 0;
  for (const auto& e : K.edges()) {
    const mpq_class sum =
        w.lambda.at({e[0], e[1]}) + w.lambda.at({e[1], e[0]});
    if (sum != 1) {
      rep.pair_sums_one = false;
      rep.pair_sum_failures.emplace_back(e, sum);
    }
    if (edge_in_star(K, t, e[0], e[1])) {
      ++star_edges;
    } else {
      ++rep.off_star_edge_count;
      rep.off_star_lambda_sum += sum;
    }
  }
  const FVector f = f_vector(K);
  const StarCounts st = star_counts(K, t);
  if (st.f1 != star_edges)
    throw error("verify_weight_identities: star edge count mismatch");
  rep.edge_identity = (mpq_class(f.f1 - st.f1) == rep.off_star_lambda_sum);

  const long chi = K.vertex_link(t).euler_characteristic();
  for (VertexId u : K.link_vertices(t)) rep.outer_weight_sum += outer_weight(K, t, u);
  rep.f1_inequality =
      mpq_class(f.f1) >= mpq_class(4 * f.f0 - 3 * chi - 4) + rep.outer_weight_sum;

  for (VertexId u : K.vertices()) {
    if (K.in_star(u, t)) continue;
    const mpq_class wu = vertex_weight(K, t, u);
    if (wu < 4) {
      rep.vertex_weights_ge_4 = false;
      rep.vertex_weight_failures.emplace_back(u, wu);
    }
  }

  rep.outer_weight_bound =
      rep.outer_weight_sum >= mpq_class(static_cast<long>(K.degree(t)) - 1);
  return rep;
}

}  // namespace pm3
