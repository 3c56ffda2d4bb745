#pragma once

// Edge-weight machinery relative to a distinguished singular vertex t:
// lambda(u,v) cases, vertex weights W_u, outer weights O_u, and the
// identity/inequality report the structure lemmas rely on. All arithmetic
// is exact rational.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "pm3/complex.hpp"

namespace pm3 {

// Case evaluation is top-down, first match wins. "off-star" means
// u or v lies outside st(t).
mpq_class lambda_weight(const Complex3& K, VertexId t, VertexId u, VertexId v);

// W_u: sum of lambda(u,v) over v in lk(u)
mpq_class vertex_weight(const Complex3& K, VertexId t, VertexId u);

// O_u: sum of lambda(u,v) over edges uv of u not lying in st(t);
// requires u in lk(t)
mpq_class outer_weight(const Complex3& K, VertexId t, VertexId u);

struct WeightTable {
  VertexId base_vertex_t{};
  std::map<std::pair<VertexId, VertexId>, mpq_class> lambda;  // both orders

  static WeightTable build(const Complex3& K, VertexId t);
};

struct IdentityReport {
  VertexId t{};
  // (a) per-edge pair sums lambda(u,v) + lambda(v,u), with the failures listed
  bool pair_sums_one = true;
  std::vector<std::pair<Edge, mpq_class>> pair_sum_failures;
  // (b) f1(K) - f1(st(t)) vs the sum of pair sums over off-star edges
  long off_star_edge_count = 0;
  mpq_class off_star_lambda_sum;
  bool edge_identity = false;
  // (c) f1(K) >= 4 f0(K) - 3 chi(lk t) - 4 + sum of outer weights
  mpq_class outer_weight_sum;
  bool f1_inequality = false;
  // (d) W_u >= 4 for every vertex off st(t)
  bool vertex_weights_ge_4 = true;
  std::vector<std::pair<VertexId, mpq_class>> vertex_weight_failures;
  // (e) sum of O_v over lk(t) >= f0(lk t) - 1
  bool outer_weight_bound = false;
};

IdentityReport verify_weight_identities(const Complex3& K, VertexId t);

}  // namespace pm3
