#pragma once

// Cross-check of g2 through generic stress spaces: build the equilibrium
// stress system of a deterministic pseudo-random integer embedding into R^4
// and compare its null-space dimension with the combinatorial g2. Rank is
// computed by exact rational elimination; there are no tolerances.

#include <gmpxx.h>

#include <array>
#include <map>
#include <vector>

#include "pm3/complex.hpp"

namespace pm3 {

struct Embedding {
  unsigned seed = 0;
  std::map<VertexId, std::array<mpz_class, 4>> coords;
};

// Integer coordinates drawn from [-N, N], N = 1000 * f0 (widened on retry),
// pairwise distinct per axis; deterministic in (K, seed).
Embedding generic_embedding(const Complex3& K, unsigned seed);

// rows: 4 per vertex, columns: one per edge; entry for (v,i) x uv is the
// i-th coordinate of f(v) - f(u)
struct StressSystem {
  std::vector<Edge> columns;
  std::vector<std::vector<mpq_class>> rows;
};

StressSystem stress_system(const Complex3& K, const Embedding& emb);

// f1 - rank of the stress system
long stress_space_dim(const Complex3& K, const Embedding& emb);

struct StressReport {
  long g2 = 0;
  std::vector<std::pair<unsigned, long>> dims;  // per seed
  bool pass = false;
};

StressReport check_g2_stress(const Complex3& K,
                             const std::vector<unsigned>& seeds);

}  // namespace pm3
