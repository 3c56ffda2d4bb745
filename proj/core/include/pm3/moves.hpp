#pragma once

// Local combinatorial operations: bistellar 1-/2-moves, edge contraction and
// expansion, central retriangulation, and the composite operations (C), (C')
// and (D). Every operation checks its preconditions, validates the result,
// and asserts the expected g2 delta by recomputation.

#include <optional>
#include <vector>

#include "pm3/complex.hpp"

namespace pm3 {

enum class MoveKind {
  Bistellar1,
  Bistellar2,
  EdgeContraction,
  EdgeExpansion,
  CentralRetriangulation,
  OpC,
  OpCPrime,
  OpD,
};

const char* to_string(MoveKind k);

// Parameters sufficient to re-apply the move, plus enough context to apply
// its inverse (for certificates).
//
// args layout by kind:
//   Bistellar2:             {u, v, a, b, c}        edge uv, lk(uv) = (a,b,c)
//   Bistellar1:             {a, b, c, u, v}        triangle, lk(abc) = {u,v}
//   EdgeContraction:        {u, v, w}              edge, surviving label
//   EdgeExpansion:          {w, u, v}              split vertex, cone labels
//   CentralRetriangulation: {u, v, w}              edge, center label
//   OpC:                    {w, a, b, c, x1, x2}
//   OpCPrime:               {u, v, z, a, b, c}     z = new cone label
//   OpD:                    {u, w, c, t, s}        retriangulate st(uw) with
//                                                  center c, contract ut -> s
struct MoveRecord {
  MoveKind kind{};
  std::vector<VertexId> args;
  std::vector<VertexId> cycle;    // EdgeExpansion: the separating cycle;
                                  // EdgeContraction: lk(uv) before the move
  Triangle side_rep{};            // a triangle on u's (resp. x1's) side
  bool has_side_rep = false;
  std::vector<VertexId> fresh;
  long g2_delta = 0;
};

struct MoveResult {
  Complex3 complex;
  MoveRecord record;
};

// (A): requires d(uv) = 3 and the spanned triangle missing; g2 drops by 1.
MoveResult bistellar_2_move(const Complex3& K, const Edge& uv);

// (A'): requires lk(abc) = {u,v} with uv not an edge; g2 rises by 1.
MoveResult bistellar_1_move(const Complex3& K, const Triangle& abc);

// (B): requires the link condition lk(u) cap lk(v) = lk(uv) and a valid
// result on >= 5 vertices; g2 drops by d(uv) - 3. survivor may be u, v or a
// fresh label.
MoveResult edge_contraction(const Complex3& K, const Edge& uv,
                            VertexId survivor);

// (B'): splits w along a separating cycle of lk(w) (at least one side a
// disc); the side containing u_side_rep is coned by u, the other by v;
// g2 rises by |cycle| - 3.
MoveResult edge_expansion(const Complex3& K, VertexId w,
                          const std::vector<VertexId>& cycle, VertexId u,
                          VertexId v, const Triangle& u_side_rep);

// Definition 2.2: replace st(uv) by the cone from a new center vertex;
// f1 rises by d(uv) + 1.
MoveResult central_retriangulation(const Complex3& K, const Edge& uv,
                                   VertexId center);

// (C): requires lk(w) a sphere, boundary of abc in lk(w), abc missing
// globally; g2 drops by 1. x1 gets the side containing the smallest
// triangle.
MoveResult op_c(const Complex3& K, VertexId w, const Triangle& abc);

// (C'): requires u, v non-singular, uv not an edge, st(u) cap st(v) exactly
// one triangle; cones the boundary of st(u) cup st(v) by z; g2 rises by 1.
MoveResult op_c_prime(const Complex3& K, VertexId u, VertexId v, VertexId z);

// (D), restricted to the pattern used by the proofs: central retriangulation
// of one edge star followed by one edge contraction.
MoveResult op_d(const Complex3& K, const Edge& uw, VertexId center,
                const Edge& ut, VertexId survivor);

enum class MoveScanMode { A, B, C, D, All };

// First strictly g2-reducing move in deterministic (lexicographic) candidate
// order, or nullopt if K admits none.
std::optional<MoveResult> find_g2_reducing_move(const Complex3& K,
                                                MoveScanMode mode);

}  // namespace pm3
