#pragma once

// Deterministic constructors: boundary of the 4-simplex, chains of connected
// sums, the handle example (g2 = 10, no singularities), the sharp examples
// with one singularity (g2 = 10 + 6n) and two singularities (g2 = 7 + 6m),
// and the minimal test surfaces.

#include "pm3/complex.hpp"
#include "pm3/surface.hpp"

namespace pm3 {

enum class GeneratorKind {
  Boundary4Simplex,
  ChainSum,
  HandleExample,
  SharpOneSingularity,
  SharpTwoSingularities,
  SurfaceRP2_6,
  SurfaceTorus7,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Boundary4Simplex;
  int n = 1;            // chain length / handle count / fold count
  unsigned seed = 0;    // accepted for reproducibility bookkeeping; the
                        // canonical constructions do not depend on it
  bool orientable = true;  // fold orientation (torus vs Klein bottle links)
};

Complex3 boundary_4_simplex();

// k copies of the boundary 4-simplex summed end to end (k >= 1)
Complex3 chain_sum(int k);

// chain long enough for an admissible handle pair, then handle addition;
// g2 = 10, all links spheres
Complex3 handle_example();

// one singular vertex whose link is a connected sum of n tori (orientable)
// or Klein bottles; g2 = 10 + 6n
Complex3 sharp_one_singularity(int n, bool orientable = true);

// singularities RP^2 and #(2m-1) RP^2; g2 = 7 + 6m
Complex3 sharp_two_singularities(int m);

// a stacked sphere with two arms meeting at one shared vertex, vertex-folded
// there; g2 = 6, single singularity. Exposed for corpus building.
Complex3 folded_sphere_block(bool orientable = true);

Surface2 rp2_6();     // 6-vertex real projective plane
Surface2 torus_7();   // 7-vertex Moebius-Kuehnel torus

Complex3 generate_complex(const GeneratorSpec& spec);
Surface2 generate_surface(const GeneratorSpec& spec);

}  // namespace pm3
