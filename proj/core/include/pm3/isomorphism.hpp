#pragma once

// Facet-set-preserving vertex bijections between small complexes, by
// backtracking with degree and link-size pruning. Intended for desk-scale
// inputs (up to a few dozen vertices).

#include <map>
#include <optional>

#include "pm3/complex.hpp"

namespace pm3 {

std::optional<std::map<VertexId, VertexId>> is_isomorphic(const Complex3& K1,
                                                          const Complex3& K2);

}  // namespace pm3
