#pragma once

#include <optional>
#include <vector>

#include "planeshell/golden.hpp"

namespace planeshell {

using GoldenVector = std::vector<GoldenScalar>;
using GoldenMatrix = std::vector<GoldenVector>;

/// Solves A c = rhs exactly over Q(phi), where A is given column-wise and has
/// full column rank. Returns nullopt when the system is inconsistent.
std::optional<GoldenVector> solve_columns(const std::vector<GoldenVector>& columns,
                                          const GoldenVector& rhs);

/// Dimension of the exact span of the given vectors over Q(phi).
int rank_of(const std::vector<GoldenVector>& vectors);

/// LDL^T pivots of a symmetric matrix over Q(phi). Empty result when a pivot
/// vanishes (singular matrix).
std::optional<GoldenVector> ldl_pivots(const GoldenMatrix& m);

}  // namespace planeshell
