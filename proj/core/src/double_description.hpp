#pragma once

#include <vector>

#include "latcvx/linalg.hpp"

namespace latcvx::detail {

/// Extreme rays of the pointed cone {y : A y <= 0}, each scaled to a
/// primitive integer vector, in lexicographic order. A must have rank equal
/// to its column count (otherwise throws PreconditionError("degenerate")).
std::vector<RatVector> extreme_rays(const RatMatrix& a);

enum class RegionKind { Bounded, Empty, Unbounded };

struct RegionVertices {
  RegionKind kind = RegionKind::Empty;
  std::vector<RatVector> vertices;  // sorted, distinct; only for Bounded
};

/// Vertices of {x : A x <= b}. Equalities can be passed as pairs of
/// opposite inequalities.
RegionVertices region_vertices(const RatMatrix& a, const RatVector& b);

}  // namespace latcvx::detail
