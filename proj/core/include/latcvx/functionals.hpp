#pragma once

#include <optional>
#include <vector>

#include "latcvx/lattice.hpp"
#include "latcvx/polytope.hpp"

namespace latcvx {

/// A width or diameter value with every realizing primitive direction.
struct FunctionalResult {
  Rational value;
  /// One per ± pair, lexicographically larger representative, descending.
  std::vector<RatVector> directions;
  /// Rank of the direction set.
  std::size_t span_dim = 0;
};

/// Lattice width: min over y in Λ*\{0} of h(P;y) + h(P;-y). Directions lie in Λ*.
FunctionalResult width(const Polytope& p, const Lattice& l);
/// Lattice diameter: the longest lattice-normalized segment in P. Directions lie in Λ.
FunctionalResult diameter(const Polytope& p, const Lattice& l);

struct HollowResult {
  bool hollow = true;
  std::optional<RatVector> witness;  // an interior lattice point when not hollow
};
HollowResult is_hollow(const Polytope& p, const Lattice& l);

}  // namespace latcvx
