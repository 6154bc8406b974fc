#pragma once

#include <random>
#include <vector>

#include <latcvx/latcvx.hpp>

namespace latcvx::testing {

/// Fixed-seed generator so that every run checks the same instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Rational rational(int lo, int hi, int den) {
    return Rational(uniform(lo * den, hi * den), den);
  }

  /// Product of random elementary integer operations (det ±1).
  RatMatrix unimodular(std::size_t d, int steps = 6);
  /// Invertible rational matrix with small entries.
  RatMatrix invertible(std::size_t d);
  /// Hull of random integer points in [-r, r]^d, full-dimensional.
  Polytope lattice_polytope(std::size_t d, int npoints, int r);
  /// Origin-symmetric hull of random integer points (0 interior).
  Polytope symmetric_polytope(std::size_t d, int npoints, int r);

 private:
  std::mt19937_64 gen_;
};

}  // namespace latcvx::testing
