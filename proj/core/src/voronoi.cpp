#include <algorithm>
#include <cmath>
#include <map>

#include "latcvx/errors.hpp"
#include "latcvx/lattice.hpp"

namespace latcvx {

namespace {

// All integer z with zᵀGz <= bound, via the exact LDLᵀ form
// zᵀGz = Σ_j d_j (z_j + Σ_{i>j} L_ij z_i)², fixing coordinates from the last.
class ShortVectorEnumerator {
 public:
  ShortVectorEnumerator(const LdlFactor& f, Rational bound)
      : f_(f), d_(f.d.dim()), bound_(std::move(bound)), z_(d_) {}

  template <typename Visit>
  void run(Visit&& visit) {
    recurse(d_, bound_, visit);
  }

 private:
  template <typename Visit>
  void recurse(std::size_t level, const Rational& remaining, Visit& visit) {
    if (level == 0) {
      visit(z_, bound_ - remaining);
      return;
    }
    const std::size_t j = level - 1;
    Rational center;
    for (std::size_t i = j + 1; i < d_; ++i) center.sub_product(f_.l(i, j), z_[i]);
    const double radius = std::sqrt((remaining / f_.d[j]).to_double());
    const Integer lo = Integer(std::floor(center.to_double() - radius)) - 1;
    const Integer hi = Integer(std::ceil(center.to_double() + radius)) + 1;
    for (Integer t = lo; t <= hi; ++t) {
      const Rational off = Rational(t) - center;
      const Rational used = f_.d[j] * off * off;
      if (used > remaining) continue;
      z_[j] = Rational(t);
      recurse(j, remaining - used, visit);
    }
    z_[j] = 0;
  }

  const LdlFactor& f_;
  std::size_t d_;
  Rational bound_;
  RatVector z_;
};

std::vector<RatVector> relevant_coordinates(const Lattice& l) {
  const RatMatrix& g = l.gram();
  const auto ldl = ldl_positive_definite(g);
  if (!ldl) throw PreconditionError("gram not positive definite");
  const std::size_t d = l.dim();

  // every nonzero coset of Z^d / 2Z^d contains its 0/1 representative c
  Rational bound;
  for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
    RatVector c(d);
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1ul) c[i] = 1;
    bound = max(bound, dot(c, g * c));
  }

  struct CosetBest {
    Rational norm;
    std::vector<RatVector> vectors;
  };
  std::map<unsigned long, CosetBest> best;
  ShortVectorEnumerator(*ldl, bound).run([&](const RatVector& z, const Rational& norm) {
    unsigned long mask = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (mpz_odd_p(z[i].numerator().get_mpz_t()))
        mask |= 1ul << i;
    if (mask == 0) return;
    auto [it, inserted] = best.try_emplace(mask, CosetBest{norm, {z}});
    if (inserted) return;
    if (norm < it->second.norm) {
      it->second = CosetBest{norm, {z}};
    } else if (norm == it->second.norm) {
      it->second.vectors.push_back(z);
    }
  });

  std::vector<RatVector> out;
  for (auto& [mask, b] : best) {
    if (b.vectors.size() != 2) continue;
    for (auto& z : b.vectors) out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

std::vector<RatVector> voronoi_relevant(const Lattice& l) {
  std::vector<RatVector> out;
  for (const auto& z : relevant_coordinates(l)) out.push_back(l.point(z));
  std::sort(out.begin(), out.end());
  return out;
}

Polytope voronoi_cell(const Lattice& l) {
  const RatMatrix& g = l.gram();
  std::vector<Facet> ineq;
  for (const auto& z : relevant_coordinates(l)) {
    const RatVector gz = g * z;
    ineq.push_back(Facet{l.dual_basis() * gz, dot(z, gz) / Rational(2)});
  }
  return Polytope::from_inequalities(ineq);
}

}  // namespace latcvx
