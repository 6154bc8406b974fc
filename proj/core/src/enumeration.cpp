#include <algorithm>
#include <optional>

#include "latcvx/errors.hpp"
#include "latcvx/lattice.hpp"
#include "latcvx/lp.hpp"

namespace latcvx {

namespace {

// Integer points of a polytope by recursive fixing of coordinates; the
// range of each coordinate comes from an exact LP over the vertex form.
class IntegerPointEnumerator {
 public:
  explicit IntegerPointEnumerator(const Polytope& p) : p_(p), d_(p.dim()) {}

  std::vector<RatVector> run() {
    RatVector z(d_);
    recurse(0, z);
    return std::move(out_);
  }

 private:
  std::optional<std::pair<Integer, Integer>> range(std::size_t k, const RatVector& z) const {
    Rational lo, hi;
    if (k == 0) {
      lo = hi = p_.vertices().front()[0];
      for (const auto& v : p_.vertices()) {
        lo = min(lo, v[0]);
        hi = max(hi, v[0]);
      }
    } else if (k + 1 == d_) {
      bool has_lo = false, has_hi = false;
      for (const auto& f : p_.facets()) {
        Rational r = f.offset;
        for (std::size_t i = 0; i < k; ++i) r.sub_product(f.normal[i], z[i]);
        const int s = f.normal[k].sign();
        if (s == 0) {
          if (r.sign() < 0) return std::nullopt;
          continue;
        }
        Rational bound = r / f.normal[k];
        if (s > 0) {
          if (!has_hi || bound < hi) hi = std::move(bound);
          has_hi = true;
        } else {
          if (!has_lo || bound > lo) lo = std::move(bound);
          has_lo = true;
        }
      }
      if (!has_lo || !has_hi) throw InvariantError("unbounded coordinate range");
    } else {
      auto ext = [&](Direction dir) -> std::optional<Rational> {
        const std::size_t n = p_.num_vertices();
        LpProblem lp;
        lp.direction = dir;
        lp.objective = RatVector(n);
        for (std::size_t j = 0; j < n; ++j) lp.objective[j] = p_.vertices()[j][k];
        lp.constraints = RatMatrix(0, n);
        lp.add_row(RatVector::ones(n), RowSense::Equal, 1);
        for (std::size_t i = 0; i < k; ++i) {
          RatVector row(n);
          for (std::size_t j = 0; j < n; ++j) row[j] = p_.vertices()[j][i];
          lp.add_row(row, RowSense::Equal, z[i]);
        }
        lp.nonnegative.assign(n, true);
        const LpOutcome res = solve_lp(lp);
        if (res.status != LpStatus::Optimal) return std::nullopt;
        return res.value;
      };
      auto mx = ext(Direction::Maximize);
      if (!mx) return std::nullopt;
      hi = *mx;
      lo = *ext(Direction::Minimize);
    }
    Integer a = lo.ceil(), b = hi.floor();
    if (a > b) return std::nullopt;
    return std::make_pair(a, b);
  }

  void recurse(std::size_t k, RatVector& z) {
    if (k == d_) {
      out_.push_back(z);
      return;
    }
    auto r = range(k, z);
    if (!r) return;
    for (Integer t = r->first; t <= r->second; ++t) {
      z[k] = Rational(t);
      recurse(k + 1, z);
    }
    z[k] = 0;
  }

  const Polytope& p_;
  std::size_t d_;
  std::vector<RatVector> out_;
};

}  // namespace

std::vector<RatVector> enumerate_lattice_points(const Polytope& p, const Lattice& l,
                                                EnumerationMode mode) {
  if (p.dim() != l.dim()) throw PreconditionError("dimension mismatch");
  const Polytope pc = transform(p, l.basis_inverse());
  std::vector<RatVector> out;
  for (auto& z : IntegerPointEnumerator(pc).run()) {
    if (mode == EnumerationMode::Interior && !pc.contains_in_interior(z)) continue;
    out.push_back(l.point(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MinimumResult first_minimum(const Polytope& k, const Lattice& l) {
  if (k.dim() != l.dim()) throw PreconditionError("dimension mismatch");
  if (!k.is_origin_symmetric()) throw PreconditionError("not origin-symmetric");
  const std::size_t d = k.dim();
  const Polytope kc = transform(k, l.basis_inverse());

  // upper bound from small coordinate vectors with entries in {-1, 0, 1}
  std::optional<Rational> bound;
  RatVector z(d);
  std::vector<int> digits(d, -1);
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) z[i] = digits[i];
    if (!z.is_zero()) {
      Rational g = gauge(kc, z);
      if (!bound || g < *bound) bound = std::move(g);
    }
    std::size_t i = 0;
    while (i < d && digits[i] == 1) digits[i++] = -1;
    if (i == d) break;
    ++digits[i];
  }

  MinimumResult res;
  std::vector<RatVector> ties;
  for (auto& p : IntegerPointEnumerator(scale(kc, *bound)).run()) {
    if (p.is_zero()) continue;
    Rational g = gauge(kc, p);
    if (ties.empty() || g < res.value) {
      res.value = std::move(g);
      ties.clear();
      ties.push_back(std::move(p));
    } else if (g == res.value) {
      ties.push_back(std::move(p));
    }
  }
  for (const auto& t : ties) res.minimizers.push_back(sign_representative(l.point(t)));
  std::sort(res.minimizers.begin(), res.minimizers.end(), std::greater<>());
  res.minimizers.erase(std::unique(res.minimizers.begin(), res.minimizers.end()),
                       res.minimizers.end());
  return res;
}

}  // namespace latcvx
