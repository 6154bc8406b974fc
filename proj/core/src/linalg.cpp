#include "latcvx/linalg.hpp"

#include <sstream>

#include "latcvx/errors.hpp"

namespace latcvx {

namespace {

void require_same_dim(const RatVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw PreconditionError("dimension mismatch");
}

}  // namespace

RatVector RatVector::unit(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

RatVector RatVector::ones(std::size_t n) {
  RatVector v(n);
  for (auto& x : v) x = 1;
  return v;
}

RatVector RatVector::parse(const std::vector<std::string>& entries) {
  RatVector v;
  for (const auto& e : entries) v.push_back(Rational::parse(e));
  return v;
}

bool RatVector::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatVector::is_integer() const {
  for (const auto& x : v_)
    if (!x.is_integer()) return false;
  return true;
}

RatVector RatVector::concat(const RatVector& other) const {
  RatVector r = *this;
  for (const auto& x : other) r.push_back(x);
  return r;
}

RatVector RatVector::slice(std::size_t from, std::size_t count) const {
  return RatVector(std::vector<Rational>(v_.begin() + static_cast<std::ptrdiff_t>(from),
                                         v_.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

RatVector& RatVector::operator+=(const RatVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

RatVector& RatVector::operator/=(const Rational& s) {
  const Rational inv = s.inverse();
  for (auto& x : v_) x *= inv;
  return *this;
}

RatVector RatVector::operator-() const {
  RatVector r(*this);
  for (auto& x : r.v_) x = -x;
  return r;
}

std::strong_ordering operator<=>(const RatVector& a, const RatVector& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.dim() <=> b.dim();
}

std::string RatVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ", ";
    s += v_[i].str();
  }
  return s + ")";
}

Rational dot(const RatVector& a, const RatVector& b) {
  require_same_dim(a, b);
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s.add_product(a[i], b[i]);
  return s;
}

Rational primitive_scale(const RatVector& v) {
  if (v.is_zero()) throw PreconditionError("zero vector has no primitive scaling");
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.denominator());
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, (x * Rational(den)).numerator());
  return Rational(den, g);
}

RatVector primitive_integer(const RatVector& v) { return v * primitive_scale(v); }

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows[0].dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != m.cols_) throw PreconditionError("dimension mismatch");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  return from_rows(cols).transpose();
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.dim(), d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  RatVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<RatVector> RatMatrix::row_vectors() const {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<RatVector> RatMatrix::column_vectors() const {
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

void RatMatrix::append_row(const RatVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.dim();
  if (r.dim() != cols_) throw PreconditionError("dimension mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RatMatrix::det() const {
  if (!is_square()) throw PreconditionError("determinant of non-square matrix");
  RatMatrix m = *this;
  const std::size_t n = rows_;
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    const Rational inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j).sub_product(f, m(c, j));
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  if (!is_square()) throw PreconditionError("singular matrix");
  const std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw PreconditionError("singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  return row_reduce(m).size();
}

bool RatMatrix::is_integer() const {
  for (const auto& x : a_)
    if (!x.is_integer()) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_unimodular() const {
  if (!is_square() || !is_integer()) return false;
  return det().abs() == Rational(1);
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).add_product(x, b(k, j));
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols_ != x.dim()) throw PreconditionError("dimension mismatch");
  RatVector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) y[i].add_product(a(i, j), x[j]);
  return y;
}

RatMatrix operator*(const Rational& s, RatMatrix a) {
  for (auto& x : a.a_) x *= s;
  return a;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("dimension mismatch");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
  return a;
}

RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("dimension mismatch");
  for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
  return a;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) os << (i ? "; " : "") << row(i).str();
  os << "]";
  return os.str();
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j).sub_product(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<LinearSolution> solve_linear_system(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.dim()) throw PreconditionError("dimension mismatch");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  LinearSolution sol;
  sol.particular = RatVector(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    sol.particular[pivots[r]] = aug(r, n);
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, f);
    sol.null_basis.push_back(std::move(v));
  }
  return sol;
}

std::vector<RatVector> null_space(const RatMatrix& a) {
  return solve_linear_system(a, RatVector(a.rows()))->null_basis;
}

std::size_t rank_of(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return 0;
  return RatMatrix::from_rows(vectors).rank();
}

std::optional<LdlFactor> ldl_positive_definite(const RatMatrix& g) {
  if (!g.is_symmetric()) return std::nullopt;
  const std::size_t n = g.rows();
  LdlFactor f{RatMatrix::identity(n), RatVector(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational dj = g(j, j);
    for (std::size_t k = 0; k < j; ++k) dj.sub_product(f.l(j, k) * f.l(j, k), f.d[k]);
    if (dj.sign() <= 0) return std::nullopt;
    f.d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s.sub_product(f.l(i, k) * f.l(j, k), f.d[k]);
      f.l(i, j) = s / dj;
    }
  }
  return f;
}

}  // namespace latcvx
