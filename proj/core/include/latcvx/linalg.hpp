#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "latcvx/rational.hpp"

namespace latcvx {

/// Dense vector of exact rationals.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : v_(n) {}
  RatVector(std::initializer_list<Rational> init) : v_(init) {}
  explicit RatVector(std::vector<Rational> entries) : v_(std::move(entries)) {}

  static RatVector zero(std::size_t n) { return RatVector(n); }
  static RatVector unit(std::size_t n, std::size_t i);
  static RatVector ones(std::size_t n);
  /// Parses a vector from strings ("p/q" each).
  static RatVector parse(const std::vector<std::string>& entries);

  [[nodiscard]] std::size_t dim() const { return v_.size(); }
  [[nodiscard]] bool empty() const { return v_.empty(); }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  [[nodiscard]] auto begin() const { return v_.begin(); }
  [[nodiscard]] auto end() const { return v_.end(); }
  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  void push_back(Rational r) { v_.push_back(std::move(r)); }
  [[nodiscard]] const std::vector<Rational>& entries() const { return v_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_integer() const;
  /// Concatenation (this, other).
  [[nodiscard]] RatVector concat(const RatVector& other) const;
  /// Entries [from, from + count).
  [[nodiscard]] RatVector slice(std::size_t from, std::size_t count) const;

  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  RatVector& operator*=(const Rational& s);
  RatVector& operator/=(const Rational& s);
  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(RatVector a, const Rational& s) { return a *= s; }
  friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
  friend RatVector operator/(RatVector a, const Rational& s) { return a /= s; }
  RatVector operator-() const;

  friend bool operator==(const RatVector&, const RatVector&) = default;
  /// Lexicographic order.
  friend std::strong_ordering operator<=>(const RatVector& a, const RatVector& b);

  /// "(a, b, c)"
  [[nodiscard]] std::string str() const;

 private:
  std::vector<Rational> v_;
};

Rational dot(const RatVector& a, const RatVector& b);

/// Smallest positive rational s such that s * v is an integer vector with
/// coprime entries. v must be nonzero.
Rational primitive_scale(const RatVector& v);
/// primitive_scale(v) * v.
RatVector primitive_integer(const RatVector& v);

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);
  static RatMatrix diagonal(const RatVector& d);
  /// [A 0; 0 B]
  static RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] RatVector row(std::size_t i) const;
  [[nodiscard]] RatVector col(std::size_t j) const;
  [[nodiscard]] std::vector<RatVector> row_vectors() const;
  [[nodiscard]] std::vector<RatVector> column_vectors() const;
  void append_row(const RatVector& r);

  [[nodiscard]] RatMatrix transpose() const;
  [[nodiscard]] Rational det() const;
  /// Throws PreconditionError("singular matrix") when not invertible.
  [[nodiscard]] RatMatrix inverse() const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] bool is_symmetric() const;
  /// Integer entries and determinant ±1.
  [[nodiscard]] bool is_unimodular() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& x);
  friend RatMatrix operator*(const Rational& s, RatMatrix a);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b);
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Reduced row echelon form, in place. Returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> row_reduce(RatMatrix& m);

struct LinearSolution {
  RatVector particular;
  std::vector<RatVector> null_basis;
};

/// Solves A x = b. Returns nullopt when the system is inconsistent.
/// The particular solution sets all free variables to zero.
std::optional<LinearSolution> solve_linear_system(const RatMatrix& a, const RatVector& b);

/// Basis of {x : A x = 0}.
std::vector<RatVector> null_space(const RatMatrix& a);

/// Rank of a list of vectors (as rows).
std::size_t rank_of(const std::vector<RatVector>& vectors);

/// Exact LDL^T factorisation of a symmetric matrix. Returns nullopt unless
/// the matrix is positive definite.
struct LdlFactor {
  RatMatrix l;  // unit lower triangular
  RatVector d;  // positive diagonal
};
std::optional<LdlFactor> ldl_positive_definite(const RatMatrix& g);

}  // namespace latcvx
