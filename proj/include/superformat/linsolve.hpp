#pragma once

#include "superformat/matrix.hpp"

#include <optional>
#include <vector>

namespace superformat::linsolve {

using Vector = std::vector<Rational>;

/// Rectangular rational matrix used for linear systems; rows are equations.
class System {
public:
  System(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// Appends a row (equation); its length must equal cols().
  void add_row(const Vector& row);

private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

/// Builds a system whose columns are the given vectors.
System from_columns(const std::vector<Vector>& columns);

struct Echelon {
  System reduced;
  std::vector<int> pivot_columns;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination (0-based).
Echelon rref(System system);

int rank(const System& system);

/// Basis of {x : A x = 0}. Each basis vector has a 1 in one free column and
/// zeros in the other free columns.
std::vector<Vector> kernel(const System& system);

/// Incrementally maintained echelon basis of a subspace of Q^n.
class SpanBuilder {
public:
  explicit SpanBuilder(int dimension) : dimension_(dimension) {}

  /// Adds v if it is not already in the span; returns whether it was added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dimension() const { return dimension_; }

private:
  Vector reduce(Vector v) const;

  int dimension_;
  std::vector<Vector> rows_;
  std::vector<int> pivots_;
};

/// Exact inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Flattens a matrix row-major into a vector.
Vector flatten(const Matrix& m);

/// Rank of the span of a list of matrices.
int span_rank(const std::vector<Matrix>& matrices);

/// Returns c with a = c * b when a is a rational multiple of b, nullopt
/// otherwise. If b is zero, succeeds only when a is zero (with c = 0).
std::optional<Rational> proportionality(const Matrix& a, const Matrix& b);

}  // namespace superformat::linsolve
