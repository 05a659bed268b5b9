#include "superformat/linsolve.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace superformat::linsolve {

System::System(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative system dimensions");
  data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

void System::add_row(const Vector& row) {
  if (static_cast<int>(row.size()) != cols_) {
    throw std::invalid_argument("row of length " + std::to_string(row.size()) + " added to a system with " +
                                std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

System from_columns(const std::vector<Vector>& columns) {
  const int cols = static_cast<int>(columns.size());
  const int rows = cols == 0 ? 0 : static_cast<int>(columns.front().size());
  System s(rows, cols);
  for (int c = 0; c < cols; ++c) {
    if (static_cast<int>(columns[c].size()) != rows) throw std::invalid_argument("ragged column list");
    for (int r = 0; r < rows; ++r) s(r, c) = columns[c][r];
  }
  return s;
}

Echelon rref(System s) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < s.cols() && row < s.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < s.rows(); ++r) {
      if (!s(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < s.cols(); ++c) std::swap(s(pivot, c), s(row, c));
    }
    const Rational inv = s(row, col).inverse();
    for (int c = col; c < s.cols(); ++c) s(row, c) *= inv;
    for (int r = 0; r < s.rows(); ++r) {
      if (r == row || s(r, col).is_zero()) continue;
      const Rational factor = s(r, col);
      for (int c = col; c < s.cols(); ++c) {
        if (!s(row, c).is_zero()) s(r, c) -= factor * s(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(s), std::move(pivots)};
}

int rank(const System& system) { return static_cast<int>(rref(system).pivot_columns.size()); }

std::vector<Vector> kernel(const System& system) {
  const Echelon e = rref(system);
  std::vector<bool> is_pivot(static_cast<std::size_t>(system.cols()), false);
  for (int c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (int free = 0; free < system.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(static_cast<std::size_t>(system.cols()));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      v[e.pivot_columns[r]] = -e.reduced(static_cast<int>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector SpanBuilder::reduce(Vector v) const {
  if (static_cast<int>(v.size()) != dimension_) throw std::invalid_argument("vector has wrong dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = v[pivots_[r]];
    if (factor.is_zero()) continue;
    for (int c = 0; c < dimension_; ++c) {
      if (!rows_[r][c].is_zero()) v[c] -= factor * rows_[r][c];
    }
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const {
  const Vector rest = reduce(v);
  for (const auto& x : rest) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool SpanBuilder::add(const Vector& v) {
  Vector rest = reduce(v);
  int pivot = -1;
  for (int c = 0; c < dimension_; ++c) {
    if (!rest[c].is_zero()) {
      pivot = c;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational inv = rest[pivot].inverse();
  for (auto& x : rest) x *= inv;
  // Keep existing rows reduced in the new pivot column.
  for (auto& row : rows_) {
    const Rational factor = row[pivot];
    if (factor.is_zero()) continue;
    for (int c = 0; c < dimension_; ++c) {
      if (!rest[c].is_zero()) row[c] -= factor * rest[c];
    }
  }
  rows_.push_back(std::move(rest));
  pivots_.push_back(pivot);
  return true;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const int p = m.size();
  System aug(p, 2 * p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) aug(i, j) = m(i + 1, j + 1);
    aug(i, p + i) = 1;
  }
  const Echelon e = rref(std::move(aug));
  if (static_cast<int>(e.pivot_columns.size()) < p || e.pivot_columns[p - 1] != p - 1) return std::nullopt;
  Matrix inv(p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) inv(i + 1, j + 1) = e.reduced(i, p + j);
  }
  return inv;
}

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

int span_rank(const std::vector<Matrix>& matrices) {
  if (matrices.empty()) return 0;
  System s(0, matrices.front().size() * matrices.front().size());
  for (const auto& m : matrices) s.add_row(flatten(m));
  return rank(s);
}

std::optional<Rational> proportionality(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<Rational> factor;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    if (eb[k].is_zero()) {
      if (!ea[k].is_zero()) return std::nullopt;
      continue;
    }
    if (!factor) factor = ea[k] / eb[k];
  }
  if (!factor) return Rational(0);
  return a == *factor * b ? factor : std::nullopt;
}

}  // namespace superformat::linsolve
