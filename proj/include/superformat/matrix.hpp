#pragma once

#include "superformat/rational.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace superformat {

/// Dense square matrix of exact rationals.
///
/// All public indices are 1-based: `m(1, 1)` is the top-left entry. Diagonal
/// bands are numbered as offsets `k = column - row`, so band 0 is the main
/// diagonal, band +1 the first upper diagonal and band -1 the first lower one.
class Matrix {
public:
  Matrix() = default;
  /// Zero matrix of the given size.
  explicit Matrix(int size);

  static Matrix zero(int size) { return Matrix(size); }
  static Matrix identity(int size);
  /// E_{ij}: a single 1 at row i, column j.
  static Matrix unit_entry(int i, int j, int size);
  /// diag_k(a_1, a_2, ...): entry a_t at (t, t+k) for k >= 0 and at (t-k, t)
  /// for k < 0. Requires entries.size() == size - |k|.
  static Matrix diag_band(int k, std::span<const Rational> entries, int size);
  /// adiag(a_1, ..., a_p): a_t at (p+1-t, t), enumerating the antidiagonal
  /// from the bottom-left corner.
  static Matrix adiag(std::span<const Rational> entries, int size);
  /// Builds from nested rows; throws unless the rows form a square.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int size() const { return size_; }

  const Rational& operator()(int i, int j) const { return data_[offset(i, j)]; }
  Rational& operator()(int i, int j) { return data_[offset(i, j)]; }
  /// Bounds-checked access; throws std::out_of_range.
  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value) { at_mut(i, j) = std::move(value); }

  bool is_zero() const;
  bool is_diagonal() const;
  /// True if every nonzero entry lies on band k.
  bool supported_on_band(int k) const;
  /// Entries of band k in the diag_band order.
  std::vector<Rational> band(int k) const;

  Matrix transpose() const;
  Rational trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  Matrix operator-() const;

  /// Exact product; skips zero entries of the left factor row by row so
  /// banded and sparse operands cost proportionally to their support.
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// Row-major view of the entries.
  std::span<const Rational> entries() const { return data_; }
  std::vector<std::vector<Rational>> rows() const;

private:
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(j - 1);
  }
  Rational& at_mut(int i, int j);
  void require_same_size(const Matrix& other, const char* what) const;

  int size_ = 0;
  std::vector<Rational> data_;
};

/// M^power by repeated squaring; power(M, 0) is the identity.
Matrix power(const Matrix& m, int exponent);

/// Plain-text form: one line per row, entries separated by single spaces.
std::string to_text(const Matrix& m);
/// Human-oriented form with right-aligned columns.
std::string to_aligned_text(const Matrix& m);
/// Parses the plain-text form (any whitespace between entries, one row per
/// non-empty line).
Matrix parse_matrix_text(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace superformat
