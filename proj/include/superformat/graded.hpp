#pragma once

#include "superformat/matrix.hpp"

#include <optional>
#include <vector>

namespace superformat {

/// A matrix format: the diagonal of the parity involution epsilon.
///
/// Label i is even (parity 0) when signs[i] = +1 and odd (parity 1) when
/// signs[i] = -1. Matrix entry (i, j) then has degree parity(i) + parity(j)
/// mod 2.
class Format {
public:
  Format() = default;
  /// Throws std::invalid_argument unless every sign is +1 or -1.
  explicit Format(std::vector<int> signs);

  /// n even labels followed by m odd labels (the standard block format).
  static Format block(int n_even, int n_odd);
  /// Strictly alternating signs of the given length, starting with `first`.
  static Format alternating(int size, int first = +1);

  int size() const { return static_cast<int>(signs_.size()); }
  /// 1-based sign lookup; throws std::out_of_range.
  int sign(int i) const;
  /// 0 for an even label, 1 for an odd one.
  int parity(int i) const { return sign(i) == 1 ? 0 : 1; }
  /// Degree of matrix entry (i, j).
  int entry_degree(int i, int j) const { return (parity(i) + parity(j)) % 2; }

  int count_even() const;
  int count_odd() const { return size() - count_even(); }

  const std::vector<int>& signs() const { return signs_; }
  /// The involution epsilon as a diagonal matrix.
  Matrix involution() const;

  friend bool operator==(const Format&, const Format&) = default;

private:
  std::vector<int> signs_;
};

/// A matrix together with the format that grades its entries.
struct GradedMatrix {
  Matrix mat;
  Format fmt;

  GradedMatrix() = default;
  /// Throws std::invalid_argument if sizes disagree.
  GradedMatrix(Matrix m, Format f);

  int size() const { return mat.size(); }
  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;
};

/// Even and odd parts of a graded matrix; even + odd reproduces the input.
struct HomogeneousParts {
  GradedMatrix even;
  GradedMatrix odd;
};

int parity(const Format& fmt, int i);

/// Ad_eps M = eps M eps^{-1}: flips the sign of every odd entry.
GradedMatrix ad_epsilon(const GradedMatrix& m);
HomogeneousParts homogeneous_parts(const GradedMatrix& m);

/// 0 or 1 for a homogeneous matrix, nullopt when both parts are nonzero. The
/// zero matrix is reported as even.
std::optional<int> degree(const GradedMatrix& m);

/// str M = tr(eps M).
Rational supertrace(const GradedMatrix& m);

/// [M, N} = MN - (-1)^{deg M deg N} NM, extended bilinearly to
/// inhomogeneous arguments. Throws std::invalid_argument on format mismatch.
GradedMatrix graded_commutator(const GradedMatrix& m, const GradedMatrix& n);

/// (M^sT)_{ij} = (-1)^{a(i)(a(j)+1)} M_{ji} with a the label parity.
/// Applying it twice yields Ad_eps M.
GradedMatrix supertranspose(const GradedMatrix& m);
/// The dual convention M* with sign (-1)^{a(j)(a(i)+1)}; M^sT = Ad_eps M*.
GradedMatrix supertranspose_dual(const GradedMatrix& m);

/// Convenience product keeping the shared format.
GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix operator*(const Rational& s, const GradedMatrix& a);

}  // namespace superformat
