#pragma once

#include "superformat/graded.hpp"

#include <stdexcept>
#include <vector>

namespace superformat {

/// Raised when a similarity transformation does not map one format to
/// another (the transported involution is not diagonal with +-1 entries).
class FormatError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Bijection of {1..p}, stored as its 1-based image list P(1), ..., P(p).
class Permutation {
public:
  /// Throws std::invalid_argument unless `images` is a permutation of 1..p.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

enum class ChangerKind { signed_permutation, general };

/// Invertible change of basis v -> F v used to move between formats.
class FormatChanger {
public:
  /// Classifies `mat`; throws std::invalid_argument when it is singular.
  explicit FormatChanger(Matrix mat);

  const Matrix& matrix() const { return mat_; }
  const Matrix& inverse_matrix() const { return inv_; }
  ChangerKind kind() const { return kind_; }
  int size() const { return mat_.size(); }
  FormatChanger inverse() const;

private:
  FormatChanger(Matrix mat, Matrix inv, ChangerKind kind);

  Matrix mat_;
  Matrix inv_;
  ChangerKind kind_;
};

enum class OspVariant { minus, plus };

/// F_{ij} = delta_{P(i) j}, so (F v)_i = v_{P(i)}.
FormatChanger perm_matrix(const Permutation& p);

/// Interleaves n_even even and n_odd odd labels, preserving the order within
/// each block: P(2i+1) = i+1 and P(2i) = n_even+i. Requires |n_even - n_odd| <= 1.
/// When the odd block is larger the arrangement starts with an odd label.
Permutation alternating_perm(int n_even, int n_odd);

/// Order-preserving permutation P with from.sign(P(i)) == to.sign(i): the
/// k-th even (odd) label of `to` takes the k-th even (odd) label of `from`.
/// Throws std::invalid_argument if the formats have different even/odd counts.
Permutation stable_permutation(const Format& from, const Format& to);

/// M -> F M F^{-1} together with eps -> F eps F^{-1}. Throws FormatError if
/// the transported involution is not diagonal +-1, std::invalid_argument on
/// size mismatch.
GradedMatrix change_format(const GradedMatrix& m, const FormatChanger& f);
/// The format obtained by transporting `fmt` along `f`.
Format transport_format(const Format& fmt, const FormatChanger& f);

/// Signed permutation L relating the block and diagonal formats of
/// osp(2m-1|2m) (variant minus, size 4m-1) and osp(2m+1|2m) (variant plus,
/// size 4m+1): M_diag = L^{-1} M_block L.
Matrix osp_L(OspVariant variant, int m);
/// The changer taking block-format matrices to diagonal format, i.e. F = L^{-1} = L^T.
FormatChanger osp_block_to_diagonal(OspVariant variant, int m);

/// True iff f is invertible and even with respect to fmt.
bool preserves_format(const FormatChanger& f, const Format& fmt);
bool preserves_format(const Matrix& f, const Format& fmt);

}  // namespace superformat
