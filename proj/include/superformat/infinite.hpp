#pragma once

#include "superformat/algebras.hpp"

#include <vector>

namespace superformat {

/// Central (2N+1)x(2N+1) window of an infinite matrix with rows and columns
/// labelled by integers -N..N. Label i is stored at index i + N + 1; the
/// grading is deg M_ij = i + j mod 2.
class WindowedMatrix {
public:
  explicit WindowedMatrix(int window);
  WindowedMatrix(int window, Matrix mat);

  int window() const { return window_; }
  const Matrix& matrix() const { return mat_; }
  bool contains(int label) const { return label >= -window_ && label <= window_; }

  /// Integer-label access; throws std::out_of_range outside the window.
  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value);
  void add(int i, int j, const Rational& value);

  /// Graded matrix in the label-parity format (label 0 is even).
  GradedMatrix graded() const;
  static WindowedMatrix from_graded(int window, const GradedMatrix& m);

  friend bool operator==(const WindowedMatrix&, const WindowedMatrix&) = default;

private:
  int index(int label) const;

  int window_;
  Matrix mat_;
};

/// Format of a window: sign (-1)^label.
Format window_format(int window);

/// E_{i,j} - (-1)^{ceil((i-j)/2)} E_{-j,-i}.
WindowedMatrix osp_inf_element(int i, int j, int window);

enum class InfiniteKind { sl_inf, osp_inf };

struct InfiniteGenerators {
  WindowedMatrix e;
  WindowedMatrix f;
  WindowedMatrix h;
};

/// sl_inf: the finite diagonal-format formulas with integer labels,
/// e_i = (-1)^{i+1} E_{i,i+1}, f_i = E_{i+1,i}, h_i = (-1)^{i+1}(E_ii + E_{i+1,i+1}).
/// osp_inf (i >= 0): e_i = E_{i,i+1} - E_{-i-1,-i}, f_i = E_{i+1,i} + E_{-i,-i-1},
/// h_i = E_{i+1,i+1} + E_{ii} - E_{-i,-i} - E_{-i-1,-i-1}.
/// Throws std::invalid_argument when the support does not fit the window.
InfiniteGenerators inf_chevalley(InfiniteKind kind, int i, int window);

/// Labels touched by generator i.
int generator_reach(InfiniteKind kind, int i);
/// Generator indices whose support lies in [-(N-1), N-1].
std::vector<int> interior_generators(InfiniteKind kind, int window);

/// Chevalley basis built from the given generator indices, as ordinary graded
/// matrices of the window (usable with cartan_from_basis / verify_chevalley).
ChevalleyBasis truncated_basis(InfiniteKind kind, const std::vector<int>& indices, int window);

}  // namespace superformat
