#include "superformat/formats.hpp"

#include "superformat/linsolve.hpp"

#include <cstdlib>
#include <string>

namespace superformat {

namespace {

bool is_signed_permutation(const Matrix& m) {
  const int p = m.size();
  std::vector<int> column_hits(static_cast<std::size_t>(p), 0);
  for (int i = 1; i <= p; ++i) {
    int row_hits = 0;
    for (int j = 1; j <= p; ++j) {
      const Rational& x = m(i, j);
      if (x.is_zero()) continue;
      if (x != Rational(1) && x != Rational(-1)) return false;
      ++row_hits;
      ++column_hits[j - 1];
    }
    if (row_hits != 1) return false;
  }
  for (int c : column_hits) {
    if (c != 1) return false;
  }
  return true;
}

int sign_power(int exponent) { return (std::abs(exponent) % 2 == 0) ? 1 : -1; }

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int p = size();
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (int v : images_) {
    if (v < 1 || v > p || seen[v - 1]) {
      throw std::invalid_argument("image list is not a permutation of 1.." + std::to_string(p));
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> im(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i)-1] = i;
  return Permutation(std::move(inv));
}

FormatChanger::FormatChanger(Matrix mat) : mat_(std::move(mat)) {
  if (is_signed_permutation(mat_)) {
    kind_ = ChangerKind::signed_permutation;
    inv_ = mat_.transpose();
    return;
  }
  auto inv = linsolve::inverse(mat_);
  if (!inv) throw std::invalid_argument("format changer must be invertible");
  kind_ = ChangerKind::general;
  inv_ = std::move(*inv);
}

FormatChanger::FormatChanger(Matrix mat, Matrix inv, ChangerKind kind)
    : mat_(std::move(mat)), inv_(std::move(inv)), kind_(kind) {}

FormatChanger FormatChanger::inverse() const { return FormatChanger(inv_, mat_, kind_); }

FormatChanger perm_matrix(const Permutation& p) {
  Matrix f(p.size());
  for (int i = 1; i <= p.size(); ++i) f(i, p(i)) = 1;
  return FormatChanger(std::move(f));
}

Permutation alternating_perm(int n_even, int n_odd) {
  if (n_even < 0 || n_odd < 0 || n_even + n_odd < 1 || std::abs(n_even - n_odd) > 1) {
    throw std::invalid_argument("no alternating arrangement for gl(" + std::to_string(n_even) + "|" +
                                std::to_string(n_odd) + ")");
  }
  // Odd positions take the larger block (the even one on a tie).
  const bool even_first = n_even >= n_odd;
  const int first_offset = even_first ? 0 : n_even;
  const int second_offset = even_first ? n_even : 0;
  const int p = n_even + n_odd;
  std::vector<int> images(static_cast<std::size_t>(p));
  for (int pos = 1; pos <= p; ++pos) {
    images[pos - 1] = (pos % 2 == 1) ? first_offset + (pos + 1) / 2 : second_offset + pos / 2;
  }
  return Permutation(std::move(images));
}

Permutation stable_permutation(const Format& from, const Format& to) {
  if (from.size() != to.size() || from.count_even() != to.count_even()) {
    throw std::invalid_argument("formats describe different graded spaces");
  }
  std::vector<int> even_labels;
  std::vector<int> odd_labels;
  for (int i = 1; i <= from.size(); ++i) (from.parity(i) == 0 ? even_labels : odd_labels).push_back(i);
  std::vector<int> images;
  std::size_t next_even = 0;
  std::size_t next_odd = 0;
  for (int i = 1; i <= to.size(); ++i) images.push_back(to.parity(i) == 0 ? even_labels[next_even++] : odd_labels[next_odd++]);
  return Permutation(std::move(images));
}

Format transport_format(const Format& fmt, const FormatChanger& f) {
  if (fmt.size() != f.size()) throw std::invalid_argument("format and changer sizes differ");
  const Matrix eps = f.matrix() * fmt.involution() * f.inverse_matrix();
  std::vector<int> signs(static_cast<std::size_t>(fmt.size()));
  for (int i = 1; i <= fmt.size(); ++i) {
    for (int j = 1; j <= fmt.size(); ++j) {
      if (i != j && !eps(i, j).is_zero()) {
        throw FormatError("transported involution is not diagonal: this is a change of realization, not of format");
      }
    }
    if (eps(i, i) == Rational(1)) {
      signs[i - 1] = 1;
    } else if (eps(i, i) == Rational(-1)) {
      signs[i - 1] = -1;
    } else {
      throw FormatError("transported involution has diagonal entry " + eps(i, i).to_string());
    }
  }
  return Format(std::move(signs));
}

GradedMatrix change_format(const GradedMatrix& m, const FormatChanger& f) {
  if (m.size() != f.size()) {
    throw std::invalid_argument("matrix of size " + std::to_string(m.size()) + " cannot be conjugated by a size-" +
                                std::to_string(f.size()) + " changer");
  }
  Format target = transport_format(m.fmt, f);
  return {f.matrix() * m.mat * f.inverse_matrix(), std::move(target)};
}

Matrix osp_L(OspVariant variant, int m) {
  if (m < 1) throw std::invalid_argument("osp parameter m must be positive");
  const auto put = [](Matrix& l, int i, int j, int sign) { l(i, j) = sign; };
  if (variant == OspVariant::minus) {
    Matrix l(4 * m - 1);
    for (int i = 0; i <= m - 1; ++i) put(l, 2 * m + i, 2 * i + 1, sign_power(i + 1));
    for (int i = 1; i <= m; ++i) put(l, 2 * m - i, 2 * i, sign_power(i));
    for (int i = 1; i <= m; ++i) put(l, 4 * m - i, 2 * m + 2 * i - 1, sign_power(m + 1));
    for (int i = 1; i <= m - 1; ++i) put(l, m - i, 2 * m + 2 * i, sign_power(m));
    return l;
  }
  Matrix l(4 * m + 1);
  for (int i = 0; i <= m; ++i) put(l, 2 * m + 1 - i, 2 * i + 1, sign_power(i));
  for (int i = 1; i <= m; ++i) {
    put(l, 2 * m + 1 + i, 2 * i, sign_power(i));
    put(l, 4 * m + 2 - i, 2 * m + 2 * i, sign_power(m + 1));
    put(l, m + 1 - i, 2 * m + 1 + 2 * i, sign_power(m));
  }
  return l;
}

FormatChanger osp_block_to_diagonal(OspVariant variant, int m) {
  return FormatChanger(osp_L(variant, m).transpose());
}

bool preserves_format(const Matrix& f, const Format& fmt) {
  if (f.size() != fmt.size()) throw std::invalid_argument("changer and format sizes differ");
  for (int i = 1; i <= f.size(); ++i) {
    for (int j = 1; j <= f.size(); ++j) {
      if (fmt.entry_degree(i, j) == 1 && !f(i, j).is_zero()) return false;
    }
  }
  return linsolve::inverse(f).has_value();
}

bool preserves_format(const FormatChanger& f, const Format& fmt) { return preserves_format(f.matrix(), fmt); }

}  // namespace superformat
