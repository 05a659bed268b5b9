#include "superformat/graded.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace superformat {

namespace {

void require_same_format(const GradedMatrix& a, const GradedMatrix& b, const char* what) {
  if (a.fmt != b.fmt) throw std::invalid_argument(std::string(what) + ": operands have different formats");
}

// Sign twist shared by both supertranspose conventions.
GradedMatrix twisted_transpose(const GradedMatrix& m, bool dual) {
  const int p = m.size();
  Matrix out(p);
  for (int i = 1; i <= p; ++i) {
    const int ai = m.fmt.parity(i);
    for (int j = 1; j <= p; ++j) {
      const Rational& mji = m.mat(j, i);
      if (mji.is_zero()) continue;
      const int aj = m.fmt.parity(j);
      const int exponent = dual ? aj * (ai + 1) : ai * (aj + 1);
      out(i, j) = (exponent % 2 == 0) ? mji : -mji;
    }
  }
  return {std::move(out), m.fmt};
}

}  // namespace

Format::Format(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw std::invalid_argument("format must have at least one label");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("format signs must be +1 or -1, got " + std::to_string(s));
  }
}

Format Format::block(int n_even, int n_odd) {
  if (n_even < 0 || n_odd < 0 || n_even + n_odd < 1) throw std::invalid_argument("invalid block dimensions");
  std::vector<int> s(static_cast<std::size_t>(n_even), 1);
  s.insert(s.end(), static_cast<std::size_t>(n_odd), -1);
  return Format(std::move(s));
}

Format Format::alternating(int size, int first) {
  if (size < 1) throw std::invalid_argument("format size must be positive");
  if (first != 1 && first != -1) throw std::invalid_argument("first sign must be +1 or -1");
  std::vector<int> s(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) s[k] = (k % 2 == 0) ? first : -first;
  return Format(std::move(s));
}

int Format::sign(int i) const {
  if (i < 1 || i > size()) {
    throw std::out_of_range("label " + std::to_string(i) + " outside format of size " + std::to_string(size()));
  }
  return signs_[static_cast<std::size_t>(i - 1)];
}

int Format::count_even() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1)); }

Matrix Format::involution() const {
  Matrix eps(size());
  for (int i = 1; i <= size(); ++i) eps(i, i) = sign(i);
  return eps;
}

GradedMatrix::GradedMatrix(Matrix m, Format f) : mat(std::move(m)), fmt(std::move(f)) {
  if (mat.size() != fmt.size()) {
    throw std::invalid_argument("matrix of size " + std::to_string(mat.size()) + " paired with format of size " +
                                std::to_string(fmt.size()));
  }
}

int parity(const Format& fmt, int i) { return fmt.parity(i); }

GradedMatrix ad_epsilon(const GradedMatrix& m) {
  Matrix out = m.mat;
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      if (m.fmt.entry_degree(i, j) == 1) out(i, j) = -out(i, j);
    }
  }
  return {std::move(out), m.fmt};
}

HomogeneousParts homogeneous_parts(const GradedMatrix& m) {
  Matrix even(m.size());
  Matrix odd(m.size());
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      (m.fmt.entry_degree(i, j) == 0 ? even : odd)(i, j) = m.mat(i, j);
    }
  }
  return {{std::move(even), m.fmt}, {std::move(odd), m.fmt}};
}

std::optional<int> degree(const GradedMatrix& m) {
  const auto parts = homogeneous_parts(m);
  const bool has_odd = !parts.odd.mat.is_zero();
  if (!has_odd) return 0;
  if (parts.even.mat.is_zero()) return 1;
  return std::nullopt;
}

Rational supertrace(const GradedMatrix& m) {
  Rational sum;
  for (int i = 1; i <= m.size(); ++i) {
    if (m.fmt.sign(i) == 1) {
      sum += m.mat(i, i);
    } else {
      sum -= m.mat(i, i);
    }
  }
  return sum;
}

GradedMatrix graded_commutator(const GradedMatrix& m, const GradedMatrix& n) {
  require_same_format(m, n, "graded commutator");
  const auto mp = homogeneous_parts(m);
  const auto np = homogeneous_parts(n);
  // Only the odd-odd block anticommutes.
  Matrix out = m.mat * n.mat - n.mat * m.mat;
  if (!mp.odd.mat.is_zero() && !np.odd.mat.is_zero()) {
    out += 2 * (np.odd.mat * mp.odd.mat);
  }
  return {std::move(out), m.fmt};
}

GradedMatrix supertranspose(const GradedMatrix& m) { return twisted_transpose(m, false); }

GradedMatrix supertranspose_dual(const GradedMatrix& m) { return twisted_transpose(m, true); }

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_format(a, b, "graded product");
  return {a.mat * b.mat, a.fmt};
}

GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_format(a, b, "graded sum");
  return {a.mat + b.mat, a.fmt};
}

GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_format(a, b, "graded difference");
  return {a.mat - b.mat, a.fmt};
}

GradedMatrix operator*(const Rational& s, const GradedMatrix& a) { return {s * a.mat, a.fmt}; }

}  // namespace superformat
