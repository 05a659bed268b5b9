#include "superformat/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace superformat {

namespace {

void require_positive_size(int size) {
  if (size < 1) throw std::invalid_argument("matrix size must be positive, got " + std::to_string(size));
}

}  // namespace

Matrix::Matrix(int size) : size_(size) {
  require_positive_size(size);
  data_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
}

Matrix Matrix::identity(int size) {
  Matrix m(size);
  for (int i = 1; i <= size; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit_entry(int i, int j, int size) {
  Matrix m(size);
  m.at_mut(i, j) = 1;
  return m;
}

Matrix Matrix::diag_band(int k, std::span<const Rational> entries, int size) {
  require_positive_size(size);
  if (k <= -size || k >= size) {
    throw std::invalid_argument("diagonal index " + std::to_string(k) + " out of range for size " +
                                std::to_string(size));
  }
  const int length = size - std::abs(k);
  if (static_cast<int>(entries.size()) != length) {
    throw std::invalid_argument("diagonal " + std::to_string(k) + " of a size-" + std::to_string(size) +
                                " matrix needs " + std::to_string(length) + " entries, got " +
                                std::to_string(entries.size()));
  }
  Matrix m(size);
  for (int t = 1; t <= length; ++t) {
    if (k >= 0) {
      m(t, t + k) = entries[t - 1];
    } else {
      m(t - k, t) = entries[t - 1];
    }
  }
  return m;
}

Matrix Matrix::adiag(std::span<const Rational> entries, int size) {
  require_positive_size(size);
  if (static_cast<int>(entries.size()) != size) {
    throw std::invalid_argument("antidiagonal of a size-" + std::to_string(size) + " matrix needs " +
                                std::to_string(size) + " entries, got " + std::to_string(entries.size()));
  }
  Matrix m(size);
  for (int t = 1; t <= size; ++t) m(size + 1 - t, t) = entries[t - 1];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int size = static_cast<int>(rows.size());
  Matrix m(size);
  for (int i = 1; i <= size; ++i) {
    const auto& row = rows[i - 1];
    if (static_cast<int>(row.size()) != size) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(size));
    }
    for (int j = 1; j <= size; ++j) m(i, j) = row[j - 1];
  }
  return m;
}

const Rational& Matrix::at(int i, int j) const {
  if (i < 1 || i > size_ || j < 1 || j > size_) {
    throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside a size-" + std::to_string(size_) + " matrix");
  }
  return (*this)(i, j);
}

Rational& Matrix::at_mut(int i, int j) { return const_cast<Rational&>(std::as_const(*this).at(i, j)); }

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Matrix::is_diagonal() const { return supported_on_band(0); }

bool Matrix::supported_on_band(int k) const {
  for (int i = 1; i <= size_; ++i) {
    for (int j = 1; j <= size_; ++j) {
      if (j - i != k && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Rational> Matrix::band(int k) const {
  std::vector<Rational> out;
  if (k <= -size_ || k >= size_) return out;
  const int length = size_ - std::abs(k);
  out.reserve(static_cast<std::size_t>(length));
  for (int t = 1; t <= length; ++t) out.push_back(k >= 0 ? (*this)(t, t + k) : (*this)(t - k, t));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(size_);
  for (int i = 1; i <= size_; ++i) {
    for (int j = 1; j <= size_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational Matrix::trace() const {
  Rational sum;
  for (int i = 1; i <= size_; ++i) sum += (*this)(i, i);
  return sum;
}

void Matrix::require_same_size(const Matrix& other, const char* what) const {
  if (size_ != other.size_) {
    throw std::invalid_argument(std::string(what) + ": size mismatch " + std::to_string(size_) + " vs " +
                                std::to_string(other.size_));
  }
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_size(other, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_size(other, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& r : data_) r *= scalar;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& r : out.data_) r = -r;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_same_size(b, "matrix product");
  const int p = a.size_;
  Matrix out(p);
  for (int i = 1; i <= p; ++i) {
    for (int k = 1; k <= p; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= p; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> Matrix::rows() const {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(size_));
  for (int i = 1; i <= size_; ++i) {
    out[i - 1].assign(data_.begin() + static_cast<std::ptrdiff_t>(offset(i, 1)),
                      data_.begin() + static_cast<std::ptrdiff_t>(offset(i, size_)) + 1);
  }
  return out;
}

Matrix power(const Matrix& m, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative matrix power");
  Matrix result = Matrix::identity(m.size());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::string to_aligned_text(const Matrix& m) {
  std::vector<std::size_t> width(static_cast<std::size_t>(m.size()), 1);
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) width[j - 1] = std::max(width[j - 1], m(i, j).to_string().size());
  }
  std::ostringstream os;
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      const std::string s = m(i, j).to_string();
      if (j > 1) os << ' ';
      os << std::string(width[j - 1] - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

Matrix parse_matrix_text(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<Rational> row;
    std::string token;
    while (tokens >> token) row.push_back(Rational::parse(token));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix text");
  return Matrix::from_rows(rows);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << to_aligned_text(m); }

}  // namespace superformat
