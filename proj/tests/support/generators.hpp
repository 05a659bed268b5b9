#pragma once

// Hand-rolled random generators for the property tests. All draws come from
// one seeded engine so failures are reproducible from the seed alone.

#include "superformat/algebras.hpp"
#include "superformat/formats.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace sftest {

using namespace superformat;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  // Small numerators and denominators keep products readable when a test fails.
  Rational rational(int range = 6, int max_den = 4) {
    const int num = uniform(-range, range);
    const int den = uniform(1, max_den);
    return Rational(num, den);
  }

  Rational nonzero_rational(int range = 6, int max_den = 4) {
    Rational r;
    while (r.is_zero()) r = rational(range, max_den);
    return r;
  }

  Format format(int size) {
    std::vector<int> signs(static_cast<std::size_t>(size));
    for (auto& s : signs) s = coin() ? 1 : -1;
    return Format(std::move(signs));
  }

  Matrix matrix(int size, double density = 0.6) {
    Matrix m(size);
    for (int i = 1; i <= size; ++i) {
      for (int j = 1; j <= size; ++j) {
        if (coin(density)) m(i, j) = rational();
      }
    }
    return m;
  }

  GradedMatrix graded(const Format& fmt, double density = 0.6) { return {matrix(fmt.size(), density), fmt}; }

  GradedMatrix homogeneous(const Format& fmt, int parity, double density = 0.6) {
    GradedMatrix g = graded(fmt, density);
    for (int i = 1; i <= fmt.size(); ++i) {
      for (int j = 1; j <= fmt.size(); ++j) {
        if (fmt.entry_degree(i, j) != parity) g.mat(i, j) = Rational();
      }
    }
    return g;
  }

  std::vector<int> permutation(int size) {
    std::vector<int> images(static_cast<std::size_t>(size));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), eng_);
    return images;
  }

  // Random signed permutation matrix.
  Matrix signed_permutation(int size) {
    const auto images = permutation(size);
    Matrix f(size);
    for (int i = 1; i <= size; ++i) f(i, images[i - 1]) = coin() ? 1 : -1;
    return f;
  }

  // Even (format preserving) invertible matrix: unit triangular inside each
  // parity class, so the determinant is 1.
  Matrix even_changer(const Format& fmt) {
    const int p = fmt.size();
    Matrix f = Matrix::identity(p);
    for (int i = 1; i <= p; ++i) {
      for (int j = i + 1; j <= p; ++j) {
        if (fmt.sign(i) == fmt.sign(j) && coin(0.5)) f(i, j) = rational(3, 2);
      }
    }
    return f;
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

inline Rational random_combination_coefficient(Gen& g) { return g.rational(5, 3); }

}  // namespace sftest
