#include "superformat/infinite.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace superformat {

namespace {

int sign_power(int exponent) { return (std::abs(exponent) % 2 == 0) ? 1 : -1; }

// Smallest integer >= n/2.
int ceil_half(int n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

void require_fits(InfiniteKind kind, int i, int window) {
  if (kind == InfiniteKind::osp_inf && i < 0) throw std::invalid_argument("osp_inf generators are indexed by i >= 0");
  const int lo = kind == InfiniteKind::osp_inf ? -(i + 1) : i;
  const int hi = i + 1;
  if (lo < -window || hi > window) {
    throw std::invalid_argument("generator " + std::to_string(i) + " does not fit in window " + std::to_string(window));
  }
}

}  // namespace

WindowedMatrix::WindowedMatrix(int window) : WindowedMatrix(window, Matrix(2 * window + 1)) {}

WindowedMatrix::WindowedMatrix(int window, Matrix mat) : window_(window), mat_(std::move(mat)) {
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  if (mat_.size() != 2 * window + 1) throw std::invalid_argument("window matrix must have size 2N+1");
}

int WindowedMatrix::index(int label) const {
  if (!contains(label)) {
    throw std::out_of_range("label " + std::to_string(label) + " outside window " + std::to_string(window_));
  }
  return label + window_ + 1;
}

const Rational& WindowedMatrix::at(int i, int j) const { return mat_(index(i), index(j)); }

void WindowedMatrix::set(int i, int j, Rational value) { mat_(index(i), index(j)) = std::move(value); }

void WindowedMatrix::add(int i, int j, const Rational& value) { mat_(index(i), index(j)) += value; }

GradedMatrix WindowedMatrix::graded() const { return {mat_, window_format(window_)}; }

WindowedMatrix WindowedMatrix::from_graded(int window, const GradedMatrix& m) {
  if (m.fmt != window_format(window)) throw std::invalid_argument("graded matrix is not in the window format");
  return WindowedMatrix(window, m.mat);
}

Format window_format(int window) { return Format::alternating(2 * window + 1, sign_power(window)); }

WindowedMatrix osp_inf_element(int i, int j, int window) {
  WindowedMatrix m(window);
  if (!m.contains(i) || !m.contains(j)) {
    throw std::invalid_argument("labels (" + std::to_string(i) + "," + std::to_string(j) + ") outside window " +
                                std::to_string(window));
  }
  m.add(i, j, 1);
  m.add(-j, -i, -sign_power(ceil_half(i - j)));
  return m;
}

InfiniteGenerators inf_chevalley(InfiniteKind kind, int i, int window) {
  require_fits(kind, i, window);
  InfiniteGenerators g{WindowedMatrix(window), WindowedMatrix(window), WindowedMatrix(window)};
  if (kind == InfiniteKind::sl_inf) {
    const int s = sign_power(i + 1);
    g.e.add(i, i + 1, s);
    g.f.add(i + 1, i, 1);
    g.h.add(i, i, s);
    g.h.add(i + 1, i + 1, s);
    return g;
  }
  g.e.add(i, i + 1, 1);
  g.e.add(-i - 1, -i, -1);
  g.f.add(i + 1, i, 1);
  g.f.add(-i, -i - 1, 1);
  g.h.add(i + 1, i + 1, 1);
  g.h.add(i, i, 1);
  g.h.add(-i, -i, -1);
  g.h.add(-i - 1, -i - 1, -1);
  return g;
}

int generator_reach(InfiniteKind kind, int i) {
  return kind == InfiniteKind::osp_inf ? i + 1 : std::max(std::abs(i), std::abs(i + 1));
}

std::vector<int> interior_generators(InfiniteKind kind, int window) {
  std::vector<int> out;
  const int lo = kind == InfiniteKind::osp_inf ? 0 : -window;
  for (int i = lo; i <= window; ++i) {
    if (generator_reach(kind, i) <= window - 1) out.push_back(i);
  }
  return out;
}

ChevalleyBasis truncated_basis(InfiniteKind kind, const std::vector<int>& indices, int window) {
  // The algebra tag names the ambient gl(N+1|N); the grading travels with
  // the matrices themselves.
  ChevalleyBasis b{AlgebraId{Family::gl, std::max(window, 1), Layout::diagonal}, {}, {}, {}};
  for (int i : indices) {
    const auto g = inf_chevalley(kind, i, window);
    b.e.push_back(g.e.graded());
    b.f.push_back(g.f.graded());
    b.h.push_back(g.h.graded());
  }
  return b;
}

}  // namespace superformat
