#include "doctest.h"

#include "superformat/algebras.hpp"
#include "superformat/formats.hpp"
#include "support/generators.hpp"

using namespace superformat;
using sftest::Gen;

namespace {

// Bracket expanded over matrix units: each E_ab is homogeneous of degree
// alpha(a)+alpha(b), and [E_ab, E_cd} = E_ab E_cd - (-1)^{|ab||cd|} E_cd E_ab.
Matrix bracket_by_units(const GradedMatrix& m, const GradedMatrix& n) {
  const Format& fmt = m.fmt;
  const int p = fmt.size();
  Matrix out(p);
  for (int a = 1; a <= p; ++a) {
    for (int b = 1; b <= p; ++b) {
      if (m.mat(a, b).is_zero()) continue;
      for (int c = 1; c <= p; ++c) {
        for (int d = 1; d <= p; ++d) {
          if (n.mat(c, d).is_zero()) continue;
          const Rational w = m.mat(a, b) * n.mat(c, d);
          const int sign = (fmt.entry_degree(a, b) * fmt.entry_degree(c, d)) ? -1 : 1;
          if (b == c) out(a, d) += w;
          if (d == a) out(c, b) -= sign * w;
        }
      }
    }
  }
  return out;
}

// Block formula [[A,B],[C,D]] -> [[A^T, C^T], [-B^T, D^T]] applied after
// sorting labels into even-then-odd order.
Matrix supertranspose_by_blocks(const GradedMatrix& m) {
  const Format& fmt = m.fmt;
  const int p = fmt.size();
  std::vector<int> order;
  for (int i = 1; i <= p; ++i)
    if (fmt.sign(i) == 1) order.push_back(i);
  const int n_even = static_cast<int>(order.size());
  for (int i = 1; i <= p; ++i)
    if (fmt.sign(i) == -1) order.push_back(i);

  Matrix blk(p);
  for (int r = 1; r <= p; ++r)
    for (int c = 1; c <= p; ++c) blk(r, c) = m.mat(order[r - 1], order[c - 1]);

  Matrix st(p);
  for (int r = 1; r <= p; ++r) {
    for (int c = 1; c <= p; ++c) {
      const bool r_even = r <= n_even;
      const bool c_even = c <= n_even;
      Rational v = blk(c, r);
      if (!r_even && c_even) v = -v;
      st(r, c) = v;
    }
  }
  Matrix out(p);
  for (int r = 1; r <= p; ++r)
    for (int c = 1; c <= p; ++c) out(order[r - 1], order[c - 1]) = st(r, c);
  return out;
}

}  // namespace

TEST_CASE("format parities") {
  const Format blk = Format::block(3, 2);
  CHECK(blk.parity(4) == 1);
  CHECK(blk.parity(3) == 0);
  CHECK(Format::alternating(5).parity(2) == 1);
  AlgebraId osp_minus{Family::osp_minus, 1, Layout::diagonal};
  CHECK(osp_minus.format().parity(1) == 1);
  CHECK_THROWS(Format({1, 0, -1}));
  CHECK_THROWS_AS(blk.sign(6), std::out_of_range);
  CHECK(blk.involution() == Matrix::diag_band(0, std::vector<Rational>{1, 1, 1, -1, -1}, 5));
}

TEST_CASE("homogeneous parts and degree") {
  Gen g(11);
  const Format fmt = Format::alternating(5);
  const GradedMatrix m = g.graded(fmt);
  const auto parts = homogeneous_parts(m);
  CHECK(parts.even.mat + parts.odd.mat == m.mat);
  CHECK(degree(parts.even) != std::optional<int>(1));
  const GradedMatrix z(Matrix(5), fmt);
  CHECK(degree(z) == std::optional<int>(0));
  CHECK(degree(GradedMatrix(Matrix::unit_entry(1, 2, 5), fmt)) == std::optional<int>(1));
  CHECK(degree(GradedMatrix(Matrix::unit_entry(1, 2, 5) + Matrix::unit_entry(1, 1, 5), fmt)) == std::nullopt);
  CHECK(ad_epsilon(m).mat == parts.even.mat - parts.odd.mat);
}

TEST_CASE("supertrace values") {
  CHECK(supertrace(GradedMatrix(Matrix::identity(5), Format::block(3, 2))) == Rational(1));
  CHECK(supertrace(GradedMatrix(Matrix::identity(7), Format::block(2, 5))) == Rational(-3));
  std::vector<Rational> d{1, 2, 3, 4, 5};
  CHECK(supertrace(GradedMatrix(Matrix::diag_band(0, d, 5), Format::alternating(5))) == Rational(3));
}

TEST_CASE("graded commutator of the principal odd pair") {
  const Format fmt = Format::alternating(5);
  const GradedMatrix jp(Matrix::diag_band(1, std::vector<Rational>{2, -1, 1, -2}, 5), fmt);
  const GradedMatrix jm(Matrix::diag_band(-1, std::vector<Rational>{1, 1, 1, 1}, 5), fmt);
  CHECK(graded_commutator(jp, jm).mat == Matrix::diag_band(0, std::vector<Rational>{2, 1, 0, -1, -2}, 5));
  CHECK_THROWS(graded_commutator(jp, GradedMatrix(jm.mat, Format::block(3, 2))));
}

TEST_CASE("graded commutator agrees with the matrix-unit expansion") {
  Gen g(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Format fmt = g.format(g.uniform(1, 6));
    const auto m = g.graded(fmt, 0.5);
    const auto n = g.graded(fmt, 0.5);
    CHECK(graded_commutator(m, n).mat == bracket_by_units(m, n));
  }
}

TEST_CASE("supertranspose examples") {
  const Format fmt = Format::block(3, 2);
  const GradedMatrix e1(Matrix::unit_entry(2, 5, 5) + Matrix::unit_entry(4, 2, 5), fmt);
  CHECK(supertranspose(e1).mat == Matrix::unit_entry(2, 4, 5) - Matrix::unit_entry(5, 2, 5));
  // The dual rule moves the sign to the other odd block.
  CHECK(supertranspose_dual(e1).mat == Matrix::unit_entry(5, 2, 5) - Matrix::unit_entry(2, 4, 5));
}

TEST_CASE("supertranspose agrees with the block formula in every format") {
  Gen g(13);
  for (int trial = 0; trial < 80; ++trial) {
    const Format fmt = g.format(g.uniform(1, 7));
    const auto m = g.graded(fmt);
    CHECK(supertranspose(m).mat == supertranspose_by_blocks(m));
  }
}

TEST_CASE("double supertranspose is Ad_epsilon for both conventions") {
  Gen g(14);
  for (int trial = 0; trial < 50; ++trial) {
    const Format fmt = g.format(g.uniform(1, 7));
    const auto m = g.graded(fmt);
    CHECK(supertranspose(supertranspose(m)) == ad_epsilon(m));
    CHECK(supertranspose_dual(supertranspose_dual(m)) == ad_epsilon(m));
    CHECK(supertranspose_dual(supertranspose(m)) == m);
  }
}

TEST_CASE("supertranspose reverses graded products and brackets") {
  Gen g(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Format fmt = g.format(g.uniform(2, 6));
    const int pm = g.uniform(0, 1);
    const int pn = g.uniform(0, 1);
    const auto m = g.homogeneous(fmt, pm);
    const auto n = g.homogeneous(fmt, pn);
    const Rational sign = (pm * pn) ? -1 : 1;
    CHECK(supertranspose(m * n).mat == sign * (supertranspose(n) * supertranspose(m)).mat);
    CHECK(supertranspose(graded_commutator(m, n)).mat ==
          -graded_commutator(supertranspose(m), supertranspose(n)).mat);
  }
}
