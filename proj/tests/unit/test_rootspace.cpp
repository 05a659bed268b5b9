#include "doctest.h"

#include "superformat/rootspace.hpp"
#include "support/generators.hpp"

using namespace superformat;
using sftest::Gen;

namespace {
std::vector<std::string> names(const std::vector<SimpleRoot>& roots) {
  std::vector<std::string> out;
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}
std::vector<int> parities(const std::vector<SimpleRoot>& roots) {
  std::vector<int> out;
  for (const auto& r : roots) out.push_back(r.parity);
  return out;
}
}  // namespace

TEST_CASE("distinguished and fermionic systems of sl(3|2)") {
  const auto blk = simple_root_system(Format::block(3, 2));
  CHECK(names(blk) == std::vector<std::string>{"eps1-eps2", "eps2-eps3", "eps3-delta1", "delta1-delta2"});
  CHECK(parities(blk) == std::vector<int>{0, 0, 1, 0});
  const auto dia = simple_root_system(Format::alternating(5));
  CHECK(names(dia) == std::vector<std::string>{"eps1-delta1", "delta1-eps2", "eps2-delta2", "delta2-eps3"});
  CHECK(parities(dia) == std::vector<int>{1, 1, 1, 1});
  CHECK(odd_simple_root_count(Format::block(3, 2)) == 1);
  CHECK(odd_simple_root_count(Format::alternating(5)) == 4);
}

TEST_CASE("small and degenerate formats") {
  const auto two = simple_root_system(Format({1, 1}));
  REQUIRE(two.size() == 1);
  CHECK(two.front().to_string() == "eps1-eps2");
  CHECK(two.front().parity == 0);
  CHECK(sign_changes(Format({-1, -1, -1})) == 0);
  CHECK_THROWS(simple_root_system(Format({1})));
}

TEST_CASE("fermionic systems need strict alternation") {
  CHECK(admits_fermionic_srs(Format::alternating(7)));
  CHECK(admits_fermionic_srs(Format::alternating(4, -1)));
  CHECK_FALSE(admits_fermionic_srs(Format::block(3, 2)));
  Gen g(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Format fmt = g.format(g.uniform(2, 9));
    CHECK(admits_fermionic_srs(fmt) == (sign_changes(fmt) == fmt.size() - 1));
    CHECK(admits_fermionic_srs(fmt) == (std::abs(fmt.count_even() - fmt.count_odd()) <= 1 &&
                                        odd_simple_root_count(fmt) == fmt.size() - 1));
  }
}

TEST_CASE("roots evaluate to the adjoint eigenvalues") {
  Gen g(42);
  for (int trial = 0; trial < 30; ++trial) {
    const Format fmt = g.format(g.uniform(2, 7));
    std::vector<Rational> d;
    for (int i = 0; i < fmt.size(); ++i) d.push_back(g.rational());
    const GradedMatrix h(Matrix::diag_band(0, d, fmt.size()), fmt);
    const auto roots = simple_root_system(fmt);
    for (int i = 1; i < fmt.size(); ++i) {
      const GradedMatrix e(Matrix::unit_entry(i, i + 1, fmt.size()), fmt);
      CHECK(graded_commutator(h, e).mat == evaluate_root(roots[i - 1], fmt, d) * e.mat);
    }
  }
}
