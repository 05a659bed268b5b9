#include "doctest.h"

#include "superformat/serialize.hpp"
#include "support/generators.hpp"

using namespace superformat;
using sftest::Gen;

TEST_CASE("rationals serialize as strings") {
  CHECK(json(Rational(-3, 4)) == json("-3/4"));
  CHECK(json("5/10").get<Rational>() == Rational(1, 2));
  CHECK(json(7).get<Rational>() == Rational(7));
  CHECK_THROWS(json(0.5).get<Rational>());
}

TEST_CASE("graded matrices round trip") {
  Gen g(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = g.graded(g.format(g.uniform(1, 6)));
    const json j = m;
    CHECK(json::parse(j.dump()).get<GradedMatrix>() == m);
  }
  const json bad = json::parse(R"({"size": 2, "entries": [["1"]]})");
  CHECK_THROWS(bad.get<Matrix>());
}

TEST_CASE("algebra ids and bases round trip") {
  for (const AlgebraId& a : {AlgebraId{Family::osp_plus, 2, Layout::block}, AlgebraId{Family::sl, 3, Layout::diagonal}}) {
    const json j = a;
    CHECK(j.get<AlgebraId>() == a);
    const auto b = chevalley_basis(a);
    const auto back = json(b).get<ChevalleyBasis>();
    CHECK(back.algebra == a);
    CHECK(back.e == b.e);
    CHECK(back.h == b.h);
  }
  CHECK(json(AlgebraId{Family::osp_minus, 1, Layout::diagonal}).contains("m"));
  CHECK(json(AlgebraId{Family::sl, 1, Layout::diagonal}).contains("n"));
}

TEST_CASE("permutations, roots, windows") {
  const Permutation p({2, 3, 1});
  CHECK(permutation_from_json(json(p)) == p);
  const auto roots = simple_root_system(Format::alternating(3));
  CHECK(json(roots).get<std::vector<SimpleRoot>>() == roots);
  const auto w = osp_inf_element(1, 0, 2);
  const json jw = w;
  CHECK(jw["labels"].front() == -2);
  CHECK(windowed_from_json(jw) == w);
}

TEST_CASE("reports carry residuals") {
  auto b = chevalley_basis({Family::sl, 1, Layout::diagonal});
  b.f[1].mat = -b.f[1].mat;
  const json j = verify_chevalley(b, cartan_matrix(Family::sl, 2));
  CHECK(j["ok"] == false);
  CHECK(j["total"] == 16);
  CHECK(j["failed"].get<int>() > 0);
}
