// Acceptance run: one PASS/FAIL line per criterion. Every comparison is an
// exact equality of rationals, so the tolerance column is always "exact".

#include "superformat/algebras.hpp"
#include "superformat/embeddings.hpp"
#include "superformat/formats.hpp"
#include "superformat/infinite.hpp"
#include "superformat/linsolve.hpp"
#include "superformat/rootspace.hpp"
#include "support/generators.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace superformat;
using sftest::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) detail << "first failure: " << what;
    pass = pass && ok;
  }
};

Matrix band(int k, const std::vector<Rational>& v, int p) { return Matrix::diag_band(k, v, p); }

std::vector<AlgebraId> osp_cases(int max_m, std::initializer_list<Layout> layouts) {
  std::vector<AlgebraId> out;
  for (auto layout : layouts) {
    for (int m = 1; m <= max_m; ++m) {
      out.push_back({Family::osp_minus, m, layout});
      out.push_back({Family::osp_plus, m, layout});
    }
  }
  return out;
}

std::vector<AlgebraId> criterion1_cases() {
  std::vector<AlgebraId> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::sl, n, Layout::diagonal});
  for (const auto& a : osp_cases(4, {Layout::diagonal, Layout::block})) out.push_back(a);
  return out;
}

// 1. Chevalley relations with the closed-form Cartan matrices.
void chevalley_relations(Outcome& o) {
  for (const auto& alg : criterion1_cases()) {
    const auto report = verify_chevalley(chevalley_basis(alg), cartan_matrix(alg.family, alg.rank()));
    for (const auto& c : report.checks) o.expect(c.pass, describe(alg) + " " + c.name);
  }
}

// 2. Cartan matrices from the bases, inverses, and inverse row sums.
void cartan_oracle(Outcome& o) {
  for (const auto& alg : criterion1_cases()) {
    const auto cd = cartan_data(alg.family, alg.rank());
    o.expect(cartan_from_basis(chevalley_basis(alg)) == cd.a, describe(alg) + " cartan_from_basis");
    o.expect(cd.a * cd.a_inv == Matrix::identity(alg.rank()), describe(alg) + " a*a_inv");
  }
  for (int n = 1; n <= 8; ++n) {
    const Matrix inv = inverse_cartan(Family::sl, 2 * n);
    for (int i = 1; i <= 2 * n; ++i) {
      Rational row;
      for (int j = 1; j <= 2 * n; ++j) row += inv(i, j);
      const Rational want = (i % 2 == 0) ? Rational(i, 2) : Rational(n) - Rational(i - 1, 2);
      o.expect(row == want, "sl n=" + std::to_string(n) + " inverse row " + std::to_string(i));
    }
  }
}

// 3. Block generators conjugated by L are the diagonal generators.
void format_transport(Outcome& o) {
  for (int m = 1; m <= 4; ++m) {
    for (auto fam : {Family::osp_minus, Family::osp_plus}) {
      const AlgebraId blk{fam, m, Layout::block};
      const AlgebraId dia{fam, m, Layout::diagonal};
      const Matrix l = osp_L(blk.osp_variant(), m);
      o.expect(l * l.transpose() == Matrix::identity(l.size()), describe(blk) + " L L^T");
      const auto bb = chevalley_basis(blk);
      const auto bd = chevalley_basis(dia);
      const auto f = osp_block_to_diagonal(blk.osp_variant(), m);
      const auto compare = [&](const GradedMatrix& from, const GradedMatrix& to, const std::string& name) {
        o.expect(l.transpose() * from.mat * l == to.mat, describe(blk) + " " + name + " by L");
        o.expect(change_format(from, f) == to, describe(blk) + " " + name + " by change_format");
      };
      for (int i = 0; i < bb.rank(); ++i) {
        compare(bb.h[i], bd.h[i], "h" + std::to_string(i + 1));
        compare(bb.e[i], bd.e[i], "e" + std::to_string(i + 1));
        compare(bb.f[i], bd.f[i], "f" + std::to_string(i + 1));
      }
    }
  }
}

// 4. Metric and symmetry predicates agree on members and non-members.
void membership(Outcome& o) {
  Gen g(4004);
  for (int m = 1; m <= 3; ++m) {
    for (auto fam : {Family::osp_minus, Family::osp_plus}) {
      const AlgebraId alg{fam, m, Layout::diagonal};
      const auto basis = generated_subalgebra(chevalley_basis(alg));
      const int p = alg.matrix_size();
      linsolve::SpanBuilder span(p * p);
      for (const auto& b : basis) span.add(linsolve::flatten(b.mat));

      for (int trial = 0; trial < 100; ++trial) {
        Matrix sum(p);
        for (const auto& b : basis) {
          if (g.coin(0.5)) sum += sftest::random_combination_coefficient(g) * b.mat;
        }
        const GradedMatrix x(sum, alg.format());
        const bool metric = osp_metric_condition(alg, x);
        const bool symmetric = osp_symmetry_condition(x);
        o.expect(metric && symmetric, describe(alg) + " random member");
      }
      int non_members = 0;
      while (non_members < 100) {
        const GradedMatrix x = g.graded(alg.format(), 0.4);
        if (span.contains(linsolve::flatten(x.mat))) continue;
        ++non_members;
        o.expect(!osp_metric_condition(alg, x) && !osp_symmetry_condition(x), describe(alg) + " random non-member");
      }
    }
  }
}

// 5. Laws of the graded operations.
void graded_laws(Outcome& o) {
  Gen g(5005);
  std::vector<Format> formats;
  for (int p = 1; p <= 9; ++p) {
    formats.push_back(Format::block((p + 1) / 2, p / 2));
    formats.push_back(Format::alternating(p));
    formats.push_back(Format::alternating(p, -1));
    formats.push_back(g.format(p));
  }
  for (const auto& fmt : formats) {
    const int p = fmt.size();
    const std::string tag = "p=" + std::to_string(p);
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = g.graded(fmt, 0.5);
      const auto n = g.graded(fmt, 0.5);
      o.expect(supertrace(graded_commutator(m, n)).is_zero(), tag + " str[M,N}");
      o.expect(supertranspose(supertranspose(m)) == ad_epsilon(m), tag + " double supertranspose");
      o.expect(supertranspose(graded_commutator(m, n)).mat == -graded_commutator(supertranspose(m), supertranspose(n)).mat,
               tag + " supertranspose of bracket");

      const int pm = g.uniform(0, 1);
      const int pn = g.uniform(0, 1);
      const auto hm = g.homogeneous(fmt, pm, 0.5);
      const auto hn = g.homogeneous(fmt, pn, 0.5);
      const Rational sign = (pm * pn) ? -1 : 1;
      o.expect(supertranspose(hm * hn).mat == sign * (supertranspose(hn) * supertranspose(hm)).mat,
               tag + " supertranspose of product");

      const FormatChanger f(g.signed_permutation(p) * g.even_changer(fmt));
      o.expect(supertrace(change_format(m, f)) == supertrace(m), tag + " supertrace under change_format");
    }
  }
}

// 6. Principal osp(1|2) embeddings.
void principal_embedding(Outcome& o) {
  std::vector<AlgebraId> cases;
  for (int n = 1; n <= 8; ++n) cases.push_back({Family::sl, n, Layout::diagonal});
  for (const auto& a : osp_cases(4, {Layout::diagonal})) cases.push_back(a);
  for (const auto& alg : cases) {
    const auto t = principal_osp12(chevalley_basis(alg), inverse_cartan(alg.family, alg.rank()));
    for (const auto& c : verify_osp12(t).checks) o.expect(c.pass, describe(alg) + " " + c.name);
  }
  const AlgebraId sl2{Family::sl, 2, Layout::diagonal};
  const auto t = principal_osp12(chevalley_basis(sl2), inverse_cartan(Family::sl, 4));
  // J_- = diag_{-1}(1,...,1), J_+ = diag_{+1}(n,-1,n-1,-2,...,-n), H = diag(n,...,-n)
  o.expect(t.j_minus.mat == band(-1, {1, 1, 1, 1}, 5), "n=2 J_-");
  o.expect(t.j_plus.mat == band(1, {2, -1, 1, -2}, 5), "n=2 J_+");
  o.expect(t.h.mat == band(0, {2, 1, 0, -1, -2}, 5), "n=2 H");
}

// 7. Highest-weight generators.
void highest_weights(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    const int p = 2 * n + 1;
    std::vector<Rational> a;
    for (int s = 1; s <= n; ++s) {
      a.emplace_back(n - s + 1);
      a.emplace_back(s);
    }
    const Matrix m1 = band(1, a, p);
    o.expect(power(m1, 2 * n + 1).is_zero(), "M_1^{2n+1} = 0 for n=" + std::to_string(n));
    const AlgebraId alg{Family::sl, n, Layout::diagonal};
    for (int k = 1; k <= 2 * n; ++k) {
      const auto sols = highest_weights_solve(alg, k);
      const std::string tag = "sl n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.expect(sols.size() == 1, tag + " dimension 1");
      if (sols.size() == 1) {
        o.expect(linsolve::proportionality(sols.front().mat, power(m1, k)).has_value(), tag + " proportional to M_1^k");
      }
    }
    o.expect(highest_weights_solve(alg, 2 * n + 1).empty(), "sl n=" + std::to_string(n) + " k=2n+1 dimension 0");
  }
  for (const auto& alg : osp_cases(3, {Layout::diagonal})) {
    for (int k = 1; k < alg.matrix_size(); ++k) {
      const bool survives = (k % 4 == 2) || (k % 4 == 3);
      const auto sols = highest_weights_solve(alg, k);
      o.expect(sols.size() == (survives ? 1u : 0u), describe(alg) + " k=" + std::to_string(k));
    }
  }
}

// 8. The osp(3|2) matrices in block and diagonal format.
void osp32_fixture(Outcome& o) {
  const Rational A = 1, B = 2, C = 3, i = 4, j = 5, k = 6;
  const Rational al = 7, be = 8, ep = 9, la = 10, mu = 11, ta = 12;
  const Matrix mb = Matrix::from_rows({{-A, C, 0, -ta, -mu},
                                       {B, 0, -C, la, be},
                                       {0, -B, A, -al, ep},
                                       {ep, be, -mu, i, -j},
                                       {al, -la, ta, -k, -i}});
  const Matrix md = Matrix::from_rows({{A, al, B, ep, 0},
                                       {mu, i, be, j, ep},
                                       {C, la, 0, -be, B},
                                       {ta, k, la, -i, -al},
                                       {0, -ta, C, mu, -A}});
  const AlgebraId blk{Family::osp_plus, 1, Layout::block};
  const AlgebraId dia{Family::osp_plus, 1, Layout::diagonal};
  const GradedMatrix gb(mb, blk.format());
  const GradedMatrix gd(md, dia.format());
  o.expect(is_member(blk, gb), "M_block in osp(3|2) block");
  o.expect(is_member(dia, gd), "M_diag in osp(3|2) diagonal");
  o.expect(change_format(gb, osp_block_to_diagonal(OspVariant::plus, 1)) == gd, "L maps M_block to M_diag");
  o.expect(change_format(gd, osp_block_to_diagonal(OspVariant::plus, 1).inverse()) == gb, "L maps M_diag to M_block");
  o.expect(supertrace(gb).is_zero(), "str M_block = 0");
  o.expect(supertrace(gd).is_zero(), "str M_diag = 0");
}

// 9. Simple root systems of sl(3|2) and odd-root counting.
void root_systems(Outcome& o) {
  const auto names = [](const Format& fmt) {
    std::vector<std::string> out;
    for (const auto& r : simple_root_system(fmt)) out.push_back(r.to_string() + (r.parity ? "/odd" : "/even"));
    return out;
  };
  o.expect(names(Format::block(3, 2)) ==
               std::vector<std::string>{"eps1-eps2/even", "eps2-eps3/even", "eps3-delta1/odd", "delta1-delta2/even"},
           "sl(3|2) block distinguished system");
  o.expect(names(Format::alternating(5)) ==
               std::vector<std::string>{"eps1-delta1/odd", "delta1-eps2/odd", "eps2-delta2/odd", "delta2-eps3/odd"},
           "sl(3|2) diagonal fermionic system");
  o.expect(odd_simple_root_count(Format::block(3, 2)) == 1, "block odd count 1");
  o.expect(odd_simple_root_count(Format::alternating(5)) == 4, "diagonal odd count 4");
  Gen g(9009);
  for (int trial = 0; trial < 100; ++trial) {
    const Format fmt = g.format(g.uniform(2, 12));
    int odd = 0;
    for (const auto& r : simple_root_system(fmt)) odd += r.parity;
    o.expect(odd == sign_changes(fmt), "random format odd count");
  }
}

// 10. Interior relations of the windowed infinite bases.
void infinite_truncation(Outcome& o) {
  const int window = 6;
  for (auto kind : {InfiniteKind::sl_inf, InfiniteKind::osp_inf}) {
    const std::string tag = kind == InfiniteKind::sl_inf ? "sl_inf" : "osp_inf";
    const auto indices = interior_generators(kind, window);
    for (int i : indices) {
      const int reach = generator_reach(kind, i);
      o.expect(reach <= window - 1, tag + " generator " + std::to_string(i) + " inside [-5,5]");
    }
    o.expect(!indices.empty(), tag + " has interior generators");
    const auto b = truncated_basis(kind, indices, window);
    const Matrix a = cartan_from_basis(b);
    for (const auto& c : verify_chevalley(b, a).checks) o.expect(c.pass, tag + " " + c.name);
    if (kind == InfiniteKind::sl_inf) {
      // Same tridiagonal pattern as the finite diagonal algebras, up to the
      // overall sign fixed by the parity of the first label.
      const Matrix finite = cartan_matrix(Family::sl, static_cast<int>(indices.size()));
      o.expect(a == finite || a == -finite, tag + " Cartan pattern");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"chevalley-relations", chevalley_relations}, {"cartan-oracle", cartan_oracle},
      {"format-transport", format_transport},       {"membership-consistency", membership},
      {"graded-operation-laws", graded_laws},       {"principal-embedding", principal_embedding},
      {"highest-weights", highest_weights},         {"osp32-fixture", osp32_fixture},
      {"root-systems", root_systems},               {"infinite-truncation", infinite_truncation},
  };
  bool all = true;
  int number = 0;
  for (const auto& [name, run] : criteria) {
    ++number;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << number << "  " << name << "  tolerance=exact  checks=" << o.checks
              << "  " << ms << "ms";
    if (!o.pass) std::cout << "  " << o.detail.str();
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
