#include "superformat/embeddings.hpp"

#include "superformat/linsolve.hpp"

#include <string>

namespace superformat {

namespace {

RelationCheck relation(std::string name, const GradedMatrix& lhs, const GradedMatrix& rhs) {
  RelationCheck c{std::move(name), lhs.mat == rhs.mat, std::nullopt};
  if (!c.pass) c.residual = lhs.mat - rhs.mat;
  return c;
}

PrincipalTriple diagonal_triple(const AlgebraId& alg) {
  AlgebraId diag = alg;
  diag.layout = Layout::diagonal;
  return principal_osp12(chevalley_basis(diag), inverse_cartan(diag.family, diag.rank()));
}

// Changer from the block format of alg to its diagonal format.
FormatChanger block_to_diagonal(const AlgebraId& alg) {
  if (alg.is_osp()) return osp_block_to_diagonal(alg.osp_variant(), alg.parameter);
  return perm_matrix(alternating_perm(alg.parameter + 1, alg.parameter));
}

}  // namespace

PrincipalTriple principal_osp12(const ChevalleyBasis& b, const Matrix& a_inv) {
  const int r = b.rank();
  if (a_inv.size() != r) {
    throw std::invalid_argument("inverse Cartan matrix of size " + std::to_string(a_inv.size()) +
                                " for a rank-" + std::to_string(r) + " basis");
  }
  const Format fmt = b.format();
  const int p = fmt.size();
  Matrix jm(p), jp(p), h(p);
  for (int i = 1; i <= r; ++i) {
    jm += b.f[i - 1].mat;
    Rational row_sum;
    for (int j = 1; j <= r; ++j) row_sum += a_inv(i, j);
    jp += row_sum * b.e[i - 1].mat;
    h += row_sum * b.h[i - 1].mat;
  }
  return {{std::move(jm), fmt}, {std::move(jp), fmt}, {std::move(h), fmt}};
}

PrincipalTriple principal_closed(int n) {
  if (n < 1) throw std::invalid_argument("principal_closed requires n >= 1");
  const int p = 2 * n + 1;
  const Format fmt = Format::alternating(p, 1);
  std::vector<Rational> ones(static_cast<std::size_t>(2 * n), Rational(1));
  std::vector<Rational> plus;
  std::vector<Rational> h;
  for (int t = 0; t < n; ++t) {
    plus.emplace_back(n - t);
    plus.emplace_back(-(t + 1));
  }
  for (int t = 0; t < p; ++t) h.emplace_back(n - t);
  return {{Matrix::diag_band(-1, ones, p), fmt},
          {Matrix::diag_band(1, plus, p), fmt},
          {Matrix::diag_band(0, h, p), fmt}};
}

BosonicPair bosonic_pair(const PrincipalTriple& t) {
  const Rational half(1, 2);
  return {half * graded_commutator(t.j_plus, t.j_plus), half * graded_commutator(t.j_minus, t.j_minus)};
}

VerificationReport verify_osp12(const PrincipalTriple& t, const BosonicPair& x) {
  const Rational two(2);
  const Rational minus_one(-1);
  VerificationReport r;
  r.checks.push_back(relation("[H,J+]=J+", graded_commutator(t.h, t.j_plus), t.j_plus));
  r.checks.push_back(relation("[H,J-]=-J-", graded_commutator(t.h, t.j_minus), minus_one * t.j_minus));
  r.checks.push_back(relation("{J+,J-}=H", graded_commutator(t.j_plus, t.j_minus), t.h));
  r.checks.push_back(relation("[H,X+]=2X+", graded_commutator(t.h, x.x_plus), two * x.x_plus));
  r.checks.push_back(relation("[H,X-]=-2X-", graded_commutator(t.h, x.x_minus), Rational(-2) * x.x_minus));
  r.checks.push_back(relation("[X+,X-]=-H", graded_commutator(x.x_plus, x.x_minus), minus_one * t.h));
  r.checks.push_back(relation("[J-,X+]=J+", graded_commutator(t.j_minus, x.x_plus), t.j_plus));
  r.checks.push_back(relation("[J+,X-]=-J-", graded_commutator(t.j_plus, x.x_minus), minus_one * t.j_minus));
  return r;
}

VerificationReport verify_osp12(const PrincipalTriple& t) { return verify_osp12(t, bosonic_pair(t)); }

bool antidiagonal_symmetric(const Matrix& m) {
  const int p = m.size();
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) {
      if (m(i, j) != m(p + 1 - j, p + 1 - i)) return false;
    }
  }
  return true;
}

bool antidiagonal_antisymmetric(const Matrix& m) {
  const int p = m.size();
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) {
      if (m(i, j) != -m(p + 1 - j, p + 1 - i)) return false;
    }
  }
  return true;
}

Matrix highest_weight_generator(int n) {
  if (n < 1) throw std::invalid_argument("highest weight generator requires n >= 1");
  std::vector<Rational> entries;
  for (int t = 0; t < n; ++t) {
    entries.emplace_back(n - t);
    entries.emplace_back(t + 1);
  }
  return Matrix::diag_band(1, entries, 2 * n + 1);
}

GradedMatrix highest_weights_closed(int n, int k) {
  if (n < 1) throw std::invalid_argument("highest weights require n >= 1");
  if (k < 1 || k > 2 * n + 1) {
    throw std::invalid_argument("highest weight grade " + std::to_string(k) + " outside 1.." +
                                std::to_string(2 * n + 1));
  }
  return {power(highest_weight_generator(n), k), Format::alternating(2 * n + 1, 1)};
}

std::vector<GradedMatrix> highest_weights_solve(const AlgebraId& alg, int k) {
  if (k < 1) throw std::invalid_argument("highest weight grade must be >= 1");
  if (alg.layout == Layout::block) {
    AlgebraId diag = alg;
    diag.layout = Layout::diagonal;
    const FormatChanger back = block_to_diagonal(alg).inverse();
    std::vector<GradedMatrix> out;
    for (const auto& m : highest_weights_solve(diag, k)) out.push_back(change_format(m, back));
    return out;
  }

  const int p = alg.matrix_size();
  if (k >= p) return {};
  const Format fmt = alg.format();
  const PrincipalTriple t = diagonal_triple(alg);
  const bool osp = alg.is_osp();
  const Matrix g = osp ? supermetric(alg) : Matrix(p);

  // One unknown per entry of band k; each column is the image of a unit
  // matrix under M -> ([H,M] - kM, [J+,M}, membership constraints).
  std::vector<linsolve::Vector> images;
  for (int i = 1; i + k <= p; ++i) {
    const GradedMatrix unit(Matrix::unit_entry(i, i + k, p), fmt);
    linsolve::Vector image = linsolve::flatten(graded_commutator(t.h, unit).mat - Rational(k) * unit.mat);
    const linsolve::Vector plus = linsolve::flatten(graded_commutator(t.j_plus, unit).mat);
    image.insert(image.end(), plus.begin(), plus.end());
    if (osp) {
      const linsolve::Vector metric = linsolve::flatten(supertranspose(unit).mat * g + g * unit.mat);
      image.insert(image.end(), metric.begin(), metric.end());
    } else if (alg.family == Family::sl) {
      image.push_back(supertrace(unit));
    }
    images.push_back(std::move(image));
  }

  std::vector<GradedMatrix> out;
  for (const auto& v : linsolve::kernel(linsolve::from_columns(images))) {
    Matrix m(p);
    for (int i = 1; i + k <= p; ++i) m(i, i + k) = v[static_cast<std::size_t>(i - 1)];
    out.emplace_back(std::move(m), fmt);
  }
  return out;
}

std::optional<GradedMatrix> normalize_like(const GradedMatrix& solution, const GradedMatrix& reference) {
  const auto factor = linsolve::proportionality(reference.mat, solution.mat);
  if (!factor || factor->is_zero()) return std::nullopt;
  return *factor * solution;
}

}  // namespace superformat
