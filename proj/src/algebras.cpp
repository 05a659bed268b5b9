#include "superformat/algebras.hpp"

#include "superformat/linsolve.hpp"

#include <cstdlib>
#include <future>
#include <sstream>

namespace superformat {

namespace {

int sign_power(int exponent) { return (std::abs(exponent) % 2 == 0) ? 1 : -1; }

// Accumulates signed unit entries into a matrix of fixed size.
class Builder {
public:
  explicit Builder(int size) : m_(size) {}
  Builder& add(int i, int j, int coefficient = 1) {
    m_.set(i, j, m_.at(i, j) + Rational(coefficient));
    return *this;
  }
  Builder& scale(int s) {
    m_ *= Rational(s);
    return *this;
  }
  Matrix build() const { return m_; }

private:
  Matrix m_;
};

ChevalleyBasis sl_diagonal(const AlgebraId& alg) {
  const int p = alg.matrix_size();
  const Format fmt = alg.format();
  ChevalleyBasis b{alg, {}, {}, {}};
  for (int i = 1; i <= alg.rank(); ++i) {
    const int s = sign_power(i + 1);
    b.h.emplace_back(Builder(p).add(i, i, s).add(i + 1, i + 1, s).build(), fmt);
    b.e.emplace_back(Builder(p).add(i, i + 1, s).build(), fmt);
    b.f.emplace_back(Builder(p).add(i + 1, i).build(), fmt);
  }
  return b;
}

// e_i = E_{i,i+1}, f_i = E_{i+1,i}, h_i = [e_i, f_i}.
ChevalleyBasis sl_unit_roots(const AlgebraId& alg) {
  const int p = alg.matrix_size();
  const Format fmt = alg.format();
  ChevalleyBasis b{alg, {}, {}, {}};
  for (int i = 1; i <= alg.rank(); ++i) {
    b.e.emplace_back(Matrix::unit_entry(i, i + 1, p), fmt);
    b.f.emplace_back(Matrix::unit_entry(i + 1, i, p), fmt);
    b.h.push_back(graded_commutator(b.e.back(), b.f.back()));
  }
  return b;
}

ChevalleyBasis osp_minus_diagonal(const AlgebraId& alg) {
  const int m = alg.parameter;
  const int p = alg.matrix_size();
  const Format fmt = alg.format();
  ChevalleyBasis b{alg, {}, {}, {}};
  for (int i = 1; i <= 2 * m - 1; ++i) {
    b.h.emplace_back(Builder(p)
                         .add(2 * m - i, 2 * m - i)
                         .add(2 * m + i, 2 * m + i, -1)
                         .add(2 * m + 1 - i, 2 * m + 1 - i)
                         .add(2 * m - 1 + i, 2 * m - 1 + i, -1)
                         .scale(sign_power(i + 1))
                         .build(),
                     fmt);
    b.e.emplace_back(
        Builder(p).add(2 * m - 1 + i, 2 * m + i).add(2 * m - i, 2 * m + 1 - i, -1).scale(sign_power(i)).build(),
        fmt);
    b.f.emplace_back(Builder(p).add(2 * m + i, 2 * m - 1 + i).add(2 * m + 1 - i, 2 * m - i).build(), fmt);
  }
  return b;
}

ChevalleyBasis osp_plus_diagonal(const AlgebraId& alg) {
  const int m = alg.parameter;
  const int p = alg.matrix_size();
  const Format fmt = alg.format();
  ChevalleyBasis b{alg, {}, {}, {}};
  for (int i = 1; i <= 2 * m; ++i) {
    b.h.emplace_back(Builder(p)
                         .add(2 * m + 1 - i, 2 * m + 1 - i)
                         .add(2 * m + 1 + i, 2 * m + 1 + i, -1)
                         .add(2 * m + 2 - i, 2 * m + 2 - i)
                         .add(2 * m + i, 2 * m + i, -1)
                         .scale(sign_power(i + 1))
                         .build(),
                     fmt);
    b.e.emplace_back(
        Builder(p).add(2 * m + i, 2 * m + 1 + i).add(2 * m + 1 - i, 2 * m + 2 - i, -1).scale(sign_power(i)).build(),
        fmt);
    b.f.emplace_back(Builder(p).add(2 * m + 1 + i, 2 * m + i).add(2 * m + 2 - i, 2 * m + 1 - i).build(), fmt);
  }
  return b;
}

ChevalleyBasis osp_minus_block(const AlgebraId& alg) {
  const int m = alg.parameter;
  const int p = alg.matrix_size();
  const Format fmt = alg.format();
  const int r = alg.rank();
  std::vector<Matrix> h(r, Matrix(p)), e(r, Matrix(p)), f(r, Matrix(p));
  for (int i = 1; i <= m; ++i) {
    e[2 * i - 2] = Builder(p).add(m + 1 - i, 4 * m - i).add(3 * m - i, m - 1 + i).build();
    f[2 * i - 2] = Builder(p).add(m - 1 + i, 3 * m - i).add(4 * m - i, m + 1 - i, -1).build();
    h[2 * i - 2] = Builder(p)
                       .add(3 * m - i, 3 * m - i)
                       .add(4 * m - i, 4 * m - i, -1)
                       .add(m + 1 - i, m + 1 - i, -1)
                       .add(m - 1 + i, m - 1 + i)
                       .build();
  }
  for (int i = 1; i <= m - 1; ++i) {
    e[2 * i - 1] = Builder(p).add(m + i, 3 * m - i).add(4 * m - i, m - i, -1).build();
    f[2 * i - 1] = Builder(p).add(m - i, 4 * m - i, -1).add(3 * m - i, m + i, -1).build();
    h[2 * i - 1] = Builder(p)
                       .add(m - i, m - i)
                       .add(m + i, m + i, -1)
                       .add(3 * m - i, 3 * m - i, -1)
                       .add(4 * m - i, 4 * m - i)
                       .build();
  }
  ChevalleyBasis b{alg, {}, {}, {}};
  for (int k = 0; k < r; ++k) {
    b.h.emplace_back(h[k], fmt);
    b.e.emplace_back(e[k], fmt);
    b.f.emplace_back(f[k], fmt);
  }
  return b;
}

ChevalleyBasis osp_plus_block(const AlgebraId& alg) {
  const int m = alg.parameter;
  const int p = alg.matrix_size();
  const Format fmt = alg.format();
  const int r = alg.rank();
  std::vector<Matrix> h(r, Matrix(p)), e(r, Matrix(p)), f(r, Matrix(p));
  for (int i = 1; i <= m; ++i) {
    e[2 * i - 2] = Builder(p).add(m + 2 - i, 4 * m + 2 - i).add(3 * m + 2 - i, m + i).build();
    e[2 * i - 1] = Builder(p).add(m + 1 + i, 3 * m + 2 - i).add(4 * m + 2 - i, m + 1 - i, -1).build();
    f[2 * i - 2] = Builder(p).add(m + i, 3 * m + 2 - i).add(4 * m + 2 - i, m + 2 - i, -1).build();
    f[2 * i - 1] = Builder(p).add(m + 1 - i, 4 * m + 2 - i, -1).add(3 * m + 2 - i, m + 1 + i, -1).build();
    h[2 * i - 2] = Builder(p)
                       .add(3 * m + 2 - i, 3 * m + 2 - i)
                       .add(4 * m + 2 - i, 4 * m + 2 - i, -1)
                       .add(m + 2 - i, m + 2 - i, -1)
                       .add(m + i, m + i)
                       .build();
    h[2 * i - 1] = Builder(p)
                       .add(m + 1 - i, m + 1 - i)
                       .add(m + 1 + i, m + 1 + i, -1)
                       .add(3 * m + 2 - i, 3 * m + 2 - i, -1)
                       .add(4 * m + 2 - i, 4 * m + 2 - i)
                       .build();
  }
  ChevalleyBasis b{alg, {}, {}, {}};
  for (int k = 0; k < r; ++k) {
    b.h.emplace_back(h[k], fmt);
    b.e.emplace_back(e[k], fmt);
    b.f.emplace_back(f[k], fmt);
  }
  return b;
}

void require_rank(Family family, int rank) {
  const bool ok = rank >= 1 && (family == Family::osp_minus ? rank % 2 == 1 : rank % 2 == 0);
  if (!ok) {
    throw std::invalid_argument("rank " + std::to_string(rank) + " is not a rank of the " + to_string(family) +
                                " family");
  }
}

std::string index_pair(int i, int j) { return std::to_string(i) + std::to_string(j); }

RelationCheck check_equal(std::string name, const Matrix& lhs, const Matrix& rhs) {
  RelationCheck c{std::move(name), lhs == rhs, std::nullopt};
  if (!c.pass) c.residual = lhs - rhs;
  return c;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::osp_minus: return "osp_minus";
    case Family::osp_plus: return "osp_plus";
  }
  return "?";
}

std::string to_string(Layout l) { return l == Layout::block ? "block" : "diagonal"; }

Family parse_family(const std::string& s) {
  if (s == "gl") return Family::gl;
  if (s == "sl") return Family::sl;
  if (s == "osp_minus") return Family::osp_minus;
  if (s == "osp_plus") return Family::osp_plus;
  throw std::invalid_argument("unknown algebra family '" + s + "'");
}

Layout parse_layout(const std::string& s) {
  if (s == "block") return Layout::block;
  if (s == "diagonal") return Layout::diagonal;
  throw std::invalid_argument("unknown format '" + s + "' (expected block or diagonal)");
}

void AlgebraId::validate() const {
  if (parameter < 1) throw std::invalid_argument("algebra parameter must be >= 1");
}

int AlgebraId::matrix_size() const {
  validate();
  switch (family) {
    case Family::gl:
    case Family::sl: return 2 * parameter + 1;
    case Family::osp_minus: return 4 * parameter - 1;
    case Family::osp_plus: return 4 * parameter + 1;
  }
  return 0;
}

int AlgebraId::rank() const {
  validate();
  switch (family) {
    case Family::gl:
    case Family::sl: return 2 * parameter;
    case Family::osp_minus: return 2 * parameter - 1;
    case Family::osp_plus: return 2 * parameter;
  }
  return 0;
}

OspVariant AlgebraId::osp_variant() const {
  if (family == Family::osp_minus) return OspVariant::minus;
  if (family == Family::osp_plus) return OspVariant::plus;
  throw UnsupportedAlgebra(describe(*this) + " is not orthosymplectic");
}

Format AlgebraId::format() const {
  validate();
  const int n = parameter;
  if (layout == Layout::block) {
    switch (family) {
      case Family::gl:
      case Family::sl: return Format::block(n + 1, n);
      case Family::osp_minus: return Format::block(2 * n - 1, 2 * n);
      case Family::osp_plus: return Format::block(2 * n + 1, 2 * n);
    }
  }
  // osp(2m-1|2m) in diagonal format starts with an odd label.
  return Format::alternating(matrix_size(), family == Family::osp_minus ? -1 : 1);
}

std::string describe(const AlgebraId& alg) {
  std::ostringstream os;
  const int n = alg.parameter;
  switch (alg.family) {
    case Family::gl: os << "gl(" << n + 1 << "|" << n << ")"; break;
    case Family::sl: os << "sl(" << n + 1 << "|" << n << ")"; break;
    case Family::osp_minus: os << "osp(" << 2 * n - 1 << "|" << 2 * n << ")"; break;
    case Family::osp_plus: os << "osp(" << 2 * n + 1 << "|" << 2 * n << ")"; break;
  }
  os << " " << to_string(alg.layout);
  return os.str();
}

ChevalleyBasis chevalley_basis(const AlgebraId& alg) {
  alg.validate();
  switch (alg.family) {
    case Family::gl:
    case Family::sl: return alg.layout == Layout::diagonal ? sl_diagonal(alg) : sl_unit_roots(alg);
    case Family::osp_minus: return alg.layout == Layout::diagonal ? osp_minus_diagonal(alg) : osp_minus_block(alg);
    case Family::osp_plus: return alg.layout == Layout::diagonal ? osp_plus_diagonal(alg) : osp_plus_block(alg);
  }
  throw UnsupportedAlgebra("unsupported algebra " + describe(alg));
}

Matrix cartan_matrix(Family family, int rank) {
  require_rank(family, rank);
  Matrix a(rank);
  if (family == Family::gl || family == Family::sl) {
    for (int i = 1; i < rank; ++i) a(i, i + 1) = a(i + 1, i) = sign_power(i + 1);
    return a;
  }
  a(1, 1) = 1;
  for (int i = 1; i < rank; ++i) a(i, i + 1) = a(i + 1, i) = sign_power(i);
  return a;
}

Matrix inverse_cartan(Family family, int rank) {
  require_rank(family, rank);
  Matrix inv(rank);
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      const bool odd_band = std::abs(i - j) % 2 == 1;
      const bool odd_start = std::min(i, j) % 2 == 1;
      switch (family) {
        case Family::gl:
        case Family::sl:
          if (odd_band && odd_start) inv(i, j) = 1;
          break;
        case Family::osp_minus:
          if (odd_band != odd_start) inv(i, j) = 1;
          break;
        case Family::osp_plus:
          if (odd_band == odd_start) inv(i, j) = -1;
          break;
      }
    }
  }
  return inv;
}

CartanData cartan_data(Family family, int rank) { return {cartan_matrix(family, rank), inverse_cartan(family, rank)}; }

Rational pairing(const GradedMatrix& m, const GradedMatrix& n) { return supertrace(m * n); }

Matrix cartan_from_basis(const ChevalleyBasis& b) {
  const int r = b.rank();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i != j && !pairing(b.e[i], b.f[j]).is_zero()) {
        throw DegeneratePairing("<e_" + std::to_string(i + 1) + ", f_" + std::to_string(j + 1) + "> is nonzero");
      }
    }
  }
  Matrix a(r);
  for (int j = 1; j <= r; ++j) {
    const Rational ef = pairing(b.e[j - 1], b.f[j - 1]);
    if (ef.is_zero()) throw DegeneratePairing("<e_" + std::to_string(j) + ", f_" + std::to_string(j) + "> vanishes");
    for (int i = 1; i <= r; ++i) a(i, j) = pairing(b.h[i - 1], b.h[j - 1]) / ef;
  }
  return a;
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

VerificationReport verify_chevalley(const ChevalleyBasis& b, const Matrix& a, int threads) {
  const int r = b.rank();
  if (a.size() != r) {
    throw std::invalid_argument("Cartan matrix of size " + std::to_string(a.size()) + " for a rank-" +
                                std::to_string(r) + " basis");
  }
  // Slot k = 4 (i r + j) + family.
  const std::size_t total = static_cast<std::size_t>(4 * r * r);
  std::vector<RelationCheck> checks(total);
  const auto run = [&](std::size_t k) {
    const int family = static_cast<int>(k % 4);
    const int ij = static_cast<int>(k / 4);
    const int i = ij / r;
    const int j = ij % r;
    const std::string idx = index_pair(i + 1, j + 1);
    const std::string si = std::to_string(i + 1);
    const std::string sj = std::to_string(j + 1);
    switch (family) {
      case 0:
        checks[k] = check_equal("[h" + si + ",h" + sj + "]=0", graded_commutator(b.h[i], b.h[j]).mat,
                                Matrix(b.h[i].size()));
        break;
      case 1:
        checks[k] = check_equal("[h" + si + ",e" + sj + "]=a" + idx + "*e" + sj,
                                graded_commutator(b.h[i], b.e[j]).mat, a(i + 1, j + 1) * b.e[j].mat);
        break;
      case 2:
        checks[k] = check_equal("[h" + si + ",f" + sj + "]=-a" + idx + "*f" + sj,
                                graded_commutator(b.h[i], b.f[j]).mat, -(a(i + 1, j + 1) * b.f[j].mat));
        break;
      default:
        checks[k] = check_equal("[e" + si + ",f" + sj + "}=" + (i == j ? "h" + sj : std::string("0")),
                                graded_commutator(b.e[i], b.f[j]).mat,
                                i == j ? b.h[j].mat : Matrix(b.h[j].size()));
        break;
    }
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
  if (workers == 1) {
    for (std::size_t k = 0; k < total; ++k) run(k);
  } else {
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = static_cast<std::size_t>(w); k < total; k += static_cast<std::size_t>(workers)) run(k);
      }));
    }
    for (auto& job : jobs) job.get();
  }

  // Present the report grouped by relation family.
  VerificationReport report;
  for (int family = 0; family < 4; ++family) {
    for (std::size_t k = static_cast<std::size_t>(family); k < total; k += 4) report.checks.push_back(checks[k]);
  }
  return report;
}

Matrix supermetric(const AlgebraId& alg) {
  const OspVariant variant = alg.osp_variant();
  const int m = alg.parameter;
  const int p = alg.matrix_size();
  Matrix g(p);
  if (alg.layout == Layout::block) {
    const int so = variant == OspVariant::plus ? 2 * m + 1 : 2 * m - 1;
    for (int i = 1; i <= so; ++i) g(i, so + 1 - i) = 1;
    for (int i = 1; i <= m; ++i) {
      g(so + i, so + m + i) = -1;
      g(so + m + i, so + i) = 1;
    }
    return g;
  }
  const int overall = sign_power(m);
  for (int i = 1; i <= p; ++i) {
    const int floor_exp = variant == OspVariant::plus ? i / 2 : (i + 1) / 2;
    g(i, p + 1 - i) = overall * sign_power(floor_exp);
  }
  return g;
}

bool osp_metric_condition(const AlgebraId& alg, const GradedMatrix& m) {
  const Matrix g = supermetric(alg);
  if (m.size() != g.size()) throw std::invalid_argument("matrix size does not match " + describe(alg));
  return (supertranspose(m).mat * g + g * m.mat).is_zero();
}

bool osp_symmetry_condition(const GradedMatrix& m) {
  const int p = m.size();
  // Both branches pair (i, j) with its reflection (p+1-j, p+1-i) in the
  // antidiagonal; the sign depends on floor((j - i) / 2).
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) {
      const int d = j - i;
      const int k = d >= 0 ? d / 2 : -((-d + 1) / 2);
      const Rational expected = sign_power(k + 1) * m.mat(p + 1 - j, p + 1 - i);
      if (m.mat(i, j) != expected) return false;
    }
  }
  return true;
}

bool is_member(const AlgebraId& alg, const GradedMatrix& m) {
  if (m.size() != alg.matrix_size()) {
    throw std::invalid_argument("matrix of size " + std::to_string(m.size()) + " tested against " + describe(alg));
  }
  if (m.fmt != alg.format()) throw std::invalid_argument("matrix format differs from the format of " + describe(alg));
  switch (alg.family) {
    case Family::gl: return true;
    case Family::sl: return supertrace(m).is_zero();
    case Family::osp_minus:
    case Family::osp_plus: break;
  }
  const bool metric = osp_metric_condition(alg, m);
  if (alg.layout == Layout::block) return metric;
  const bool symmetric = osp_symmetry_condition(m);
  if (metric != symmetric) {
    throw ConsistencyError("metric and antidiagonal-symmetry membership predicates disagree for " + describe(alg));
  }
  return metric;
}

ChevalleyBasis chevalley_involution(const ChevalleyBasis& b) {
  ChevalleyBasis out{b.algebra, {}, {}, {}};
  const Rational minus_one(-1);
  for (int i = 0; i < b.rank(); ++i) {
    out.h.push_back(minus_one * b.h[i]);
    out.e.push_back(minus_one * b.f[i]);
    out.f.push_back(b.e[i]);
  }
  return out;
}

ChevalleyBasis rescale_basis(const ChevalleyBasis& b, const std::vector<Rational>& alpha,
                             const std::vector<Rational>& beta) {
  const auto r = static_cast<std::size_t>(b.rank());
  if (alpha.size() != r || beta.size() != r) throw std::invalid_argument("one coefficient per generator required");
  ChevalleyBasis out{b.algebra, {}, {}, {}};
  for (std::size_t i = 0; i < r; ++i) {
    if (alpha[i].is_zero() || beta[i].is_zero()) throw std::invalid_argument("rescaling coefficients must be nonzero");
    out.e.push_back(alpha[i] * b.e[i]);
    out.f.push_back(beta[i] * b.f[i]);
    out.h.push_back((alpha[i] * beta[i]) * b.h[i]);
  }
  return out;
}

ChevalleyBasis normalize_basis(const ChevalleyBasis& b) {
  std::vector<Rational> alpha(static_cast<std::size_t>(b.rank()), Rational(1));
  std::vector<Rational> beta;
  for (int i = 0; i < b.rank(); ++i) {
    const Rational ef = pairing(b.e[i], b.f[i]);
    if (ef.is_zero()) throw DegeneratePairing("<e_" + std::to_string(i + 1) + ", f_" + std::to_string(i + 1) + "> vanishes");
    beta.push_back(ef.inverse());
  }
  return rescale_basis(b, alpha, beta);
}

std::vector<GradedMatrix> generated_subalgebra(const ChevalleyBasis& b) {
  const int p = b.h.front().size();
  linsolve::SpanBuilder span(p * p);
  std::vector<GradedMatrix> basis;
  std::vector<GradedMatrix> generators;
  for (const auto* list : {&b.e, &b.f, &b.h}) generators.insert(generators.end(), list->begin(), list->end());

  std::size_t frontier = 0;
  for (const auto& g : generators) {
    if (span.add(linsolve::flatten(g.mat))) basis.push_back(g);
  }
  // Brackets with e_i and f_i reach every iterated commutator.
  while (frontier < basis.size()) {
    const GradedMatrix current = basis[frontier++];
    for (const auto* list : {&b.e, &b.f}) {
      for (const auto& g : *list) {
        GradedMatrix c = graded_commutator(g, current);
        if (span.add(linsolve::flatten(c.mat))) basis.push_back(std::move(c));
      }
    }
  }
  return basis;
}

std::vector<GradedMatrix> membership_solution_space(const AlgebraId& alg) {
  const int p = alg.matrix_size();
  const Format fmt = alg.format();
  std::vector<linsolve::Vector> images;
  images.reserve(static_cast<std::size_t>(p * p));
  const Matrix g = alg.is_osp() ? supermetric(alg) : Matrix(p);
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) {
      const GradedMatrix unit(Matrix::unit_entry(i, j, p), fmt);
      linsolve::Vector image;
      switch (alg.family) {
        case Family::gl: break;
        case Family::sl: image.push_back(supertrace(unit)); break;
        case Family::osp_minus:
        case Family::osp_plus: image = linsolve::flatten(supertranspose(unit).mat * g + g * unit.mat); break;
      }
      images.push_back(std::move(image));
    }
  }
  std::vector<GradedMatrix> out;
  if (alg.family == Family::gl) {
    for (int i = 1; i <= p; ++i) {
      for (int j = 1; j <= p; ++j) out.emplace_back(Matrix::unit_entry(i, j, p), fmt);
    }
    return out;
  }
  for (const auto& v : linsolve::kernel(linsolve::from_columns(images))) {
    Matrix m(p);
    for (int i = 1; i <= p; ++i) {
      for (int j = 1; j <= p; ++j) m(i, j) = v[static_cast<std::size_t>((i - 1) * p + (j - 1))];
    }
    out.emplace_back(std::move(m), fmt);
  }
  return out;
}

}  // namespace superformat
