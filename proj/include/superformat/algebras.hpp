#pragma once

#include "superformat/formats.hpp"
#include "superformat/graded.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superformat {

enum class Family { gl, sl, osp_minus, osp_plus };
enum class Layout { block, diagonal };

std::string to_string(Family f);
std::string to_string(Layout l);
Family parse_family(const std::string& s);
Layout parse_layout(const std::string& s);

/// Identifies one concrete algebra in one format.
///
/// gl/sl: gl(n+1|n) and sl(n+1|n), size 2n+1, rank 2n.
/// osp_minus: osp(2m-1|2m), size 4m-1, rank 2m-1.
/// osp_plus: osp(2m+1|2m), size 4m+1, rank 2m.
struct AlgebraId {
  Family family = Family::sl;
  int parameter = 1;
  Layout layout = Layout::diagonal;

  /// Throws std::invalid_argument if parameter < 1.
  void validate() const;
  int matrix_size() const;
  int rank() const;
  bool is_osp() const { return family == Family::osp_minus || family == Family::osp_plus; }
  OspVariant osp_variant() const;
  /// The grading of the defining representation in this layout.
  Format format() const;

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

std::string describe(const AlgebraId& alg);

/// Raised for (family, layout) combinations or parameters the library does
/// not provide.
class UnsupportedAlgebra : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a pairing <e_j, f_j> needed to normalize the Cartan matrix
/// vanishes, or when <e_i, f_j> != 0 for some i != j.
class DegeneratePairing : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when two independent membership predicates disagree.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct ChevalleyBasis {
  AlgebraId algebra;
  std::vector<GradedMatrix> h;
  std::vector<GradedMatrix> e;
  std::vector<GradedMatrix> f;

  int rank() const { return static_cast<int>(h.size()); }
  const Format& format() const { return h.front().fmt; }
};

struct CartanData {
  Matrix a;
  Matrix a_inv;
};

/// Generators in the closed forms of the diagonal-format sl/osp bases and the
/// block-format osp bases. For sl/gl in block format the simple roots follow
/// the e_i = E_{i,i+1} convention (distinguished root system) with
/// h_i = [e_i, f_i}.
ChevalleyBasis chevalley_basis(const AlgebraId& alg);

/// Fermionic Cartan matrix of the family at the given rank.
Matrix cartan_matrix(Family family, int rank);
/// Closed-form inverse of cartan_matrix.
Matrix inverse_cartan(Family family, int rank);
CartanData cartan_data(Family family, int rank);

/// <M, N> := str(M N), the supertrace form of the defining representation.
Rational pairing(const GradedMatrix& m, const GradedMatrix& n);

/// a_ij = <h_i, h_j> / <e_j, f_j>. Throws DegeneratePairing.
Matrix cartan_from_basis(const ChevalleyBasis& b);

struct RelationCheck {
  std::string name;
  bool pass = false;
  /// lhs - rhs for failed checks.
  std::optional<Matrix> residual;
};

struct VerificationReport {
  std::vector<RelationCheck> checks;

  bool all_pass() const;
  std::size_t failures() const;
  void append(const VerificationReport& other);
};

/// Checks [h_i,h_j]=0, [h_i,e_j]=a_ij e_j, [h_i,f_j]=-a_ij f_j and
/// [e_i,f_j}=delta_ij h_j for every index pair. Independent checks may run on
/// `threads` worker threads; the report order does not depend on it.
VerificationReport verify_chevalley(const ChevalleyBasis& b, const Matrix& a, int threads = 1);

/// Supermetric G of osp(2m+-1|2m) in the given layout.
Matrix supermetric(const AlgebraId& alg);

/// M^sT G + G M == 0.
bool osp_metric_condition(const AlgebraId& alg, const GradedMatrix& m);
/// Band symmetry about the antidiagonal that characterizes diagonal-format osp
/// elements: M_{i,i+2k} = (-1)^{k+1} M_{p+1-i-2k,p+1-i} and
/// M_{i,i+2k+1} = (-1)^{k+1} M_{p-i-2k,p+1-i}.
bool osp_symmetry_condition(const GradedMatrix& m);

/// Membership in the algebra. For osp in diagonal layout both the metric and
/// the symmetry predicates are evaluated and must agree (ConsistencyError
/// otherwise). Throws std::invalid_argument on size/format mismatch.
bool is_member(const AlgebraId& alg, const GradedMatrix& m);

/// sigma(h) = -h, sigma(e) = -f, sigma(f) = e.
ChevalleyBasis chevalley_involution(const ChevalleyBasis& b);
/// e' = alpha e, f' = beta f, h' = alpha beta h. Throws on zero coefficients.
ChevalleyBasis rescale_basis(const ChevalleyBasis& b, const std::vector<Rational>& alpha,
                             const std::vector<Rational>& beta);
/// The rescaling with alpha_i = 1 and beta_i = <e_i, f_i>^{-1}, after which
/// the Cartan matrix is symmetric and equals <h_i', h_j'>.
ChevalleyBasis normalize_basis(const ChevalleyBasis& b);

/// Basis (row-reduced) of the linear span of the generators and all their
/// iterated graded commutators.
std::vector<GradedMatrix> generated_subalgebra(const ChevalleyBasis& b);

/// Solution space of the membership equations, as a basis of matrices.
std::vector<GradedMatrix> membership_solution_space(const AlgebraId& alg);

}  // namespace superformat
