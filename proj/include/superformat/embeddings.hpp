#pragma once

#include "superformat/algebras.hpp"

#include <vector>

namespace superformat {

/// Principal osp(1|2): J_- = sum_i f_i, J_+ = sum_{i,j} a^{ij} e_i,
/// H = {J_+, J_-}.
struct PrincipalTriple {
  GradedMatrix j_minus;
  GradedMatrix j_plus;
  GradedMatrix h;
};

/// Even completion X_+- = 1/2 {J_+-, J_+-}.
struct BosonicPair {
  GradedMatrix x_plus;
  GradedMatrix x_minus;
};

/// Builds the triple from a Chevalley basis and its inverse Cartan matrix.
PrincipalTriple principal_osp12(const ChevalleyBasis& b, const Matrix& a_inv);
/// Closed form for sl(n+1|n) in diagonal format: J_- = diag_-1(1,...,1),
/// J_+ = diag_+1(n,-1,n-1,-2,...,-n), H = diag(n, n-1, ..., -n).
PrincipalTriple principal_closed(int n);

BosonicPair bosonic_pair(const PrincipalTriple& t);

/// Checks the osp(1|2) relations of the triple and its bosonic completion:
/// [H,J+-]=+-J+-, {J+,J-}=H, [H,X+-]=+-2X+-, [X+,X-]=-H, [J-+,X+-]=+-J+-.
VerificationReport verify_osp12(const PrincipalTriple& t, const BosonicPair& x);
VerificationReport verify_osp12(const PrincipalTriple& t);

/// a_{p+1-j, p+1-i} == a_{ij} (symmetric) or == -a_{ij} (antisymmetric).
bool antidiagonal_symmetric(const Matrix& m);
bool antidiagonal_antisymmetric(const Matrix& m);

/// M_1 = diag_+1(n, 1, n-1, 2, ..., 1, n) of size 2n+1.
Matrix highest_weight_generator(int n);
/// M_k = M_1^k on diagonal format; k ranges over 1..2n+1 (the last is zero).
GradedMatrix highest_weights_closed(int n, int k);

/// Basis of {M in alg on band k : [H, M] = k M, [J_+, M} = 0} where (H, J_+)
/// is the principal triple of alg. Block-layout algebras are solved in
/// diagonal format and transported back. Throws std::invalid_argument for k < 1.
std::vector<GradedMatrix> highest_weights_solve(const AlgebraId& alg, int k);

/// Rescales `solution` so its first nonzero entry on band k matches
/// `reference`. Returns nullopt when the two are not proportional.
std::optional<GradedMatrix> normalize_like(const GradedMatrix& solution, const GradedMatrix& reference);

}  // namespace superformat
