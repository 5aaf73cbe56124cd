// Exact linear algebra over Z and Q: congruence diagonalization (signature),
// Smith normal form, kernel bases, and linear solving. Everything downstream
// (hyperbolicity, cone certificates, discriminant groups, adjunction) reduces
// to these four routines.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "moricert/matrix.hpp"

namespace moricert {

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  bool operator==(const Signature&) const = default;
};

struct Diagonalization {
  Signature signature;
  RatVecVec transform;   // T with T^t M T diagonal, det T = +-1
  RatVec diagonal;       // the diagonal of T^t M T
  Int determinant;       // det M = product of the diagonal up to the square det(T)^2 = 1
  std::size_t rank = 0;
};

// Congruence diagonalization with symmetric pivoting. Zero leading principal
// minors are handled by diagonal swaps and, when every remaining diagonal
// entry vanishes, by the basis change x_i <- x_i + x_j which manufactures a
// nonzero pivot out of an off-diagonal entry.
Diagonalization signature_and_diagonalize(const IntSymMatrix& m);

inline Signature signature_of(const IntSymMatrix& m) {
  return signature_and_diagonalize(m).signature;
}

struct SmithNormalForm {
  // u * m * v = s with u, v unimodular and s diagonal, d_i | d_{i+1}.
  std::vector<IntVec> u, v, s;
  IntVec invariant_factors;  // nonzero diagonal entries of s, all positive
};

SmithNormalForm smith_normal_form(const std::vector<IntVec>& m);
SmithNormalForm smith_normal_form(const IntSymMatrix& m);

// Primitive integer vectors spanning the rational null space of m.
std::vector<IntVec> kernel_basis(const IntSymMatrix& m);

enum class SolveKind { Unique, Inconsistent, Underdetermined };

struct LinearSolveResult {
  SolveKind kind;
  RatVec solution;  // populated only when kind == Unique
};

LinearSolveResult solve_linear(const RatVecVec& a, const RatVec& b);

// Small helpers used across modules.
Rat rat_dot(const RatVec& a, const RatVec& b);
RatVecVec rat_identity(std::size_t n);
RatVecVec rat_transpose(const RatVecVec& a);
RatVecVec rat_mul(const RatVecVec& a, const RatVecVec& b);
std::optional<RatVecVec> rat_inverse(const RatVecVec& a);
std::size_t rat_rank(RatVecVec a);

}  // namespace moricert
