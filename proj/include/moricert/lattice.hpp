// Quadratic-lattice semantics on top of exact-linalg: hyperbolicity,
// discriminant groups with their Q/2Z-valued forms, and the bounded-class
// enumeration used for finiteness of exceptional-curve candidates.

#pragma once

#include <string>
#include <vector>

#include "moricert/linalg.hpp"

namespace moricert {

struct Lattice {
  IntSymMatrix gram;
  std::vector<std::string> basis_names;

  Lattice() = default;
  explicit Lattice(IntSymMatrix g, std::vector<std::string> names = {});

  std::size_t rank() const { return gram.dim(); }
  bool is_even() const;
  Int determinant() const { return signature_and_diagonalize(gram).determinant; }
};

bool is_hyperbolic(const Lattice& l);

struct DiscriminantGroup {
  IntVec invariant_factors;            // the d_i > 1
  RatVecVec generator_lifts;           // lift of each generator in L tensor Q coordinates
  RatVec q_values;                     // q(g_i) reduced into [0, 2)
  RatVecVec bilinear;                  // b(g_i, g_j) reduced into [0, 1)

  std::size_t order_ulong() const;
};

// For an even nondegenerate lattice: cokernel of the Gram matrix with its
// discriminant quadratic form q(x) = x^t G x mod 2 on generator lifts.
DiscriminantGroup discriminant_group_and_form(const Lattice& l);

// Reduce into [0, 2) resp. [0, 1).
Rat mod2(Rat q);
Rat mod1(Rat q);

// All e with -delta <= e^2 < 0 and 0 <= (e^2 + e.K)/2 + 1 <= p_max with
// (e^2 + e.K) even, enumerated exactly. Requires K^2 > 0 so that the set is
// finite; vectors are returned in lexicographic order.
std::vector<IntVec> enumerate_bounded_classes(const Lattice& l, const IntVec& k, const Int& delta,
                                              const Int& p_max);

}  // namespace moricert
