// The boundedness pipeline: Perron-Frobenius eigen data with exact rational
// enclosures, integer ample divisors with fully verified certificates, the
// adjoint very-ample class, and the bounded enumeration of admissible Gram
// matrices with effective h^2 bounds.

#pragma once

#include <optional>
#include <vector>

#include "moricert/curve_config.hpp"

namespace moricert {

struct PFResult {
  Rat lambda_lo, lambda_hi;  // exact enclosure of the top eigenvalue
  RatVec vector_approx;      // positive rational vector
  Int shift_used;            // diagonal shift applied to reach a nonnegative matrix
};

// Collatz-Wielandt enclosure of the top eigenvalue of a symmetric matrix with
// nonnegative off-diagonal entries and connected support. The float power
// iteration only steers; the reported enclosure is exact.
PFResult pf_eigen(const IntSymMatrix& g, const Rat& precision);

struct ReiderClass {
  RatVec coeffs;    // K + 4h over the curves
  Rat square;       // (K + 4h)^2
  RatVec products;  // (K + 4h) . E_i
};

struct AmpleCertificate {
  IntVec a;          // positive integer coefficients of h
  IntVec products;   // (Gram a)_i = E_i . h, all > 0
  Int square;        // a^t Gram a = h^2 > 0
  std::optional<ReiderClass> reider;
};

// Re-verifies a > 0, Gram a > 0, a^t Gram a > 0 in exact arithmetic; throws
// InputError if the vector is not a valid certificate.
AmpleCertificate verify_ample(const IntSymMatrix& gram, const IntVec& a);

// Lemma 1.2 divisor: positive integers a with E_j.h > 0 for all j and h^2 > 0.
// Default strategy rounds the Perron-Frobenius vector with escalating
// denominators; minimal mode exhaustively searches coefficient boxes and
// returns the exact minimum of h^2 (correct because h^2 >= sum a_i for any
// valid certificate, so nothing outside the final box can do better).
AmpleCertificate make_ample(const IntSymMatrix& gram, bool minimal = false);
AmpleCertificate make_ample(const CurveConfiguration& config, bool minimal = false);

ReiderClass reider_class(const CurveConfiguration& config, const AmpleCertificate& cert);

// All admissible Gram matrices for the given invariants: diagonal in
// [-delta_e, -1], off-diagonal >= 0 with 4 g_ij^2 < 3844 g_ii g_jj, connected
// support and signature (1, rho-1), one canonical representative per
// simultaneous-permutation class, deterministic order.
std::vector<IntSymMatrix> enumerate_gram(std::size_t rho, const Int& delta_e,
                                         std::optional<Int> off_diag_cap = std::nullopt);

struct EnumerationSummary {
  std::size_t rho = 0;
  Int delta_e = 0;
  std::size_t count = 0;       // admissible classes
  Int n_effective = 0;         // max over classes of the minimal certified h^2
  std::optional<Rat> n_prime_effective;  // max of (K+4h)^2 over admissible genus assignments
};

EnumerationSummary effective_bounds(std::size_t rho, const Int& delta_e,
                                    std::optional<Int> p_e = std::nullopt);

// Canonical representative under simultaneous row/column permutation: the
// encoding (negated diagonal, then upper triangle row-major) is minimized
// lexicographically, which sorts the diagonal descending.
IntSymMatrix canonical_form(const IntSymMatrix& m);

}  // namespace moricert
