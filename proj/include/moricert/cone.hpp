// Exact polyhedral cone computation: double description extreme rays, the
// light-cone containment certificate for finite polyhedral Mori cones, the
// rank-3 two-curve criterion, and the almost-finite-polyhedral checker.

#pragma once

#include <optional>
#include <vector>

#include "moricert/curve_config.hpp"

namespace moricert {

struct RaySet {
  std::vector<IntVec> rays;      // primitive, canonically (lexicographically) sorted
  IntVec squares;                // r.r under the supplied quadratic form
  std::vector<IntVec> pairwise;  // r_i.r_j, full symmetric table
};

// Extreme rays of {x : a.x >= 0 for every row a} for a pointed full-rank
// system, by incremental double description with adjacency tested by rank.
// The quadratic form feeds the squares/pairwise tables of the result.
// Throws UnsupportedError when the system contains a line.
RaySet extreme_rays(const std::vector<IntVec>& inequalities, const IntSymMatrix& quadratic_form);

enum class ConeStatus { Certified, Refuted };

struct ConeCertificate {
  ConeStatus status = ConeStatus::Refuted;
  RaySet rays;                          // coordinates over the span basis
  std::vector<std::size_t> span_basis_curves;  // curve indices forming the basis
  std::optional<IntVec> witness;        // refuting ray
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;  // negative pairwise product
  std::vector<std::size_t> isotropic_rays;  // indices into rays with r.r = 0
};

// Certified iff the dual cone {x : x.E_i >= 0} lies in one half of the closed
// light cone: every extreme ray square >= 0 and every pairwise product >= 0.
// Requires a hyperbolic span generated by the curves.
ConeCertificate certify_fpmc(const CurveConfiguration& config);

// rho = 3 shortcut: every 2x2 principal Gram submatrix negative semidefinite.
bool two_curve_criterion(const CurveConfiguration& config);

struct AlmostFpmcReport {
  bool invariants_finite = true;  // condition (1); maxima reported below
  InvariantTriple invariants;
  bool generators_ok = true;      // condition (2)
  std::vector<std::size_t> failing_generators;  // extremal but neither curve nor isotropic r-orthogonal
  bool pairing_bounded = true;    // condition (3)
  Rat max_abs_pairing;            // max |E.r|
  bool all_pass() const { return invariants_finite && generators_ok && pairing_bounded; }
};

AlmostFpmcReport check_almost_fpmc(const CurveConfiguration& config, const Divisor& r,
                                   const std::vector<Divisor>& declared_generators,
                                   const std::optional<Rat>& r_bound);

// Exact feasibility of b in cone(columns of a) with lambda >= 0, via phase-1
// simplex over the rationals (Bland's rule).
bool in_cone(const std::vector<RatVec>& generators, const RatVec& b);

}  // namespace moricert
