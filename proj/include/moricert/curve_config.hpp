// The central input model: a configuration of curve classes with an exact
// intersection matrix and arithmetic genera, together with the invariant
// triple, adjunction, divisor checks and the narrow-part subset search.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moricert/linalg.hpp"

namespace moricert {

struct CurveClass {
  std::string name;
  Int self_int;  // diagonal Gram entry, < 0 for exceptional curves
  Int genus;     // arithmetic genus, >= 0
};

struct CurveConfiguration {
  std::string name;
  std::vector<CurveClass> curves;
  IntSymMatrix gram;
  std::optional<std::size_t> ambient_rank;

  std::size_t size() const { return curves.size(); }
  std::size_t index_of(const std::string& curve_name) const;
};

struct InvariantTriple {
  std::size_t rho = 0;  // rank of the Gram matrix (= rk NS when the curves generate)
  Int delta_e = 0;      // max of -C^2
  Int p_e = 0;          // max genus

  bool operator==(const InvariantTriple&) const = default;
};

struct DualGraphEdge {
  std::size_t a, b;
  Int weight;  // E_a . E_b > 0
};

struct ValidationReport {
  InvariantTriple invariants;
  std::vector<DualGraphEdge> edges;
  std::vector<std::vector<std::size_t>> components;  // connected components, sorted
  Signature span_signature;
  bool hyperbolic_span = false;
  std::vector<std::string> warnings;
};

// Structural validation (symmetry, signs, genus bounds) plus the invariant
// triple and dual graph. Throws InputError on malformed data.
ValidationReport validate(const CurveConfiguration& config);

using Divisor = RatVec;  // coefficients over the curve list

struct CanonicalClassResult {
  Divisor k;          // rational coefficients over the curves (zero outside the basis subset)
  Rat k_square;
  RatVec k_products;  // E_i . K for every listed curve
};

// Solve the adjunction equations E_i.K = 2g_i - 2 - E_i^2 on a maximal
// independent subset of curves and verify the remaining equations. Throws
// UnsupportedError("adjunction-inconsistent...") when the overdetermined
// system has no solution.
CanonicalClassResult canonical_class(const CurveConfiguration& config);

Rat genus_of(const CurveConfiguration& config, const Divisor& d);

struct DivisorCheck {
  Rat self;            // D.D
  RatVec products;     // D.E_i
  bool nef_on_listed;  // all products >= 0
};

DivisorCheck check_divisor(const CurveConfiguration& config, const Divisor& d);

struct Lemma11Subset {
  std::vector<std::size_t> indices;
  // max over pairs of 4 (E_i.E_j)^2 / (E_i^2 E_j^2); the paper's ratio is its
  // square root, kept squared to stay rational.
  Rat max_ratio_squared;
};

// Size-rho subsets that (a) span, (b) satisfy the exact pairwise bound
// 4 g_ij^2 < 3844 g_ii g_jj, (c) are connected. Empty result = none found.
std::vector<Lemma11Subset> find_lemma11_subsets(const CurveConfiguration& config,
                                                bool first_only = false);

// Greedy maximal independent subset of curve rows (used wherever a basis of
// the span is needed); deterministic: lowest indices win.
std::vector<std::size_t> span_basis(const CurveConfiguration& config);

}  // namespace moricert
