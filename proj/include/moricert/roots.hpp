// ADE and affine-ADE recognition of (-2)-curve configurations, the rank-8
// parabolic criterion, fiber divisors with their indices, and Mordell-Weil
// groups of rank-8 fiber sums via discriminant-form glue.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moricert/curve_config.hpp"
#include "moricert/lattice.hpp"

namespace moricert {

enum class RootFamily { A, D, E };

struct RootLabel {
  RootFamily family = RootFamily::A;
  std::size_t rank = 0;
  bool affine = false;

  bool operator==(const RootLabel&) const = default;
  std::string str() const;  // e.g. "A4", "D8~"
};

enum class RootKind { None, Finite, Affine };

struct RootComponentReport {
  std::vector<std::size_t> vertices;  // indices into the configuration
  RootKind kind = RootKind::None;
  RootLabel label;       // valid when kind != None
  std::size_t rank = 0;  // r_i: vertex count (finite) or vertex count - 1 (affine)
  IntVec marks;          // affine only: positive primitive kernel vector over vertices
};

// Restrict to curves with self-intersection -2, split into connected
// components and classify each by exact (semi)definiteness plus Gram
// isomorphism against generated Dynkin templates.
std::vector<RootComponentReport> classify_minus2_components(const CurveConfiguration& config);

struct Case2bReport {
  bool holds = false;
  Rat k_square;
  std::vector<RootComponentReport> components;
  Int affine_rank_sum = 0;
  RatVec minus_k_products;  // -K.E per curve (nef check on the listed set)
};

// K^2 = 0, every (-2)-component affine, and the affine ranks sum to 8.
Case2bReport case2b_criterion(const CurveConfiguration& config);

enum class FiberDivisorStatus { Ok, NotAntimultiple };

struct FiberDivisor {
  FiberDivisorStatus status = FiberDivisorStatus::NotAntimultiple;
  Divisor d;             // marks placed on the component curves
  std::optional<Rat> m;  // D = -m K when status == Ok
};

FiberDivisor fiber_divisor_and_index(const CurveConfiguration& config,
                                     const RootComponentReport& component);

struct MWGroup {
  IntVec invariant_factors;  // ascending divisibility; empty = trivial group
  Int order = 1;
  bool ambiguous = false;
  std::vector<IntVec> all_types;  // populated when ambiguous
};

// Gram matrix of the finite root lattice (negative definite curve convention).
IntSymMatrix finite_root_gram(const RootLabel& label);
IntSymMatrix affine_root_gram(const RootLabel& label);

// Mordell-Weil group of a rank-8 affine fiber list: the common isomorphism
// type of totally isotropic subgroups H of the discriminant group of the
// orthogonal fiber-lattice sum with |H|^2 = |disc|. Throws UnsupportedError
// ("infeasible") when no such subgroup exists.
MWGroup mw_group(const std::vector<RootLabel>& fibers);

// Fiber-list mini grammar: terms "[k]<A|D|E><n>~" joined by '+', the trailing
// '~' marking affine types (mandatory for table rows).
std::vector<RootLabel> parse_fiber_list(const std::string& text);
std::string fiber_list_str(const std::vector<RootLabel>& fibers);

struct MWTableRow {
  std::string fibers;
  IntVec expected_factors;
};

struct MWTableRowResult {
  MWTableRow row;
  IntVec computed_factors;
  Int order = 1;
  bool order_invariant_ok = false;  // order^2 == product of fiber lattice determinants
  bool match = false;
};

std::vector<MWTableRowResult> verify_mw_table();

}  // namespace moricert
