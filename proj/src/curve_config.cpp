#include "moricert/curve_config.hpp"

#include <algorithm>
#include <numeric>

#include "moricert/errors.hpp"

namespace moricert {

std::size_t CurveConfiguration::index_of(const std::string& curve_name) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].name == curve_name) return i;
  throw InputError("unknown curve name: " + curve_name);
}

namespace {

std::vector<std::vector<std::size_t>> connected_components(std::size_t n,
                                                           const std::vector<DualGraphEdge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.a)] = find(e.b);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<long> comp_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(i);
  }
  return comps;
}

}  // namespace

ValidationReport validate(const CurveConfiguration& config) {
  std::size_t n = config.size();
  if (n == 0) throw InputError("configuration has no curves");
  if (config.gram.dim() != n) throw InputError("gram dimension != curve count");
  config.gram.check_symmetric();

  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = config.curves[i];
    if (c.genus < 0) throw InputError("curve " + c.name + " has negative genus");
    if (config.gram.at(i, i) != c.self_int)
      throw InputError("curve " + c.name + " self-intersection does not match gram diagonal");
    if (c.self_int >= 0)
      throw InputError("curve " + c.name + " is not exceptional (self-intersection must be < 0)");
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int& w = config.gram.at(i, j);
      if (w < 0)
        throw InputError("negative intersection between distinct curves " + c.name + " and " +
                         config.curves[j].name);
      if (w > 0) rep.edges.push_back({i, j, w});
    }
  }

  Diagonalization d = signature_and_diagonalize(config.gram);
  rep.invariants.rho = d.rank;
  for (const auto& c : config.curves) {
    rep.invariants.delta_e = std::max(rep.invariants.delta_e, Int(-c.self_int));
    rep.invariants.p_e = std::max(rep.invariants.p_e, c.genus);
  }
  rep.span_signature = d.signature;
  rep.hyperbolic_span = d.signature.n_plus == 1 && d.signature.n_minus == d.rank - 1;
  rep.components = connected_components(n, rep.edges);

  if (config.ambient_rank && *config.ambient_rank < d.rank)
    throw InputError("ambient_rank smaller than the rank of the configuration span");
  if (rep.invariants.rho < 3)
    rep.warnings.push_back("rho < 3: finite-polyhedral semantics are only claimed for rho >= 3");
  if (config.ambient_rank && *config.ambient_rank > d.rank)
    rep.warnings.push_back("curves do not generate the ambient lattice");
  return rep;
}

std::vector<std::size_t> span_basis(const CurveConfiguration& config) {
  std::size_t n = config.size();
  std::vector<std::size_t> basis;
  RatVecVec rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rat(config.gram.at(i, j));
    rows.push_back(row);
    if (rat_rank(rows) == rows.size())
      basis.push_back(i);
    else
      rows.pop_back();
  }
  return basis;
}

CanonicalClassResult canonical_class(const CurveConfiguration& config) {
  std::size_t n = config.size();
  std::vector<std::size_t> basis = span_basis(config);

  // Solve on the basis: sum_j d_j (E_i . E_j) = 2 g_i - 2 - E_i^2 for i in basis.
  RatVecVec a(basis.size(), RatVec(basis.size()));
  RatVec b(basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c)
      a[r][c] = Rat(config.gram.at(basis[r], basis[c]));
    const auto& cur = config.curves[basis[r]];
    b[r] = Rat(2 * cur.genus - 2 - cur.self_int);
  }
  LinearSolveResult sol = solve_linear(a, b);
  if (sol.kind != SolveKind::Unique)
    throw UnsupportedError("adjunction-inconsistent: no unique canonical class on span basis");

  CanonicalClassResult res;
  res.k.assign(n, Rat(0));
  for (std::size_t r = 0; r < basis.size(); ++r) res.k[basis[r]] = sol.solution[r];

  res.k_products = config.gram.mul(res.k);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = config.curves[i];
    if (res.k_products[i] != Rat(2 * cur.genus - 2 - cur.self_int))
      throw UnsupportedError("adjunction-inconsistent: curve " + cur.name +
                             " violates the adjunction equation on the span");
  }
  res.k_square = rat_dot(res.k, res.k_products);
  return res;
}

Rat genus_of(const CurveConfiguration& config, const Divisor& d) {
  if (d.size() != config.size()) throw InputError("divisor length != curve count");
  CanonicalClassResult k = canonical_class(config);
  Rat dd = config.gram.pair(d, d);
  Rat dk = rat_dot(d, k.k_products);
  return (dd + dk) / 2 + 1;
}

DivisorCheck check_divisor(const CurveConfiguration& config, const Divisor& d) {
  if (d.size() != config.size()) throw InputError("divisor length != curve count");
  DivisorCheck c;
  c.products = config.gram.mul(d);
  c.self = rat_dot(d, c.products);
  c.nef_on_listed = std::all_of(c.products.begin(), c.products.end(),
                                [](const Rat& q) { return q >= 0; });
  return c;
}

namespace {

bool subset_connected(const CurveConfiguration& config, const std::vector<std::size_t>& idx) {
  std::size_t m = idx.size();
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < m; ++w)
      if (!seen[w] && config.gram.at(idx[v], idx[w]) > 0) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == m;
}

}  // namespace

std::vector<Lemma11Subset> find_lemma11_subsets(const CurveConfiguration& config, bool first_only) {
  ValidationReport rep = validate(config);
  std::size_t n = config.size();
  std::size_t rho = rep.invariants.rho;
  std::vector<Lemma11Subset> found;

  std::vector<std::size_t> idx(rho);
  // Iterate over all size-rho index subsets in lexicographic order.
  std::vector<std::size_t> comb(rho);
  std::iota(comb.begin(), comb.end(), 0);
  if (rho > n) return found;
  while (true) {
    bool pairwise_ok = true;
    Rat max_ratio_sq = 0;
    for (std::size_t a = 0; a < rho && pairwise_ok; ++a)
      for (std::size_t b = a + 1; b < rho; ++b) {
        const Int& gij = config.gram.at(comb[a], comb[b]);
        const Int gii = config.gram.at(comb[a], comb[a]);
        const Int gjj = config.gram.at(comb[b], comb[b]);
        Int lhs = 4 * gij * gij;
        Int rhs = gii * gjj;  // > 0, both diagonal entries negative
        if (lhs >= 3844 * rhs) {
          pairwise_ok = false;
          break;
        }
        max_ratio_sq = std::max(max_ratio_sq, Rat(lhs) / Rat(rhs));
      }
    if (pairwise_ok && subset_connected(config, comb)) {
      IntSymMatrix sub = config.gram.principal_submatrix(comb);
      if (signature_and_diagonalize(sub).rank == rho) {
        found.push_back({comb, max_ratio_sq});
        if (first_only) return found;
      }
    }
    // next combination
    std::size_t i = rho;
    while (i > 0) {
      --i;
      if (comb[i] != i + n - rho) {
        ++comb[i];
        for (std::size_t j = i + 1; j < rho; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return found;
    }
    if (rho == 0) return found;
  }
}

}  // namespace moricert
