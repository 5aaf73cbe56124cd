#include "moricert/cone.hpp"

#include <algorithm>

#include "moricert/errors.hpp"

namespace moricert {

namespace {

// Scale to coprime integer entries without touching the sign: a ray and its
// negative are different objects.
IntVec ray_primitive(IntVec v) {
  Int g = vec_gcd(v);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  return v;
}

IntVec rat_to_ray(const RatVec& v) {
  Int lcm = 1;
  for (const auto& q : v) lcm = lcm / gcd(lcm, den(q)) * den(q);
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = num(v[i] * Rat(lcm));
  return ray_primitive(std::move(r));
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Rank of the set of processed inequalities active on both rays; adjacency in
// a d-dimensional pointed cone means rank d-2.
bool adjacent(const std::vector<IntVec>& processed, const IntVec& r1, const IntVec& r2,
              std::size_t d) {
  RatVecVec active;
  for (const auto& a : processed)
    if (dot(a, r1) == 0 && dot(a, r2) == 0) active.push_back(to_rat(a));
  if (active.size() < d - 2) return false;
  return rat_rank(active) == d - 2;
}

}  // namespace

RaySet extreme_rays(const std::vector<IntVec>& inequalities, const IntSymMatrix& quadratic_form) {
  if (inequalities.empty()) throw InputError("no inequalities given");
  std::size_t d = inequalities[0].size();
  for (const auto& a : inequalities)
    if (a.size() != d) throw InputError("inequality rows must have equal length");

  // Pointedness: the rows must span; otherwise the cone contains a line.
  {
    RatVecVec rows;
    for (const auto& a : inequalities) rows.push_back(to_rat(a));
    if (rat_rank(rows) < d)
      throw UnsupportedError("inequality system is not pointed (contains a line)");
  }

  // Greedy independent subset to seed a simplicial cone.
  std::vector<std::size_t> seed;
  {
    RatVecVec rows;
    for (std::size_t i = 0; i < inequalities.size() && seed.size() < d; ++i) {
      rows.push_back(to_rat(inequalities[i]));
      if (rat_rank(rows) == rows.size())
        seed.push_back(i);
      else
        rows.pop_back();
    }
  }

  RatVecVec a0(d, RatVec(d));
  for (std::size_t i = 0; i < d; ++i) a0[i] = to_rat(inequalities[seed[i]]);
  auto inv = rat_inverse(a0);
  // spanning rows guarantee invertibility of the seed block
  std::vector<IntVec> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = (*inv)[i][j];
    rays.push_back(rat_to_ray(col));
  }

  std::vector<IntVec> processed;
  for (auto s : seed) processed.push_back(inequalities[s]);

  for (std::size_t idx = 0; idx < inequalities.size(); ++idx) {
    if (std::find(seed.begin(), seed.end(), idx) != seed.end()) continue;
    const IntVec& a = inequalities[idx];
    std::vector<IntVec> pos, zero, neg;
    for (auto& r : rays) {
      Int s = dot(a, r);
      if (s > 0)
        pos.push_back(r);
      else if (s == 0)
        zero.push_back(r);
      else
        neg.push_back(r);
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }
    std::vector<IntVec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (const auto& p : pos)
      for (const auto& n : neg) {
        if (!adjacent(processed, p, n, d)) continue;
        Int sp = dot(a, p), sn = dot(a, n);
        IntVec fresh(d);
        for (std::size_t i = 0; i < d; ++i) fresh[i] = sp * n[i] - sn * p[i];
        next.push_back(ray_primitive(std::move(fresh)));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(a);
  }

  // Final exactness pass: membership plus the rank-(d-1) extremality test.
  std::vector<IntVec> final_rays;
  for (const auto& r : rays) {
    bool inside = true;
    RatVecVec active;
    for (const auto& a : inequalities) {
      Int s = dot(a, r);
      if (s < 0) {
        inside = false;
        break;
      }
      if (s == 0) active.push_back(to_rat(a));
    }
    if (!inside) continue;
    if (vec_gcd(r) == 0) continue;
    if (d == 1 || rat_rank(active) == d - 1) final_rays.push_back(r);
  }
  std::sort(final_rays.begin(), final_rays.end());
  final_rays.erase(std::unique(final_rays.begin(), final_rays.end()), final_rays.end());

  RaySet out;
  out.rays = std::move(final_rays);
  std::size_t m = out.rays.size();
  out.squares.resize(m);
  out.pairwise.assign(m, IntVec(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      out.pairwise[i][j] = quadratic_form.pair(out.rays[i], out.rays[j]);
    out.squares[i] = out.pairwise[i][i];
  }
  return out;
}

ConeCertificate certify_fpmc(const CurveConfiguration& config) {
  ValidationReport rep = validate(config);
  if (!rep.hyperbolic_span)
    throw UnsupportedError("configuration span is not hyperbolic (signature (1, rho-1) required)");
  if (config.ambient_rank && *config.ambient_rank > rep.invariants.rho)
    throw UnsupportedError("curves do not generate the ambient lattice; certification refused");

  std::vector<std::size_t> basis = span_basis(config);
  std::size_t d = basis.size();
  std::vector<IntVec> ineqs;
  for (std::size_t i = 0; i < config.size(); ++i) {
    IntVec row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = config.gram.at(i, basis[j]);
    ineqs.push_back(std::move(row));
  }
  IntSymMatrix q = config.gram.principal_submatrix(basis);

  ConeCertificate cert;
  cert.span_basis_curves = basis;
  cert.rays = extreme_rays(ineqs, q);

  for (std::size_t i = 0; i < cert.rays.rays.size(); ++i)
    if (cert.rays.squares[i] == 0) cert.isotropic_rays.push_back(i);

  for (std::size_t i = 0; i < cert.rays.rays.size(); ++i)
    if (cert.rays.squares[i] < 0) {
      cert.status = ConeStatus::Refuted;
      cert.witness = cert.rays.rays[i];
      return cert;
    }
  for (std::size_t i = 0; i < cert.rays.rays.size(); ++i)
    for (std::size_t j = i + 1; j < cert.rays.rays.size(); ++j)
      if (cert.rays.pairwise[i][j] < 0) {
        cert.status = ConeStatus::Refuted;
        cert.witness = cert.rays.rays[i];
        cert.witness_pair = std::make_pair(i, j);
        return cert;
      }
  cert.status = ConeStatus::Certified;
  return cert;
}

bool two_curve_criterion(const CurveConfiguration& config) {
  if (config.size() != 3) throw InputError("two_curve_criterion requires exactly 3 curves");
  config.gram.check_symmetric();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (config.gram.at(i, i) > 0 || config.gram.at(j, j) > 0) return false;
      Int det = config.gram.at(i, i) * config.gram.at(j, j) -
                config.gram.at(i, j) * config.gram.at(i, j);
      if (det < 0) return false;
    }
  return true;
}

bool in_cone(const std::vector<RatVec>& generators, const RatVec& b) {
  std::size_t d = b.size();
  std::size_t m = generators.size();
  if (std::all_of(b.begin(), b.end(), [](const Rat& q) { return q == 0; })) return true;
  if (m == 0) return false;

  // Phase-1 simplex: minimize the sum of artificials in  A x + s = b, x,s >= 0.
  std::size_t cols = m + d + 1;
  RatVecVec t(d, RatVec(cols, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) {
    Rat sign = b[i] < 0 ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < m; ++j) t[i][j] = sign * generators[j][i];
    t[i][m + i] = 1;
    t[i][cols - 1] = sign * b[i];
  }
  std::vector<std::size_t> basis(d);
  RatVec obj(cols, Rat(0));
  for (std::size_t j = m; j < m + d; ++j) obj[j] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    basis[i] = m + i;
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];
  }

  while (true) {
    std::size_t e = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (obj[j] < 0) {
        e = j;
        break;
      }
    if (e == cols - 1) break;
    std::size_t leave = d;
    Rat best = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (t[i][e] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][e];
      if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave]))
        { best = ratio; leave = i; }
    }
    if (leave == d) break;  // unbounded; phase 1 cannot reach it but stay safe
    Rat piv = t[leave][e];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leave || t[i][e] == 0) continue;
      Rat f = t[i][e];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rat f = obj[e];
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
    basis[leave] = e;
  }
  return obj[cols - 1] == 0;
}

namespace {

IntVec rational_direction(const RatVec& v) {
  Int lcm = 1;
  for (const auto& q : v) lcm = lcm / gcd(lcm, den(q)) * den(q);
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = num(v[i] * Rat(lcm));
  Int g = vec_gcd(r);
  if (g != 0)
    for (auto& x : r) x /= g;
  return r;
}

}  // namespace

AlmostFpmcReport check_almost_fpmc(const CurveConfiguration& config, const Divisor& r,
                                   const std::vector<Divisor>& declared_generators,
                                   const std::optional<Rat>& r_bound) {
  ValidationReport rep = validate(config);
  AlmostFpmcReport out;
  out.invariants = rep.invariants;
  out.invariants_finite = true;

  RatVec r_products = config.gram.mul(r);
  out.max_abs_pairing = 0;
  for (const auto& p : r_products)
    out.max_abs_pairing = std::max(out.max_abs_pairing, boost::multiprecision::abs(p));
  out.pairing_bounded = !r_bound || out.max_abs_pairing <= *r_bound;

  std::vector<Divisor> gens = declared_generators;
  if (gens.empty()) {
    for (std::size_t i = 0; i < config.size(); ++i) {
      Divisor e(config.size(), Rat(0));
      e[i] = 1;
      gens.push_back(std::move(e));
    }
  }

  std::vector<IntVec> directions;
  for (const auto& g : gens) directions.push_back(rational_direction(g));

  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (directions[j] != directions[i]) others.push_back(gens[j]);
    bool extremal = !in_cone(others, gens[i]);
    if (!extremal) continue;

    bool is_listed_curve = false;
    std::size_t nonzero = 0, where = 0;
    for (std::size_t c = 0; c < directions[i].size(); ++c)
      if (directions[i][c] != 0) {
        ++nonzero;
        where = c;
      }
    if (nonzero == 1 && directions[i][where] > 0) is_listed_curve = true;

    if (!is_listed_curve) {
      Rat cc = config.gram.pair(gens[i], gens[i]);
      Rat cr = rat_dot(gens[i], r_products);
      if (!(cc == 0 && cr == 0)) {
        out.generators_ok = false;
        out.failing_generators.push_back(i);
      }
    }
  }
  return out;
}

}  // namespace moricert
