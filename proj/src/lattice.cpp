#include "moricert/lattice.hpp"

#include <algorithm>

#include "moricert/errors.hpp"

namespace moricert {

Lattice::Lattice(IntSymMatrix g, std::vector<std::string> names)
    : gram(std::move(g)), basis_names(std::move(names)) {
  gram.check_symmetric();
  if (basis_names.empty()) {
    for (std::size_t i = 0; i < gram.dim(); ++i) basis_names.push_back("e" + std::to_string(i + 1));
  }
  if (basis_names.size() != gram.dim()) throw InputError("basis name count != rank");
  if (signature_and_diagonalize(gram).determinant == 0)
    throw InputError("lattice gram matrix is degenerate");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < gram.dim(); ++i)
    if (gram.at(i, i) % 2 != 0) return false;
  return true;
}

bool is_hyperbolic(const Lattice& l) {
  Signature s = signature_of(l.gram);
  return s.n_plus == 1 && s.n_zero == 0 && s.n_minus == l.rank() - 1;
}

Rat mod2(Rat q) {
  Int f = rat_floor(q / 2);
  return q - Rat(2) * Rat(f);
}

Rat mod1(Rat q) {
  Int f = rat_floor(q);
  return q - Rat(f);
}

std::size_t DiscriminantGroup::order_ulong() const {
  Int o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return static_cast<std::size_t>(o);
}

DiscriminantGroup discriminant_group_and_form(const Lattice& l) {
  if (!l.is_even()) throw UnsupportedError("discriminant form requires an even lattice");
  std::size_t n = l.rank();
  SmithNormalForm f = smith_normal_form(l.gram);

  // u G v = s  =>  coker(G) = +_i Z/d_i, generator i lifting to (col_i of v)/d_i
  // in the rational span of the basis.
  DiscriminantGroup d;
  for (std::size_t i = 0; i < n; ++i) {
    Int di = f.s[i][i];
    if (di <= 1) continue;
    d.invariant_factors.push_back(di);
    RatVec lift(n);
    for (std::size_t r = 0; r < n; ++r) lift[r] = Rat(f.v[r][i]) / Rat(di);
    d.generator_lifts.push_back(std::move(lift));
  }
  std::size_t k = d.generator_lifts.size();
  d.q_values.resize(k);
  d.bilinear.assign(k, RatVec(k));
  for (std::size_t i = 0; i < k; ++i) {
    d.q_values[i] = mod2(l.gram.pair(d.generator_lifts[i], d.generator_lifts[i]));
    for (std::size_t j = 0; j < k; ++j)
      d.bilinear[i][j] = mod1(l.gram.pair(d.generator_lifts[i], d.generator_lifts[j]));
  }
  return d;
}

namespace {

// Positive definite comparison form m(x) = 2 (x.K)^2 / K^2 - x^2 used to turn
// the hyperbolic search into a Fincke-Pohst enumeration.
RatVecVec comparison_form(const IntSymMatrix& gram, const IntVec& k, const Int& k2) {
  std::size_t n = gram.dim();
  IntVec gk = gram.mul(k);
  RatVecVec m(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = Rat(2) * Rat(gk[i] * gk[j]) / Rat(k2) - Rat(gram.at(i, j));
  return m;
}

// LDL^t decomposition of a positive definite rational matrix, expressed as
// q(x) = sum_i d_i (x_i + sum_{j>i} l_ij x_j)^2.
struct LdlForm {
  RatVec d;
  RatVecVec l;  // l[i][j] defined for j > i
};

LdlForm ldl(const RatVecVec& m) {
  std::size_t n = m.size();
  LdlForm f;
  f.d.assign(n, Rat(0));
  f.l.assign(n, RatVec(n, Rat(0)));
  RatVecVec a = m;
  for (std::size_t i = 0; i < n; ++i) {
    f.d[i] = a[i][i];
    if (f.d[i] <= 0) throw UnsupportedError("comparison form not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) f.l[i][j] = a[i][j] / f.d[i];
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c) a[r][c] -= a[r][i] * a[i][c] / f.d[i];
  }
  return f;
}

void fp_recurse(const LdlForm& f, const Rat& budget, std::size_t level, IntVec& x,
                std::vector<IntVec>& out) {
  // center c = -sum_{j>level} l[level][j] x_j, allowed |x - c| <= sqrt(budget/d);
  // the loop range over-covers by at most one on each side and every candidate
  // is re-checked exactly.
  Rat c = 0;
  for (std::size_t j = level + 1; j < x.size(); ++j) c -= f.l[level][j] * Rat(x[j]);
  Rat r = budget / f.d[level];
  if (r < 0) return;
  Int s = floor_sqrt(r);
  Int lo = rat_ceil(c) - s - 1, hi = rat_floor(c) + s + 1;
  for (Int v = lo; v <= hi; ++v) {
    Rat dev = Rat(v) - c;
    Rat used = f.d[level] * dev * dev;
    if (used > budget) continue;
    x[level] = v;
    if (level == 0) {
      out.push_back(x);
    } else {
      fp_recurse(f, budget - used, level - 1, x, out);
    }
  }
  x[level] = 0;
}

}  // namespace

std::vector<IntVec> enumerate_bounded_classes(const Lattice& l, const IntVec& k, const Int& delta,
                                              const Int& p_max) {
  if (k.size() != l.rank()) throw InputError("K has wrong length");
  if (delta < 1) throw InputError("delta must be >= 1");
  if (p_max < 0) throw InputError("p_max must be >= 0");
  Int k2 = l.gram.pair(k, k);
  if (k2 <= 0) throw UnsupportedError("enumerate_bounded_classes requires K.K > 0");

  // Genus window: for e^2 = s the pairing t = e.K ranges over
  // [-s - 2, 2 p_max - 2 - s]; collect the largest |t| over s in [-delta, -1].
  Int t_abs = 0;
  bool window_nonempty = false;
  for (Int s = -delta; s <= -1; ++s) {
    Int lo = -s - 2, hi = 2 * p_max - 2 - s;
    if (lo > hi) continue;
    window_nonempty = true;
    t_abs = std::max(t_abs, std::max(boost::multiprecision::abs(lo), boost::multiprecision::abs(hi)));
  }
  if (!window_nonempty) return {};

  Rat budget = Rat(delta) + Rat(t_abs * t_abs) / Rat(k2);
  LdlForm f = ldl(comparison_form(l.gram, k, k2));

  std::vector<IntVec> raw;
  IntVec x(l.rank(), Int(0));
  fp_recurse(f, budget, l.rank() - 1, x, raw);

  std::vector<IntVec> out;
  for (auto& e : raw) {
    Int s = l.gram.pair(e, e);
    if (s < -delta || s >= 0) continue;
    Int t = l.gram.pair(e, k);
    if ((s + t) % 2 != 0) continue;
    Int pa = (s + t) / 2 + 1;
    if (pa < 0 || pa > p_max) continue;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace moricert
