#include "moricert/ample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "moricert/errors.hpp"

namespace moricert {

namespace {

bool support_connected(const IntSymMatrix& g) {
  std::size_t n = g.dim();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (!seen[w] && w != v && g.at(v, w) != 0) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

void check_pf_preconditions(const IntSymMatrix& g) {
  g.check_symmetric();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (g.at(i, j) < 0)
        throw UnsupportedError("pf_eigen requires nonnegative off-diagonal entries");
  if (!support_connected(g))
    throw UnsupportedError("pf_eigen requires an indecomposable (connected) matrix");
}

}  // namespace

PFResult pf_eigen(const IntSymMatrix& g, const Rat& precision) {
  check_pf_preconditions(g);
  std::size_t n = g.dim();

  // Shift past the most negative diagonal entry plus one: strictly positive
  // diagonal makes the matrix primitive, so power iteration cannot oscillate.
  Int shift = 1;
  for (std::size_t i = 0; i < n; ++i) shift = std::max(shift, 1 - g.at(i, i));

  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = static_cast<double>(g.at(i, j)) + (i == j ? static_cast<double>(shift) : 0.0);

  std::vector<double> v(n, 1.0);
  auto iterate = [&](std::size_t steps) {
    for (std::size_t s = 0; s < steps; ++s) {
      std::vector<double> w(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i] += a[i][j] * v[j];
      double mx = 0;
      for (double x : w) mx = std::max(mx, std::abs(x));
      if (mx == 0) return;
      for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / mx;
    }
  };
  iterate(64);

  // Collatz-Wielandt: any positive rational w gives exact bounds
  // min_i (Aw)_i / w_i <= lambda(A) <= max_i (Aw)_i / w_i.
  auto bounds_for = [&](const RatVec& w) -> std::pair<Rat, Rat> {
    RatVec gw = g.mul(w);
    Rat lo, hi;
    for (std::size_t i = 0; i < n; ++i) {
      Rat ratio = (gw[i] + Rat(shift) * w[i]) / w[i];
      if (i == 0 || ratio < lo) lo = ratio;
      if (i == 0 || ratio > hi) hi = ratio;
    }
    return {lo - Rat(shift), hi - Rat(shift)};
  };

  Int denom = 10;
  for (int round = 0;; ++round) {
    RatVec w(n);
    for (std::size_t i = 0; i < n; ++i) {
      Int numer = Int(std::llround(std::abs(v[i]) * static_cast<double>(denom)));
      if (numer <= 0) numer = 1;
      w[i] = Rat(numer) / Rat(denom);
    }
    auto [lo, hi] = bounds_for(w);
    if (hi - lo <= precision) return {lo, hi, w, shift};
    denom *= 10;
    if (round < 12) {
      iterate(64 << std::min(round, 6));
    } else {
      // Doubles have run out of accuracy; continue the iteration exactly,
      // re-rounding to the current denominator to keep entries small.
      RatVec gw = g.mul(w);
      Rat mx = 0;
      for (std::size_t i = 0; i < n; ++i) {
        gw[i] += Rat(shift) * w[i];
        mx = std::max(mx, gw[i]);
      }
      for (std::size_t i = 0; i < n; ++i) {
        Rat t = gw[i] / mx;
        Int numer = rat_floor(t * Rat(denom));
        if (numer <= 0) numer = 1;
        w[i] = Rat(numer) / Rat(denom);
      }
      auto [lo2, hi2] = bounds_for(w);
      if (hi2 - lo2 <= precision) return {lo2, hi2, w, shift};
      for (std::size_t i = 0; i < n; ++i) v[i] = w[i].convert_to<double>();
    }
  }
}

AmpleCertificate verify_ample(const IntSymMatrix& gram, const IntVec& a) {
  if (a.size() != gram.dim()) throw InputError("coefficient vector has wrong length");
  for (const auto& x : a)
    if (x <= 0) throw InputError("ample certificate requires strictly positive coefficients");
  AmpleCertificate cert;
  cert.a = a;
  cert.products = gram.mul(a);
  for (const auto& p : cert.products)
    if (p <= 0) throw InputError("ample certificate violated: some E_j . h <= 0");
  cert.square = 0;
  for (std::size_t i = 0; i < a.size(); ++i) cert.square += a[i] * cert.products[i];
  if (cert.square <= 0) throw InputError("ample certificate violated: h^2 <= 0");
  return cert;
}

namespace {

void check_make_ample_preconditions(const IntSymMatrix& gram) {
  check_pf_preconditions(gram);
  Signature s = signature_of(gram);
  if (s.n_plus != 1)
    throw UnsupportedError("make_ample requires a hyperbolic span (exactly one positive square)");
}

// Exact minimal search over positive integer coefficient vectors. Uses the
// bound h^2 = sum_i a_i (Gram a)_i >= sum_i a_i for any valid certificate, so
// once a value v is in hand no better vector has an entry >= v. Entries stay
// far below 2^40, so the scan runs in long long; the winner is re-verified in
// exact arithmetic by the caller.
struct MinimalSearch {
  std::vector<std::vector<long long>> g;
  std::size_t n;
  long long best_value = -1;
  std::vector<long long> best;
  std::vector<long long> a;

  explicit MinimalSearch(const IntSymMatrix& gram) : n(gram.dim()) {
    g.assign(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i][j] = gram.at(i, j).convert_to<long long>();
    a.assign(n, 1);
  }

  void consider(long long a0) {
    a[0] = a0;
    long long value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long long row = 0;
      for (std::size_t j = 0; j < n; ++j) row += g[i][j] * a[j];
      if (row <= 0) return;
      value += a[i] * row;
    }
    if (value <= 0) return;
    if (best_value < 0 || value < best_value ||
        (value == best_value && std::vector<long long>(a) < best)) {
      best_value = value;
      best = a;
    }
  }

  // Coordinates 1..n-1 are fixed; the value is concave in a_0 (g[0][0] < 0),
  // so the minimum over the feasible a_0 interval sits at an endpoint.
  void scan_first_coordinate(long long cap) {
    long long lo = 1, hi = cap;
    for (std::size_t i = 0; i < n; ++i) {
      long long rest = 0;
      for (std::size_t j = 1; j < n; ++j) rest += g[i][j] * a[j];
      long long c = g[i][0];
      // need c * a0 + rest >= 1
      if (c > 0) {
        long long need = 1 - rest;
        long long bound = need <= 0 ? 1 : (need + c - 1) / c;
        lo = std::max(lo, bound);
      } else if (c < 0) {
        long long room = rest - 1;
        if (room < 0) return;
        hi = std::min(hi, room / (-c));
      } else if (rest < 1) {
        return;
      }
    }
    if (lo > hi) return;
    consider(lo);
    if (hi != lo) consider(hi);
  }

  void recurse(std::size_t level, long long cap, long long partial_sum) {
    if (level == 0) {
      scan_first_coordinate(cap);
      return;
    }
    for (long long v = 1; v <= cap; ++v) {
      if (best_value >= 0 && partial_sum + v >= best_value) break;
      a[level] = v;
      recurse(level - 1, cap, partial_sum + v);
    }
    a[level] = 1;
  }

  void run() {
    for (long long box = 1; best_value < 0; box *= 2) {
      recurse(n - 1, box, 0);
      if (box > (1LL << 40)) throw UnsupportedError("minimal ample search did not converge");
    }
    long long cap = best_value - static_cast<long long>(n) + 1;
    if (cap >= 1) recurse(n - 1, cap, 0);
  }
};

// Shared by both entry points once the preconditions are settled; the gram
// may be degenerate (more curves than the span rank), the certificate
// conditions quantify over every listed curve and need no independence.
AmpleCertificate make_ample_core(const IntSymMatrix& gram, bool minimal) {
  std::size_t n = gram.dim();
  if (minimal) {
    MinimalSearch search(gram);
    search.run();
    IntVec a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = search.best[i];
    return verify_ample(gram, a);
  }

  Rat precision(1, 1000);
  for (int attempt = 0; attempt < 24; ++attempt) {
    PFResult pf = pf_eigen(gram, precision);
    Rat mx = 0;
    for (const auto& x : pf.vector_approx) mx = std::max(mx, x);
    Int scale = 10;
    for (int s = 0; s < 12; ++s) {
      IntVec a(n);
      for (std::size_t i = 0; i < n; ++i) {
        Int v = rat_floor(pf.vector_approx[i] / mx * Rat(scale) + Rat(1, 2));
        a[i] = v <= 0 ? Int(1) : v;
      }
      IntVec products = gram.mul(a);
      bool ok = std::all_of(products.begin(), products.end(), [](const Int& p) { return p > 0; });
      if (ok) {
        Int square = 0;
        for (std::size_t i = 0; i < n; ++i) square += a[i] * products[i];
        if (square > 0) return verify_ample(gram, a);
      }
      scale *= 10;
    }
    precision /= 1000;
  }
  throw UnsupportedError("make_ample rounding did not converge");
}

}  // namespace

AmpleCertificate make_ample(const IntSymMatrix& gram, bool minimal) {
  check_make_ample_preconditions(gram);
  return make_ample_core(gram, minimal);
}

AmpleCertificate make_ample(const CurveConfiguration& config, bool minimal) {
  ValidationReport rep = validate(config);
  if (!rep.hyperbolic_span) throw UnsupportedError("make_ample requires a hyperbolic span");
  if (rep.components.size() != 1)
    throw UnsupportedError("make_ample requires a connected configuration");
  check_pf_preconditions(config.gram);
  return make_ample_core(config.gram, minimal);
}

ReiderClass reider_class(const CurveConfiguration& config, const AmpleCertificate& cert) {
  CanonicalClassResult k = canonical_class(config);
  ReiderClass r;
  r.coeffs.resize(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) r.coeffs[i] = k.k[i] + Rat(4 * cert.a[i]);
  Rat kh = 0;
  for (std::size_t i = 0; i < config.size(); ++i) kh += Rat(cert.a[i]) * k.k_products[i];
  r.square = k.k_square + 8 * kh + 16 * Rat(cert.square);
  r.products.resize(config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    r.products[i] = k.k_products[i] + Rat(4 * cert.products[i]);
  return r;
}

namespace {

std::vector<long long> encode(const IntSymMatrix& m) {
  std::size_t n = m.dim();
  std::vector<long long> e;
  e.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) e.push_back((-m.at(i, i)).convert_to<long long>());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back(m.at(i, j).convert_to<long long>());
  return e;
}

}  // namespace

IntSymMatrix canonical_form(const IntSymMatrix& m) {
  std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntSymMatrix best = m;
  std::vector<long long> best_enc = encode(m);
  while (std::next_permutation(perm.begin(), perm.end())) {
    IntSymMatrix cand = m.permuted(perm);
    std::vector<long long> enc = encode(cand);
    if (enc < best_enc) {
      best_enc = std::move(enc);
      best = std::move(cand);
    }
  }
  return best;
}

std::vector<IntSymMatrix> enumerate_gram(std::size_t rho, const Int& delta_e,
                                         std::optional<Int> off_diag_cap) {
  if (rho < 2) throw InputError("enumerate_gram requires rho >= 2");
  if (rho > 4) throw UnsupportedError("enumerate_gram guarded at rho <= 4");
  if (delta_e < 1) throw InputError("delta_e must be >= 1");

  long long delta = delta_e.convert_to<long long>();
  std::size_t pairs = rho * (rho - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> pair_idx;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = i + 1; j < rho; ++j) pair_idx.emplace_back(i, j);

  std::set<std::vector<long long>> seen;
  std::vector<IntSymMatrix> out;

  std::vector<long long> diag(rho, -1);
  std::vector<long long> off(pairs, 0);

  auto emit_candidate = [&]() {
    // connected support
    {
      std::vector<std::size_t> parent(rho);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::size_t p = 0; p < pairs; ++p)
        if (off[p] != 0) parent[find(pair_idx[p].first)] = find(pair_idx[p].second);
      std::size_t root = 0;
      while (parent[root] != root) root = parent[root];
      for (std::size_t i = 0; i < rho; ++i) {
        std::size_t r = i;
        while (parent[r] != r) r = parent[r];
        if (r != root) return;
      }
    }

    IntSymMatrix m(rho);
    for (std::size_t i = 0; i < rho; ++i) m.at(i, i) = diag[i];
    for (std::size_t p = 0; p < pairs; ++p) {
      m.at(pair_idx[p].first, pair_idx[p].second) = off[p];
      m.at(pair_idx[p].second, pair_idx[p].first) = off[p];
    }

    // hyperbolic signature (1, rho-1, 0); determinant shortcuts cover
    // rho <= 3 with a strictly negative diagonal
    if (rho == 2) {
      if (diag[0] * diag[1] - off[0] * off[0] >= 0) return;
    } else if (rho == 3) {
      Int det = signature_and_diagonalize(m).determinant;
      if (det <= 0) return;
    } else {
      Signature s = signature_of(m);
      if (!(s.n_plus == 1 && s.n_zero == 0)) return;
    }

    IntSymMatrix canon = canonical_form(m);
    auto enc = encode(canon);
    if (seen.insert(enc).second) out.push_back(std::move(canon));
  };

  // iterate diagonals and admissible off-diagonal boxes
  std::vector<long long> cap(pairs);
  auto recurse_off = [&](auto&& self, std::size_t p) -> void {
    if (p == pairs) {
      emit_candidate();
      return;
    }
    for (long long c = 0; c <= cap[p]; ++c) {
      off[p] = c;
      self(self, p + 1);
    }
    off[p] = 0;
  };
  auto recurse_diag = [&](auto&& self, std::size_t i) -> void {
    if (i == rho) {
      for (std::size_t p = 0; p < pairs; ++p) {
        long long prod = diag[pair_idx[p].first] * diag[pair_idx[p].second];
        // largest c with 4c^2 < 3844 * prod
        long long c = floor_sqrt(Rat(3844 * prod - 1) / Rat(4)).convert_to<long long>();
        // the pairwise bound implies the coarse uniform one
        if (c >= 31 * delta)
          throw UnsupportedError("enumeration bound inconsistency: pairwise cap exceeds 31*delta");
        if (off_diag_cap) c = std::min(c, off_diag_cap->convert_to<long long>());
        cap[p] = c;
      }
      recurse_off(recurse_off, 0);
      return;
    }
    for (long long d = -delta; d <= -1; ++d) {
      diag[i] = d;
      self(self, i + 1);
    }
  };
  recurse_diag(recurse_diag, 0);

  std::sort(out.begin(), out.end(),
            [](const IntSymMatrix& a, const IntSymMatrix& b) { return encode(a) < encode(b); });
  return out;
}

EnumerationSummary effective_bounds(std::size_t rho, const Int& delta_e, std::optional<Int> p_e) {
  std::vector<IntSymMatrix> grams = enumerate_gram(rho, delta_e);
  EnumerationSummary sum;
  sum.rho = rho;
  sum.delta_e = delta_e;
  sum.count = grams.size();

  for (const auto& g : grams) {
    // the hyperbolic Perron root is strictly positive for every admissible matrix
    PFResult pf = pf_eigen(g, Rat(1, 10));
    if (!(pf.lambda_hi > 0))
      throw UnsupportedError("enumeration invariant violated: lambda <= 0");

    AmpleCertificate cert = make_ample(g, /*minimal=*/true);
    sum.n_effective = std::max(sum.n_effective, cert.square);

    if (!p_e) continue;
    bool attains_delta = false;
    for (std::size_t i = 0; i < rho; ++i)
      if (g.at(i, i) == -delta_e) attains_delta = true;
    if (!attains_delta) continue;

    // all genus assignments with values in [0, p_e], at least one attaining p_e
    std::vector<Int> genera(rho, Int(0));
    long long pmax = p_e->convert_to<long long>();
    auto assign = [&](auto&& self, std::size_t i) -> void {
      if (i == rho) {
        bool attains_p = false;
        for (const auto& x : genera)
          if (x == *p_e) attains_p = true;
        if (!attains_p) return;
        CurveConfiguration cfg;
        cfg.gram = g;
        for (std::size_t c = 0; c < rho; ++c)
          cfg.curves.push_back({"g" + std::to_string(c + 1), g.at(c, c), genera[c]});
        try {
          CanonicalClassResult k = canonical_class(cfg);
          Rat kh = 0;
          for (std::size_t c = 0; c < rho; ++c) kh += Rat(cert.a[c]) * k.k_products[c];
          Rat sq = k.k_square + 8 * kh + 16 * Rat(cert.square);
          if (!sum.n_prime_effective || sq > *sum.n_prime_effective) sum.n_prime_effective = sq;
        } catch (const UnsupportedError&) {
          // adjunction-inconsistent assignment: skipped
        }
        return;
      }
      for (long long v = 0; v <= pmax; ++v) {
        genera[i] = v;
        self(self, i + 1);
      }
    };
    assign(assign, 0);
  }
  return sum;
}

}  // namespace moricert
