#include "moricert/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace moricert {

std::string to_string(const Int& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << num(q);
  if (den(q) != 1) os << "/" << den(q);
  return os.str();
}

Rat rat_dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVecVec rat_identity(std::size_t n) {
  RatVecVec t(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;
  return t;
}

RatVecVec rat_transpose(const RatVecVec& a) {
  if (a.empty()) return {};
  RatVecVec t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatVecVec rat_mul(const RatVecVec& a, const RatVecVec& b) {
  RatVecVec c(a.size(), RatVec(b[0].size(), Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace {

// Column operation col_i += f * col_j applied congruently (rows too) to a,
// mirrored on the accumulated transform t.
void congruence_add(RatVecVec& a, RatVecVec& t, std::size_t i, std::size_t j, const Rat& f) {
  std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) a[r][i] += f * a[r][j];
  for (std::size_t c = 0; c < n; ++c) a[i][c] += f * a[j][c];
  for (std::size_t r = 0; r < n; ++r) t[r][i] += f * t[r][j];
}

void congruence_swap(RatVecVec& a, RatVecVec& t, std::size_t i, std::size_t j) {
  std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  for (std::size_t c = 0; c < n; ++c) std::swap(a[i][c], a[j][c]);
  for (std::size_t r = 0; r < n; ++r) std::swap(t[r][i], t[r][j]);
}

}  // namespace

Diagonalization signature_and_diagonalize(const IntSymMatrix& m) {
  m.check_symmetric();
  std::size_t n = m.dim();
  RatVecVec a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
  RatVecVec t = rat_identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      bool placed = false;
      for (std::size_t j = k + 1; j < n && !placed; ++j) {
        if (a[j][j] != 0) {
          congruence_swap(a, t, k, j);
          placed = true;
        }
      }
      if (!placed) {
        // Every remaining diagonal entry is zero; pull a pivot out of an
        // off-diagonal entry with x_i <- x_i + x_j (gives 2*a_ij on the
        // diagonal). If the trailing block is entirely zero we are done.
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n && pi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != 0) {
              pi = i;
              pj = j;
              break;
            }
        if (pi == n) break;
        congruence_add(a, t, pi, pj, Rat(1));
        if (pi != k) congruence_swap(a, t, k, pi);
      }
    }
    Rat pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[k][i] == 0) continue;
      congruence_add(a, t, i, k, -a[k][i] / pivot);
    }
  }

  Diagonalization d;
  d.transform = t;
  d.diagonal.resize(n);
  Rat det = 1;
  for (std::size_t i = 0; i < n; ++i) {
    d.diagonal[i] = a[i][i];
    det *= a[i][i];
    if (a[i][i] > 0)
      ++d.signature.n_plus;
    else if (a[i][i] < 0)
      ++d.signature.n_minus;
    else
      ++d.signature.n_zero;
  }
  d.rank = d.signature.n_plus + d.signature.n_minus;
  // det(T) = +-1 by construction, so det(M) = det(T^t M T) exactly.
  d.determinant = num(det) / den(det);
  return d;
}

namespace {

void snf_row_swap(std::vector<IntVec>& s, std::vector<IntVec>& u, std::size_t i, std::size_t j) {
  std::swap(s[i], s[j]);
  std::swap(u[i], u[j]);
}

void snf_col_swap(std::vector<IntVec>& s, std::vector<IntVec>& v, std::size_t i, std::size_t j) {
  for (auto& row : s) std::swap(row[i], row[j]);
  for (auto& row : v) std::swap(row[i], row[j]);
}

void snf_row_add(std::vector<IntVec>& s, std::vector<IntVec>& u, std::size_t i, std::size_t j,
                 const Int& f) {
  for (std::size_t c = 0; c < s[i].size(); ++c) s[i][c] += f * s[j][c];
  for (std::size_t c = 0; c < u[i].size(); ++c) u[i][c] += f * u[j][c];
}

void snf_col_add(std::vector<IntVec>& s, std::vector<IntVec>& v, std::size_t i, std::size_t j,
                 const Int& f) {
  for (auto& row : s) row[i] += f * row[j];
  for (auto& row : v) row[i] += f * row[j];
}

void snf_row_negate(std::vector<IntVec>& s, std::vector<IntVec>& u, std::size_t i) {
  for (auto& x : s[i]) x = -x;
  for (auto& x : u[i]) x = -x;
}

}  // namespace

SmithNormalForm smith_normal_form(const std::vector<IntVec>& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  SmithNormalForm f;
  f.s = m;
  f.u.assign(rows, IntVec(rows, Int(0)));
  for (std::size_t i = 0; i < rows; ++i) f.u[i][i] = 1;
  f.v.assign(cols, IntVec(cols, Int(0)));
  for (std::size_t i = 0; i < cols; ++i) f.v[i][i] = 1;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate a pivot of minimal absolute value in the trailing block.
    std::size_t pi = rows, pj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        Int a = boost::multiprecision::abs(f.s[i][j]);
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    if (pi != t) snf_row_swap(f.s, f.u, t, pi);
    if (pj != t) snf_col_swap(f.s, f.v, t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (f.s[i][t] != 0) {
        Int q = f.s[i][t] / f.s[t][t];
        snf_row_add(f.s, f.u, i, t, -q);
        if (f.s[i][t] != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (f.s[t][j] != 0) {
        Int q = f.s[t][j] / f.s[t][t];
        snf_col_add(f.s, f.v, j, t, -q);
        if (f.s[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // residues remain; pick a smaller pivot next pass

    // Divisibility: fold any non-multiple of the pivot into its row and redo.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (f.s[i][j] % f.s[t][t] != 0) {
          snf_row_add(f.s, f.u, t, i, Int(1));
          divisible = false;
          break;
        }
    if (divisible) ++t;
  }

  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (f.s[i][i] < 0) snf_row_negate(f.s, f.u, i);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (f.s[i][i] != 0) f.invariant_factors.push_back(f.s[i][i]);
  return f;
}

SmithNormalForm smith_normal_form(const IntSymMatrix& m) {
  std::vector<IntVec> rows(m.dim(), IntVec(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
  return smith_normal_form(rows);
}

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(RatVecVec& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = Rat(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rat_rank(RatVecVec a) { return rref(a).size(); }

std::vector<IntVec> kernel_basis(const IntSymMatrix& m) {
  std::size_t n = m.dim();
  RatVecVec a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
  std::vector<std::size_t> pivots = rref(a);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<IntVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(n, Rat(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
    Int lcm = 1;
    for (const auto& q : x) lcm = lcm / gcd(lcm, den(q)) * den(q);
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = num(x[i] * Rat(lcm));
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

LinearSolveResult solve_linear(const RatVecVec& a, const RatVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  RatVecVec aug(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);

  if (!pivots.empty() && pivots.back() == cols) return {SolveKind::Inconsistent, {}};
  if (pivots.size() < cols) return {SolveKind::Underdetermined, {}};

  RatVec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return {SolveKind::Unique, std::move(x)};
}

std::optional<RatVecVec> rat_inverse(const RatVecVec& a) {
  std::size_t n = a.size();
  RatVecVec aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  RatVecVec inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace moricert
