#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "moricert/errors.hpp"
#include "moricert/numeric.hpp"

namespace moricert {

using RatVecVec = std::vector<RatVec>;

// Symmetric integer matrix; symmetry is validated at construction and the
// storage is plain row-major (sizes here are single digits to low tens).
class IntSymMatrix {
 public:
  IntSymMatrix() = default;

  explicit IntSymMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, Int(0)) {}

  IntSymMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    dim_ = rows.size();
    e_.assign(dim_ * dim_, Int(0));
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw InputError("matrix rows must have equal length");
      std::size_t j = 0;
      for (long long v : row) e_[i * dim_ + j++] = v;
      ++i;
    }
    check_symmetric();
  }

  static IntSymMatrix from_rows(const std::vector<IntVec>& rows) {
    IntSymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InputError("matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.e_[i * m.dim_ + j] = rows[i][j];
    }
    m.check_symmetric();
    return m;
  }

  static IntSymMatrix identity(std::size_t dim) {
    IntSymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t dim() const { return dim_; }

  const Int& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }

  IntVec mul(const IntVec& v) const {
    IntVec r(dim_, Int(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  RatVec mul(const RatVec& v) const {
    RatVec r(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
  }

  // x^T M y, the lattice pairing in this basis.
  Int pair(const IntVec& x, const IntVec& y) const {
    Int s = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) s += x[i] * at(i, j) * y[j];
    return s;
  }

  Rat pair(const RatVec& x, const RatVec& y) const {
    Rat s = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) s += x[i] * Rat(at(i, j)) * y[j];
    return s;
  }

  IntSymMatrix principal_submatrix(const std::vector<std::size_t>& idx) const {
    IntSymMatrix m(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = at(idx[i], idx[j]);
    return m;
  }

  // Simultaneous row/column permutation: result[i][j] = at(p[i], p[j]).
  IntSymMatrix permuted(const std::vector<std::size_t>& p) const {
    IntSymMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = at(p[i], p[j]);
    return m;
  }

  bool operator==(const IntSymMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

  void check_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (at(i, j) != at(j, i))
          throw InputError("matrix not symmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
  }

 private:
  std::size_t dim_ = 0;
  IntVec e_;
};

inline RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

}  // namespace moricert
