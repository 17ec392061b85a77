#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "trigsb/rational.hpp"

namespace trigsb {

using DenseVector = std::vector<Rational>;

inline bool is_zero_vector(const DenseVector& v) {
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

/// Fully reduced row-echelon basis of a subspace of Q^d. The pivot of a row is
/// its highest nonzero coordinate; every row has coefficient 1 at its pivot and
/// 0 at every other pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, DenseVector>& rows() const { return rows_; }
  bool is_pivot(std::size_t i) const { return rows_.contains(i); }

  DenseVector reduce(DenseVector v) const {
    for (const auto& [p, row] : rows_) {
      if (v[p] == 0) continue;
      Rational c = v[p];
      for (std::size_t i = 0; i <= p; ++i) {
        if (row[i] != 0) v[i] -= c * row[i];
      }
    }
    return v;
  }

  /// Returns true if `v` was outside the span and has been added.
  bool insert(const DenseVector& v) {
    DenseVector r = reduce(v);
    std::size_t p = dim_;
    for (std::size_t i = dim_; i-- > 0;) {
      if (r[i] != 0) {
        p = i;
        break;
      }
    }
    if (p == dim_) return false;
    Rational inv = 1 / r[p];
    for (auto& c : r) c *= inv;
    for (auto& [q, row] : rows_) {
      if (row[p] == 0) continue;
      Rational c = row[p];
      for (std::size_t i = 0; i <= p; ++i) {
        if (r[i] != 0) row[i] -= c * r[i];
      }
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

 private:
  std::size_t dim_;
  std::map<std::size_t, DenseVector> rows_;
};

}  // namespace trigsb
