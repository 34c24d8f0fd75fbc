#pragma once

// Integer lattice normal forms on Eigen matrices. Scalar is any exact
// integer type with /, % truncating toward zero (int64_t, Integer).

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "epsmult/numeric.hpp"

namespace epsmult {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Position of the entry of least nonzero absolute value in a(t:, t:).
template <typename Scalar>
bool find_pivot(const DenseMatrix<Scalar>& a, Eigen::Index t, Eigen::Index& pr,
                Eigen::Index& pc) {
  bool found = false;
  Scalar best = 0;
  for (Eigen::Index i = t; i < a.rows(); ++i)
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      const Scalar v = abs_value(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace detail

/// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form of `a`,
/// all positive. Their count is the rank of `a`.
template <typename Scalar>
std::vector<Scalar> invariant_factors(DenseMatrix<Scalar> a) {
  std::vector<Scalar> factors;
  const Eigen::Index limit = std::min(a.rows(), a.cols());
  for (Eigen::Index t = 0; t < limit; ++t) {
    Eigen::Index pr = 0, pc = 0;
    if (!detail::find_pivot(a, t, pr, pc)) break;
    a.row(t).swap(a.row(pr));
    a.col(t).swap(a.col(pc));

    for (;;) {
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // The pivot must divide the rest of the block; otherwise fold the
        // offending row in and keep reducing.
        Eigen::Index bad = -1;
        for (Eigen::Index i = t + 1; i < a.rows() && bad < 0; ++i)
          for (Eigen::Index j = t + 1; j < a.cols(); ++j)
            if (a(i, j) % a(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        a.row(t) += a.row(bad);
      }
      // Remainders are smaller than the pivot: move the least one up.
      Eigen::Index r = 0, c = 0;
      detail::find_pivot(a, t, r, c);
      a.row(t).swap(a.row(r));
      a.col(t).swap(a.col(c));
    }
    factors.push_back(detail::abs_value(Scalar(a(t, t))));
  }
  return factors;
}

/// Whether the rows of `points` generate Z^cols as a group.
template <typename Scalar>
bool generates_full_lattice(const DenseMatrix<Scalar>& points) {
  if (points.rows() < points.cols()) return false;
  const auto factors = invariant_factors<Scalar>(points);
  if (static_cast<Eigen::Index>(factors.size()) != points.cols()) return false;
  for (const auto& f : factors)
    if (f != 1) return false;
  return true;
}

/// [Z^cols : G] for the group G generated by the rows, or 0 when G has
/// lower rank.
template <typename Scalar>
Scalar lattice_index(const DenseMatrix<Scalar>& points) {
  const auto factors = invariant_factors<Scalar>(points);
  if (static_cast<Eigen::Index>(factors.size()) != points.cols()) return Scalar(0);
  Scalar index = 1;
  for (const auto& f : factors) index *= f;
  return index;
}

}  // namespace epsmult
