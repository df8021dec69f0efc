#pragma once

// Exact dense linear algebra over any field scalar with exact equality
// (GaussianRational, mpq_class). Nothing here compares magnitudes, so no
// rounding can enter a rank decision.

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "okalab/error.hpp"

namespace okalab {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct RowEchelon {
  DenseMatrix<Scalar> reduced;          ///< reduced row echelon form
  std::vector<Eigen::Index> pivot_cols;  ///< pivot column of each nonzero row

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
///
/// Columns are scanned left to right; the pivot is the first nonzero entry at
/// or below the current row. The RREF of a matrix is unique, so the result is
/// independent of the pivot rule.
template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{m.eval(), {}};
  auto& a = out.reduced;
  const Scalar zero(0);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == zero) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));

    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == zero) continue;
      const Scalar factor = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Basis of the right null space, one vector per free column of the RREF,
/// each scaled so its first nonzero entry is 1.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<DenseVector<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    DenseVector<Scalar> v = DenseVector<Scalar>::Constant(cols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      v(ech.pivot_cols[r]) = -ech.reduced(static_cast<Eigen::Index>(r), free);
    Eigen::Index lead = 0;
    while (v(lead) == Scalar(0)) ++lead;
    const Scalar scale = v(lead);
    if (scale != Scalar(1)) v /= scale;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m*x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <typename DerivedM, typename DerivedB>
std::optional<DenseVector<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length differs from row count");
  DenseMatrix<Scalar> augmented(m.rows(), m.cols() + 1);
  augmented.leftCols(m.cols()) = m;
  augmented.col(m.cols()) = b;
  const auto ech = row_echelon(augmented);
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) return std::nullopt;

  DenseVector<Scalar> x = DenseVector<Scalar>::Constant(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
    x(ech.pivot_cols[r]) = ech.reduced(static_cast<Eigen::Index>(r), m.cols());
  return x;
}

/// Exact inverse, or nullopt when singular.
template <typename Derived>
std::optional<DenseMatrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse: matrix is not square");
  const Eigen::Index n = m.rows();
  DenseMatrix<Scalar> augmented(n, 2 * n);
  augmented.leftCols(n) = m;
  augmented.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
  const auto ech = row_echelon(augmented);
  if (ech.rank() < n || ech.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return DenseMatrix<Scalar>(ech.reduced.rightCols(n));
}

}  // namespace okalab
