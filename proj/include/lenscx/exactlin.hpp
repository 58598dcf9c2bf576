#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace lenscx {

/// Arbitrary-precision integer; expression templates are off so the type
/// composes cleanly with Eigen expressions.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;
using IntVector = DenseVector<BigInt>;

/// Boundary and relator matrices: small entries, mostly zero.
using SparseIntMatrix = Eigen::SparseMatrix<std::int64_t>;

/// U * A * V == D with U, V unimodular and D diagonal (full rectangular
/// shape, trailing zeros) with d_1 | d_2 | ... and d_i >= 0.
template <typename Scalar>
struct SmithForm {
  DenseMatrix<Scalar> U;
  DenseMatrix<Scalar> D;
  DenseMatrix<Scalar> V;

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) {
      if (D(i, i) != 0) ++r;
    }
    return r;
  }

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Position of the nonzero entry of smallest absolute value in the block
// [from, rows) x [from, cols); ties go to the first in row-major order.
template <typename Scalar>
bool find_pivot(const DenseMatrix<Scalar>& D, Eigen::Index from, Eigen::Index& pr, Eigen::Index& pc) {
  bool found = false;
  Scalar best;
  for (Eigen::Index i = from; i < D.rows(); ++i) {
    for (Eigen::Index j = from; j < D.cols(); ++j) {
      if (D(i, j) == 0) continue;
      Scalar a = abs_value(D(i, j));
      if (!found || a < best) {
        best = a;
        pr = i;
        pc = j;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

}  // namespace detail

/// Smith normal form with explicit transforms.
///
/// Pivot: smallest nonzero absolute value in the trailing block, ties by
/// row-major position. Intended for matrices of up to a few thousand entries.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using Eigen::Index;
  const Index m = A.rows();
  const Index n = A.cols();
  SmithForm<Scalar> out;
  out.D = A;
  out.U = DenseMatrix<Scalar>::Identity(m, m);
  out.V = DenseMatrix<Scalar>::Identity(n, n);
  auto& D = out.D;
  auto& U = out.U;
  auto& V = out.V;

  for (Index t = 0; t < std::min(m, n); ++t) {
    Index pr = 0, pc = 0;
    if (!detail::find_pivot(D, t, pr, pc)) break;
    for (;;) {
      if (pr != t) {
        D.row(pr).swap(D.row(t));
        U.row(pr).swap(U.row(t));
      }
      if (pc != t) {
        D.col(pc).swap(D.col(t));
        V.col(pc).swap(V.col(t));
      }
      const Scalar p = D(t, t);
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Scalar q = detail::floor_div(D(i, t), p);
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        if (D(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Scalar q = detail::floor_div(D(t, j), p);
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; it becomes the pivot.
        Scalar best = detail::abs_value(p);
        pr = t;
        pc = t;
        for (Index i = t + 1; i < m; ++i) {
          if (D(i, t) != 0 && detail::abs_value(D(i, t)) < best) {
            best = detail::abs_value(D(i, t));
            pr = i;
            pc = t;
          }
        }
        for (Index j = t + 1; j < n; ++j) {
          if (D(t, j) != 0 && detail::abs_value(D(t, j)) < best) {
            best = detail::abs_value(D(t, j));
            pr = t;
            pc = j;
          }
        }
        continue;
      }
      // Divisibility: fold a row carrying a non-multiple into the pivot row.
      Index bad_row = -1;
      for (Index i = t + 1; i < m && bad_row < 0; ++i) {
        for (Index j = t + 1; j < n; ++j) {
          if (D(i, j) % p != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      D.row(t) += D.row(bad_row);
      U.row(t) += U.row(bad_row);
      pr = t;
      pc = t;
    }
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return out;
}

/// Basis of the integer kernel {v : A v = 0}: the columns of V paired with
/// zero diagonal entries of the Smith form.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& A) {
  const auto snf = smith_normal_form(A);
  std::vector<DenseVector<typename Derived::Scalar>> basis;
  const Eigen::Index r = snf.rank();
  for (Eigen::Index j = r; j < A.cols(); ++j) basis.push_back(snf.V.col(j));
  return basis;
}

/// Smith normal form of a large sparse integer matrix.
///
/// Unit pivots are eliminated in sparse storage, choosing per column the row
/// with the fewest nonzeros; whatever survives is handed to the dense
/// algorithm. Only the diagonal is kept, plus (on request) a log of the row
/// operations from which individual rows of U can be recovered.
class SparseSmith {
 public:
  explicit SparseSmith(const SparseIntMatrix& A, bool track_left = false);

  Eigen::Index rows() const noexcept { return rows_; }
  Eigen::Index cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  /// Nonzero diagonal entries of the Smith form in divisibility order.
  const std::vector<BigInt>& invariant_factors() const noexcept { return factors_; }
  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const;
  /// Row of U matching invariant_factors()[position]; the product of this
  /// row with A is divisible by that factor, with unit content after
  /// division. Requires track_left.
  std::vector<BigInt> left_row(std::size_t position) const;

 private:
  struct RowOp {
    std::int32_t target;
    std::int32_t source;
    BigInt coeff;  // row[target] += coeff * row[source]
  };

  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  bool track_left_ = false;
  std::vector<BigInt> factors_;
  // For each factor: the combination of (post-operation) rows it comes from.
  std::vector<std::vector<std::pair<std::int32_t, BigInt>>> sources_;
  std::vector<RowOp> log_;
};

/// Dense copy of a sparse integer matrix.
IntMatrix to_dense(const SparseIntMatrix& A);

}  // namespace lenscx
