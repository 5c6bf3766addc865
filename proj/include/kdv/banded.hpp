#pragma once

// Pentadiagonal (bandwidth 2) systems with optional cyclic corner entries.
// Entry (i, j) with j = i + offset is stored at bands(i, offset + 2); column
// indices wrap modulo n, so periodic couplings need no special storage.

#include <algorithm>
#include <cmath>
#include <vector>

#include "kdv/errors.hpp"
#include "kdv/types.hpp"

namespace kdv {

template <typename Scalar>
class CyclicBandMatrix {
 public:
  using Vector = typename Types<Scalar>::Vector;
  using Matrix = typename Types<Scalar>::Matrix;
  static constexpr int half_width = 2;

  explicit CyclicBandMatrix(int n) : bands_(Eigen::Matrix<Scalar, Eigen::Dynamic, 5>::Zero(n, 5)) {
    if (n < 5) throw DomainError("banded system needs n >= 5", n);
  }

  int size() const { return static_cast<int>(bands_.rows()); }
  Scalar& operator()(int row, int offset) { return bands_(row, offset + half_width); }
  Scalar operator()(int row, int offset) const { return bands_(row, offset + half_width); }

  int column(int row, int offset) const {
    const int n = size();
    return ((row + offset) % n + n) % n;
  }

  Matrix dense() const {
    const int n = size();
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int o = -half_width; o <= half_width; ++o) a(i, column(i, o)) += (*this)(i, o);
    return a;
  }

  Vector operator*(const Vector& x) const {
    const int n = size();
    Vector y = Vector::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int o = -half_width; o <= half_width; ++o) y(i) += (*this)(i, o) * x(column(i, o));
    return y;
  }

  Scalar norm_inf() const { return bands_.cwiseAbs().rowwise().sum().maxCoeff(); }

 private:
  Eigen::Matrix<Scalar, Eigen::Dynamic, 5> bands_;
};

namespace detail {

// Banded LU with partial pivoting in LAPACK band layout: A(i, j) lives at
// ab(kl + ku + i - j, j), with kl extra rows for fill-in.
template <typename Scalar>
class BandLU {
 public:
  using Vector = typename Types<Scalar>::Vector;
  using Matrix = typename Types<Scalar>::Matrix;

  BandLU(int n, int kl, int ku) : n_(n), kl_(kl), ku_(ku), ab_(Matrix::Zero(2 * kl + ku + 1, n)), pivots_(n), inverse_diagonal_(n) {}

  Scalar& at(int i, int j) { return ab_(kl_ + ku_ + i - j, j); }

  void factor(Scalar tolerance) {
    const int kv = kl_ + ku_;
    const int ld = static_cast<int>(ab_.rows());
    Scalar* ab = ab_.data();
    auto el = [&](int r, int c) -> Scalar& { return ab[r + c * ld]; };
    int ju = 0;
    for (int j = 0; j < n_; ++j) {
      const int km = std::min(kl_, n_ - 1 - j);
      int jp = 0;
      Scalar best = std::abs(el(kv, j));
      for (int r = 1; r <= km; ++r) {
        if (std::abs(el(kv + r, j)) > best) {
          best = std::abs(el(kv + r, j));
          jp = r;
        }
      }
      pivots_[j] = j + jp;
      if (!(best > tolerance)) throw SolverError("banded system is singular to tolerance", j);
      ju = std::max(ju, std::min(j + ku_ + jp, n_ - 1));
      if (jp != 0) {
        for (int c = j; c <= ju; ++c) std::swap(el(kv + j - c, c), el(kv + j + jp - c, c));
      }
      const Scalar inv = Scalar(1) / el(kv, j);
      inverse_diagonal_[j] = inv;
      for (int r = 1; r <= km; ++r) el(kv + r, j) *= inv;
      for (int c = j + 1; c <= ju; ++c) {
        const Scalar f = el(kv + j - c, c);
        if (f == Scalar(0)) continue;
        for (int r = 1; r <= km; ++r) el(kv + j + r - c, c) -= el(kv + r, j) * f;
      }
    }
  }

  // b is row-major with `cols` columns.
  void solve_in_place(Scalar* b, int cols) const {
    const int kv = kl_ + ku_;
    const int ld = static_cast<int>(ab_.rows());
    const Scalar* ab = ab_.data();
    for (int j = 0; j < n_; ++j) {
      Scalar* bj = b + j * cols;
      if (pivots_[j] != j) std::swap_ranges(bj, bj + cols, b + pivots_[j] * cols);
      const int km = std::min(kl_, n_ - 1 - j);
      for (int r = 1; r <= km; ++r) {
        const Scalar l = ab[kv + r + j * ld];
        Scalar* br = bj + r * cols;
        for (int k = 0; k < cols; ++k) br[k] -= l * bj[k];
      }
    }
    for (int j = n_ - 1; j >= 0; --j) {
      Scalar* bj = b + j * cols;
      const Scalar d = inverse_diagonal_[j];
      for (int k = 0; k < cols; ++k) bj[k] *= d;
      const int reach = std::min(kv, j);
      for (int r = 1; r <= reach; ++r) {
        const Scalar u = ab[kv - r + j * ld];
        Scalar* br = bj - r * cols;
        for (int k = 0; k < cols; ++k) br[k] -= u * bj[k];
      }
    }
  }

 private:
  int n_, kl_, ku_;
  Matrix ab_;
  std::vector<int> pivots_;
  std::vector<Scalar> inverse_diagonal_;
};

}  // namespace detail

/// Solves A x = b for a (possibly cyclic) pentadiagonal A. The last two
/// unknowns are split off: the leading block is a plain band solved by LU
/// with partial pivoting, the corner couplings go through a 2x2 Schur
/// complement.
template <typename Scalar>
typename Types<Scalar>::Vector solve_banded_cyclic(const CyclicBandMatrix<Scalar>& a,
                                                   const typename Types<Scalar>::Vector& rhs) {
  using Vector = typename Types<Scalar>::Vector;
  const int n = a.size();
  if (rhs.size() != n) throw DomainError("right-hand side length mismatch", static_cast<double>(rhs.size()));
  const int m = n - 2;
  const Scalar norm = a.norm_inf();
  const Scalar tolerance = Scalar(1e-14) * norm;
  if (!(norm > 0)) throw SolverError("zero matrix", 0);

  detail::BandLU<Scalar> lu(m, 2, 2);
  // [A12 | b1], row-major so the elimination sweeps touch contiguous rows.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 3, Eigen::RowMajor> rhs_block =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 3, Eigen::RowMajor>::Zero(m, 3);
  Eigen::Matrix<Scalar, 2, Eigen::Dynamic> a21 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>::Zero(2, m);
  Eigen::Matrix<Scalar, 2, 2> a22 = Eigen::Matrix<Scalar, 2, 2>::Zero();

  for (int i = 0; i < n; ++i) {
    for (int o = -2; o <= 2; ++o) {
      const Scalar v = a(i, o);
      if (v == Scalar(0)) continue;
      int j = i + o;
      if (j < 0) j += n;
      if (j >= n) j -= n;
      if (i < m && j < m) {
        lu.at(i, j) += v;
      } else if (i < m) {
        rhs_block(i, j - m) += v;
      } else if (j < m) {
        a21(i - m, j) += v;
      } else {
        a22(i - m, j - m) += v;
      }
    }
  }
  rhs_block.col(2) = rhs.head(m);

  lu.factor(tolerance);
  lu.solve_in_place(rhs_block.data(), 3);

  const Eigen::Matrix<Scalar, 2, 2> schur = a22 - a21.lazyProduct(rhs_block.leftCols(2));
  const Eigen::Matrix<Scalar, 2, 1> rhs2 = rhs.tail(2) - a21.lazyProduct(rhs_block.col(2));
  const Scalar det = schur(0, 0) * schur(1, 1) - schur(0, 1) * schur(1, 0);
  const Scalar scale = std::max(schur.cwiseAbs().maxCoeff(), norm);
  if (!(std::abs(det) > tolerance * scale)) throw SolverError("banded system is singular to tolerance", m);
  Eigen::Matrix<Scalar, 2, 1> tail;
  tail(0) = (schur(1, 1) * rhs2(0) - schur(0, 1) * rhs2(1)) / det;
  tail(1) = (schur(0, 0) * rhs2(1) - schur(1, 0) * rhs2(0)) / det;

  Vector x(n);
  x.head(m) = rhs_block.col(2) - rhs_block.leftCols(2) * tail;
  x.tail(2) = tail;
  return x;
}

}  // namespace kdv
