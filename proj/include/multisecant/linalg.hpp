// Dense exact linear algebra on Eigen matrices over Fp and Rational.
//
// Eigen's decompositions pivot on magnitude, which exact fields do not
// have, so elimination is done here by plain row reduction.
#pragma once

#include <Eigen/Core>

#include "multisecant/field.hpp"

namespace Eigen {

template <>
struct NumTraits<msec::Fp> : GenericNumTraits<msec::Fp> {
  using Real = msec::Fp;
  using NonInteger = msec::Fp;
  using Nested = msec::Fp;
  using Literal = msec::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<msec::Rational> : GenericNumTraits<msec::Rational> {
  using Real = msec::Rational;
  using NonInteger = msec::Rational;
  using Nested = msec::Rational;
  using Literal = msec::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 50
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace msec {

template <class F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

using MatrixP = Matrix<Fp>;
using VectorP = Vector<Fp>;

template <class F>
Matrix<F> zero_matrix(Eigen::Index rows, Eigen::Index cols, const F& zero) {
  return Matrix<F>::Constant(rows, cols, zero);
}

// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<Eigen::Index> row_reduce(Matrix<F>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    F inv = m(row, col).inverse();
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      F f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
Eigen::Index rank(Matrix<F> m) {
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

// Columns form a basis of the right null space.
template <class F>
Matrix<F> kernel(Matrix<F> m, const F& zero) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<F> basis = zero_matrix(m.cols(), m.cols() - static_cast<Eigen::Index>(pivots.size()), zero);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = zero + F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return basis;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  F det = F(1);
  if (m.rows() > 0) det = m(0, 0) * F(0) + F(1);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return det * F(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det = det * m(col, col);
    F inv = m(col, col).inverse();
    for (Eigen::Index r = col + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      F f = m(r, col) * inv;
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(col, c);
    }
  }
  return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m, const F& zero) {
  const Eigen::Index n = m.rows();
  Matrix<F> aug = zero_matrix(n, 2 * n, zero);
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = zero + F(1);
  auto pivots = row_reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n) throw DomainError("matrix is singular");
  return aug.rightCols(n);
}

// Extends the given independent rows to a basis of F^n with standard
// vectors; the original rows come first.
template <class F>
Matrix<F> complete_basis(const Matrix<F>& rows, Eigen::Index n, const F& zero) {
  Matrix<F> out = zero_matrix(n, n, zero);
  Eigen::Index k = 0;
  for (; k < rows.rows(); ++k) out.row(k) = rows.row(k);
  for (Eigen::Index e = 0; e < n && k < n; ++e) {
    Matrix<F> trial = out.topRows(k + 1);
    trial.row(k).setConstant(zero);
    trial(k, e) = zero + F(1);
    if (rank(trial) == k + 1) {
      out.row(k) = trial.row(k);
      ++k;
    }
  }
  if (k < n) throw DomainError("rows are not independent");
  return out;
}

}  // namespace msec
