#ifndef OPINEQ_MATRIX_HPP
#define OPINEQ_MATRIX_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "opineq/common.hpp"

namespace opineq {

using cplx = std::complex<double>;

// Dense complex matrix, row-major, value semantics. Sized for desk-scale
// work (n <= 16); no attempt at blocking or expression templates.
class ComplexMatrix {
public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw dimension_error("matrix dimensions must be positive");
  }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool all_finite() const {
    for (const cplx& z : a_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  friend ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_shape(x, y);
    ComplexMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_shape(x, y);
    ComplexMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.cols_ != y.rows_) throw dimension_error("matrix product shape mismatch");
    ComplexMatrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const cplx xik = x(i, k);
        if (xik == cplx(0.0, 0.0)) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& x) {
    ComplexMatrix r = x;
    for (cplx& z : r.a_) z *= s;
    return r;
  }

  friend ComplexMatrix operator*(double s, const ComplexMatrix& x) {
    return cplx(s, 0.0) * x;
  }

private:
  static void check_same_shape(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw dimension_error("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<cplx> a_;
};

inline double distance_frobenius(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x - y).frobenius_norm();
}

} // namespace opineq

#endif
