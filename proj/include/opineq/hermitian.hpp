#ifndef OPINEQ_HERMITIAN_HPP
#define OPINEQ_HERMITIAN_HPP

#include <utility>

#include "opineq/matrix.hpp"

namespace opineq {

// A square matrix certified Hermitian on construction: the input must satisfy
// ||X - X*||_F <= kHermTol * ||X||_F, and is then symmetrized to (X + X*)/2
// so downstream code can rely on exact conjugate symmetry.
class HermitianMatrix {
public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(const ComplexMatrix& x) {
    if (x.rows() != x.cols()) throw dimension_error("Hermitian matrix must be square");
    if (!x.all_finite()) throw dimension_error("non-finite entries");
    ComplexMatrix adj = x.adjoint();
    const double dev = distance_frobenius(x, adj);
    const double scale = x.frobenius_norm();
    if (dev > kHermTol * (scale > 0.0 ? scale : 1.0))
      throw dimension_error("matrix is not Hermitian within tolerance");
    m_ = ComplexMatrix(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i) {
      m_(i, i) = cplx(x(i, i).real(), 0.0);
      for (int j = i + 1; j < x.cols(); ++j) {
        cplx v = 0.5 * (x(i, j) + std::conj(x(j, i)));
        m_(i, j) = v;
        m_(j, i) = std::conj(v);
      }
    }
  }

  static HermitianMatrix identity(int n) { return HermitianMatrix(ComplexMatrix::identity(n)); }
  static HermitianMatrix zero(int n) { return HermitianMatrix(ComplexMatrix::zero(n, n)); }

  // Real diagonal matrix.
  static HermitianMatrix diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return HermitianMatrix(m);
  }

  int n() const { return m_.rows(); }
  const ComplexMatrix& cm() const { return m_; }
  const cplx& operator()(int i, int j) const { return m_(i, j); }

  double frobenius_norm() const { return m_.frobenius_norm(); }

  friend HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
    return HermitianMatrix(x.m_ + y.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
    return HermitianMatrix(x.m_ - y.m_);
  }
  friend HermitianMatrix operator*(double s, const HermitianMatrix& x) {
    return HermitianMatrix(s * x.m_);
  }
  // Products of Hermitian matrices are generally not Hermitian; go through
  // ComplexMatrix deliberately.
  friend ComplexMatrix operator*(const HermitianMatrix& x, const HermitianMatrix& y) {
    return x.m_ * y.m_;
  }
  friend ComplexMatrix operator*(const HermitianMatrix& x, const ComplexMatrix& y) {
    return x.m_ * y;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& x, const HermitianMatrix& y) {
    return x * y.m_;
  }

  // Shift by a real multiple of the identity.
  HermitianMatrix shifted(double s) const {
    ComplexMatrix r = m_;
    for (int i = 0; i < n(); ++i) r(i, i) += s;
    return HermitianMatrix(r);
  }

private:
  ComplexMatrix m_;
};

// M* H M; Hermitian by construction up to rounding.
inline HermitianMatrix conjugate_form(const HermitianMatrix& h, const ComplexMatrix& m) {
  return HermitianMatrix(m.adjoint() * (h.cm() * m));
}

} // namespace opineq

#endif
