#ifndef OPINEQ_EIG_HPP
#define OPINEQ_EIG_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "opineq/hermitian.hpp"

namespace opineq {

// Eigendecomposition A = U diag(lambda) U*, eigenvalues ascending, U unitary.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors; // columns

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

namespace detail {

inline double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). J differs from the identity in
// J(p,p)=c, J(q,q)=c, J(p,q)=s*e^{i phi}, J(q,p)=-s*e^{-i phi}, and the update
// is A <- J* A J, V <- V J.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx sp = s * phase;
  const int n = a.rows();

  // columns p, q of A (right multiply by J)
  for (int i = 0; i < n; ++i) {
    const cplx aip = a(i, p), aiq = a(i, q);
    a(i, p) = c * aip - std::conj(sp) * aiq;
    a(i, q) = sp * aip + c * aiq;
  }
  // rows p, q of A (left multiply by J*)
  for (int j = 0; j < n; ++j) {
    const cplx apj = a(p, j), aqj = a(q, j);
    a(p, j) = c * apj - sp * aqj;
    a(q, j) = std::conj(sp) * apj + c * aqj;
  }
  // closed forms for the pivot block keep the matrix exactly Hermitian
  a(p, p) = cplx(app - t * r, 0.0);
  a(q, q) = cplx(aqq + t * r, 0.0);
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (int i = 0; i < n; ++i) {
    const cplx vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip - std::conj(sp) * viq;
    v(i, q) = sp * vip + c * viq;
  }
}

// Make the largest-modulus component of each eigenvector real positive, for
// deterministic output.
inline void fix_column_phases(ComplexMatrix& v) {
  for (int j = 0; j < v.cols(); ++j) {
    int best = 0;
    double best_mod = -1.0;
    for (int i = 0; i < v.rows(); ++i) {
      const double m = std::abs(v(i, j));
      if (m > best_mod + 1e-15) {
        best_mod = m;
        best = i;
      }
    }
    if (best_mod <= 0.0) continue;
    const cplx ph = std::conj(v(best, j)) / best_mod;
    for (int i = 0; i < v.rows(); ++i) v(i, j) *= ph;
  }
}

} // namespace detail

// Cyclic complex Jacobi. Converged when the off-diagonal Frobenius norm falls
// below kJacobiTol * ||A||_F; hard cap kJacobiMaxSweeps sweeps, then error.
inline Spectrum eig_hermitian(const HermitianMatrix& A) {
  const int n = A.n();
  ComplexMatrix a = A.cm();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double norm = a.frobenius_norm();
  const double target = kJacobiTol * (norm > 0.0 ? norm : 1.0);
  const double skip = 1e-18 * (norm > 0.0 ? norm : 1.0);

  bool converged = (n == 1) || detail::offdiag_norm(a) <= target;
  for (int sweep = 0; !converged && sweep < kJacobiMaxSweeps; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > skip) detail::jacobi_rotate(a, v, p, q);
    converged = detail::offdiag_norm(a) <= target;
  }
  if (!converged) throw convergence_error("Jacobi eigensolver did not converge in 64 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  Spectrum sp;
  sp.eigenvalues.resize(n);
  sp.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    sp.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) sp.eigenvectors(i, j) = v(i, order[j]);
  }
  detail::fix_column_phases(sp.eigenvectors);
  return sp;
}

inline double min_eig(const HermitianMatrix& A) { return eig_hermitian(A).min(); }
inline double max_eig(const HermitianMatrix& A) { return eig_hermitian(A).max(); }

} // namespace opineq

#endif
