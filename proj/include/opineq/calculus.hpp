#ifndef OPINEQ_CALCULUS_HPP
#define OPINEQ_CALCULUS_HPP

#include <functional>

#include "opineq/eig.hpp"
#include "opineq/scalar_fn.hpp"

namespace opineq {

namespace detail {

inline HermitianMatrix rebuild(const Spectrum& sp, const std::vector<double>& values) {
  const int n = sp.eigenvectors.rows();
  ComplexMatrix scaled = sp.eigenvectors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= values[j];
  return HermitianMatrix(scaled * sp.eigenvectors.adjoint());
}

} // namespace detail

// f applied through the eigendecomposition: U diag(f(lambda)) U*.
inline HermitianMatrix apply_scalar_function(const Spectrum& sp,
                                             const std::function<double(double)>& f) {
  std::vector<double> vals(sp.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = f(sp.eigenvalues[i]);
  return detail::rebuild(sp, vals);
}

// Spectrum-of-A entry point with the domain gate: every eigenvalue must lie in
// dom(f) within margin 1e-9 * max(1, |lambda|); eigenvalues are clamped onto
// the closed domain before evaluation so sqrt at -1e-16 is sqrt at 0.
inline HermitianMatrix apply_scalar_function(const HermitianMatrix& A, const ScalarFn& f) {
  const Spectrum sp = eig_hermitian(A);
  const Interval dom = f.domain();
  std::vector<double> vals(sp.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double lam = sp.eigenvalues[i];
    const double margin = 1e-9 * std::max(1.0, std::abs(lam));
    if (!dom.contains(lam, margin))
      throw domain_error("eigenvalue " + std::to_string(lam) +
                         " outside the declared domain of the scalar function");
    lam = std::min(std::max(lam, dom.lo), dom.hi);
    vals[i] = f.eval_unchecked(lam);
  }
  return detail::rebuild(sp, vals);
}

// A^p. Small nonnegative integer exponents multiply out directly (valid for
// indefinite A); anything fractional or negative routes through the spectrum
// of the positive operand. Negative powers refuse lambda_min <= 1e-12.
inline HermitianMatrix hermitian_power(const HermitianMatrix& A, double p) {
  const bool integral = p == std::floor(p) && p >= 0.0 && p <= 8.0;
  if (integral) {
    int k = static_cast<int>(p);
    if (k == 0) return HermitianMatrix::identity(A.n());
    ComplexMatrix acc = A.cm();
    for (int i = 1; i < k; ++i) acc = acc * A.cm();
    return HermitianMatrix(acc);
  }
  const Spectrum sp = eig_hermitian(A);
  std::vector<double> vals(sp.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double lam = sp.eigenvalues[i];
    if (p < 0.0 && lam <= 1e-12)
      throw domain_error("negative power of a non-invertible operand");
    if (lam < 0.0) {
      if (lam < -1e-9 * std::max(1.0, std::abs(sp.eigenvalues.back())))
        throw domain_error("fractional power of an indefinite operand");
      lam = 0.0;
    }
    vals[i] = std::pow(lam, p);
  }
  return detail::rebuild(sp, vals);
}

inline HermitianMatrix hermitian_sqrt(const HermitianMatrix& A) {
  return hermitian_power(A, 0.5);
}

inline HermitianMatrix hermitian_inverse(const HermitianMatrix& A) {
  return hermitian_power(A, -1.0);
}

// |X| = (X*X)^{1/2}.
inline HermitianMatrix abs_op(const ComplexMatrix& X) {
  if (X.rows() != X.cols()) throw dimension_error("abs_op needs a square matrix");
  const HermitianMatrix gram(X.adjoint() * X);
  const Spectrum sp = eig_hermitian(gram);
  std::vector<double> vals(sp.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    vals[i] = std::sqrt(std::max(sp.eigenvalues[i], 0.0));
  return detail::rebuild(sp, vals);
}

inline HermitianMatrix abs_op(const HermitianMatrix& X) { return abs_op(X.cm()); }

// spectral norm; largest singular value for general X
inline double operator_norm(const ComplexMatrix& X) {
  const HermitianMatrix gram(X.adjoint() * X);
  return std::sqrt(std::max(max_eig(gram), 0.0));
}

inline double operator_norm(const HermitianMatrix& X) {
  const Spectrum sp = eig_hermitian(X);
  return std::max(std::abs(sp.min()), std::abs(sp.max()));
}

// Polar decomposition X = W |X| with W a partial isometry whose initial space
// is the support of |X|. rank counts singular values above kRankTol*sigma_max.
struct PolarParts {
  ComplexMatrix isometry;
  HermitianMatrix modulus;
  int rank = 0;
};

inline PolarParts polar(const ComplexMatrix& X) {
  if (X.rows() != X.cols()) throw dimension_error("polar needs a square matrix");
  const int n = X.rows();
  const HermitianMatrix gram(X.adjoint() * X);
  const Spectrum sp = eig_hermitian(gram);
  const double sigma_max = std::sqrt(std::max(sp.eigenvalues.back(), 0.0));
  const double cutoff = kRankTol * sigma_max;

  PolarParts parts;
  std::vector<double> sigma(sp.eigenvalues.size());
  std::vector<double> inv(sp.eigenvalues.size(), 0.0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    sigma[i] = std::sqrt(std::max(sp.eigenvalues[i], 0.0));
    if (sigma[i] > cutoff) {
      inv[i] = 1.0 / sigma[i];
      ++parts.rank;
    }
  }
  parts.modulus = detail::rebuild(sp, sigma);
  // W = X |X|^+ restricted to the support
  ComplexMatrix scaled = sp.eigenvectors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= inv[j];
  parts.isometry = X * (scaled * sp.eigenvectors.adjoint());
  return parts;
}

inline PolarParts polar(const HermitianMatrix& X) { return polar(X.cm()); }

// Partial isometry W with |S| = W* |S*| W on the support of |S| (W from the
// polar decomposition of S; |S*| = W |S| W*).
inline PolarParts conjugator_for_adjoint(const ComplexMatrix& S) { return polar(S); }

// Loewner order check: X <= Y iff lambda_min(Y - X) >= -(atol + rtol*scale).
inline OrderVerdict loewner_leq(const HermitianMatrix& X, const HermitianMatrix& Y,
                                const ToleranceConfig& tol = {}) {
  if (X.n() != Y.n()) throw dimension_error("loewner_leq dimension mismatch");
  OrderVerdict v;
  v.gap_min_eig = min_eig(Y - X);
  const double scale = std::max(operator_norm(X), operator_norm(Y));
  v.tolerance_used = tol.slack(scale);
  v.holds = v.gap_min_eig >= -v.tolerance_used;
  return v;
}

// Sorted-eigenvalue comparison: holds iff lambda_k(X) <= lambda_k(Y) for all k
// (both descending), which is equivalent to the existence of a unitary V with
// X <= V Y V*.
inline OrderVerdict spectral_dominance(const HermitianMatrix& X, const HermitianMatrix& Y,
                                       const ToleranceConfig& tol = {}) {
  if (X.n() != Y.n()) throw dimension_error("spectral_dominance dimension mismatch");
  const Spectrum sx = eig_hermitian(X);
  const Spectrum sy = eig_hermitian(Y);
  OrderVerdict v;
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < X.n(); ++k)
    worst = std::min(worst, sy.eigenvalues[k] - sx.eigenvalues[k]); // ascending pairs up
  v.gap_min_eig = worst;
  const double scale = std::max(operator_norm(X), operator_norm(Y));
  v.tolerance_used = tol.slack(scale);
  v.holds = worst >= -v.tolerance_used;
  return v;
}

} // namespace opineq

#endif
