#ifndef OPINEQ_CONSTANTS_HPP
#define OPINEQ_CONSTANTS_HPP

#include <limits>

#include "opineq/maps.hpp"

namespace opineq {

// Spectral bounds 0 < m <= A <= M. h = M/m. Scalar operators have h = 1 and
// every constant degenerates to 1 there.
struct SpectralBounds {
  double m = 1.0;
  double M = 1.0;

  SpectralBounds() = default;
  SpectralBounds(double m_, double M_) : m(m_), M(M_) {
    if (!(m > 0.0) || M < m) throw domain_error("bounds need 0 < m <= M");
  }
  double h() const { return M / m; }
};

// Generalized Kantorovich constant. Evaluated as K(1,h,p) =
// (h^p - h)/((p-1)(h-1)) * ((p-1)/p * (h^p - 1)/(h^p - h))^p, which keeps the
// identity K(m,M,p) = kappa(M/m,p). Removable singularities at p in {0,1} and
// h -> 1 are taken by their continuity limits (all equal 1).
inline double kappa(double h, double p) {
  if (h < 1.0 - 1e-12) throw domain_error("kappa needs h >= 1");
  if (std::abs(h - 1.0) < 1e-8) return 1.0;
  if (std::abs(p - 1.0) < 1e-6 || std::abs(p) < 1e-6) return 1.0;
  const double hp = std::pow(h, p);
  const double first = (hp - h) / ((p - 1.0) * (h - 1.0));
  const double inner = (p - 1.0) / p * (hp - 1.0) / (hp - h);
  return first * std::pow(inner, p);
}

// K(m,M,p); depends on the bounds only through h, so it is evaluated as
// kappa(M/m, p) and the identity holds exactly.
inline double k_power(const SpectralBounds& b, double p) { return kappa(b.h(), p); }

namespace detail {

// Extremum of the secant-to-function ratio
//   rho(t) = ((M-t) f(m) + (t-m) f(M)) / ((M-m) f(t))
// over [m, M]: 4096-point grid, then golden-section refinement of the best
// bracket down to width 1e-12*(M-m). rho is 1 at both endpoints.
inline double secant_ratio_extremum(const SpectralBounds& b, const ScalarFn& f,
                                    bool maximize) {
  const double m = b.m, M = b.M;
  if (M - m < 1e-15) return 1.0;
  const double fm = f.eval_unchecked(m), fM = f.eval_unchecked(M);
  if (!(fm > 0.0) || !(fM > 0.0))
    throw domain_error("secant ratio needs f > 0 on [m, M]");
  const double sign = maximize ? 1.0 : -1.0;
  auto value = [&](double t) {
    const double ft = f.eval_unchecked(t);
    if (!(ft > 0.0)) throw domain_error("f vanishes inside [m, M]");
    return sign * (((M - t) * fm + (t - m) * fM) / ((M - m) * ft));
  };

  const int grid = 4096;
  int best = 0;
  double best_val = value(m);
  for (int i = 1; i <= grid; ++i) {
    const double t = m + (M - m) * i / grid;
    const double v = value(t);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = m + (M - m) * std::max(0, best - 1) / grid;
  double hi = m + (M - m) * std::min(grid, best + 1) / grid;

  const double invphi = 0.6180339887498949;
  // stop at the requested relative width, but never below what doubles can
  // resolve around [m, M]
  const double width_floor =
      std::max(1e-12 * (M - m), 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(m), std::abs(M)));
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 200 && hi - lo > width_floor; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = value(x1);
    }
  }
  return sign * std::max({best_val, f1, f2});
}

} // namespace detail

// K1 = min of the secant ratio (<= 1 for concave f), K2 = max (>= 1 for
// convex f).
inline double k1(const SpectralBounds& b, const ScalarFn& f) {
  return detail::secant_ratio_extremum(b, f, false);
}

inline double k2(const SpectralBounds& b, const ScalarFn& f) {
  return detail::secant_ratio_extremum(b, f, true);
}

// Composite reverse constant
//   K = kappa(f(M)/f(m), 2)^{1/2} * K1(m,M,f^2)^{-1/2} * K2(m,M,t f(t)).
// For decreasing f the first factor uses the ratio max/min of f's endpoint
// values (K(m,M,p) is symmetric in its bounds).
inline double k_reverse_theorem(const SpectralBounds& b, const ScalarFn& f) {
  const double fm = f.eval_unchecked(b.m), fM = f.eval_unchecked(b.M);
  if (!(fm > 0.0) || !(fM > 0.0)) throw domain_error("k_reverse_theorem needs f > 0");
  double hf = fM / fm;
  if (hf < 1.0) hf = 1.0 / hf;
  const double first = std::sqrt(kappa(hf, 2.0));
  const double second = 1.0 / std::sqrt(k1(b, derive(f, DeriveKind::f_squared)));
  const double third = k2(b, derive(f, DeriveKind::t_times_f));
  return first * second * third;
}

// kappa(h,1+gamma) kappa(h^gamma,2)^{1/2} kappa(h^2,gamma)^{-1/2}
inline double k_nakamoto(double h, double gamma) {
  if (gamma < -1e-12 || gamma > 1.0 + 1e-12) throw domain_error("k_nakamoto needs gamma in [0,1]");
  return kappa(h, 1.0 + gamma) * std::sqrt(kappa(std::pow(h, gamma), 2.0)) /
         std::sqrt(kappa(h * h, gamma));
}

// kappa(h^beta,1+alpha/beta) kappa(h^beta,2 alpha/beta)^{-1/2} kappa(h^alpha,2)^{1/2}
// for 0 <= alpha <= beta.
inline double k_m4(double h, double alpha, double beta) {
  if (alpha < -1e-12 || alpha > beta + 1e-12) throw domain_error("k_m4 needs 0 <= alpha <= beta");
  if (beta <= 1e-12) return 1.0; // alpha = beta = 0 degenerate case
  const double hb = std::pow(h, beta);
  return kappa(hb, 1.0 + alpha / beta) / std::sqrt(kappa(hb, 2.0 * alpha / beta)) *
         std::sqrt(kappa(std::pow(h, alpha), 2.0));
}

// kappa(h^a,2)^{1/2} kappa(h^b,2)^{1/2} kappa(h^g,2b/g)^{-1/2}
// kappa(h^g,2a/g)^{-1/2} kappa(h^g,1+(a+b)/g), the three-exponent composite;
// constraints min{a,b} <= g/2 and max{a,b} <= g. With b = 0 it reduces to the
// two-exponent composite above.
inline double k_three(double h, double alpha, double beta, double gamma) {
  if (alpha < -1e-12 || beta < -1e-12) throw domain_error("k_three needs alpha, beta >= 0");
  if (gamma <= 1e-12) {
    if (alpha > 1e-12 || beta > 1e-12) throw domain_error("k_three needs gamma > 0");
    return 1.0;
  }
  if (std::min(alpha, beta) > gamma / 2.0 + 1e-12 || std::max(alpha, beta) > gamma + 1e-12)
    throw domain_error("k_three needs min{a,b} <= g/2 and max{a,b} <= g");
  const double hg = std::pow(h, gamma);
  return std::sqrt(kappa(std::pow(h, alpha), 2.0)) * std::sqrt(kappa(std::pow(h, beta), 2.0)) /
         std::sqrt(kappa(hg, 2.0 * beta / gamma)) / std::sqrt(kappa(hg, 2.0 * alpha / gamma)) *
         kappa(hg, 1.0 + (alpha + beta) / gamma);
}

// Additive refinement term of the strengthened Phi(A)^r >= Phi(A^r) bound,
//   omega(A,r) = ||Phi(A)||^r - (||Phi(A)|| - inf_n ||(Phi(A) + 1/n - B)^{-1}||^{-1})^r
// with B = Phi(A^r)^{1/r}. The resolvent norms satisfy
// ||(Phi(A) + (1/n) I - B)^{-1}||^{-1} = lambda_min(Phi(A) - B) + 1/n, a
// decreasing sequence, so the infimum is the closed form
// lambda_min(Phi(A) - B); the n in {1,2,4,...,1024} evaluations are kept as a
// cross-check of that limit. r = 1 is allowed (B = Phi(A), omega = 0).
struct OmegaResult {
  double value = 0.0;
  double infimum = 0.0; // lambda_min(Phi(A) - B), the closed-form infimum
  std::vector<double> sequence_tail;
};

inline OmegaResult omega(const MapSpec& phi, const HermitianMatrix& A, double r) {
  if (r < 0.5 - 1e-12 || r > 1.0 + 1e-12) throw domain_error("omega needs r in [1/2, 1]");
  if (min_eig(A) <= 1e-12) throw domain_error("omega needs a positive invertible A");
  const HermitianMatrix phiA = phi.apply(A);
  const HermitianMatrix B = hermitian_power(phi.apply(hermitian_power(A, r)), 1.0 / r);
  const HermitianMatrix gap = phiA - B;

  OmegaResult res;
  res.infimum = min_eig(gap);
  const double norm = operator_norm(phiA);
  res.value = std::pow(norm, r) - std::pow(std::max(norm - res.infimum, 0.0), r);
  for (int n = 1; n <= 1024; n *= 2) {
    // honest evaluation of ||(Phi(A) + (1/n) I - B)^{-1}||^{-1}: the shifted
    // gap is positive definite, so the inverse norm is 1/lambda_min
    const double lam = min_eig(gap.shifted(1.0 / n));
    res.sequence_tail.push_back(lam);
  }
  return res;
}

} // namespace opineq

#endif
