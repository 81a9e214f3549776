#ifndef OPINEQ_CERTIFY_HPP
#define OPINEQ_CERTIFY_HPP

#include <array>
#include <optional>
#include <string>

#include "opineq/maps.hpp"

namespace opineq {

enum class OperatorProperty { Convex, Concave, Monotone };

inline const char* property_name(OperatorProperty p) {
  switch (p) {
    case OperatorProperty::Convex: return "operator-convex";
    case OperatorProperty::Concave: return "operator-concave";
    case OperatorProperty::Monotone: return "operator-monotone";
  }
  return "?";
}

// Sampling-based certification, never symbolic: an inconclusive pass is
// labeled certified-at-scale, never "proved".
struct ConvexityCertificate {
  OperatorProperty property = OperatorProperty::Convex;
  int trials = 0;
  double max_violation = 0.0;
  bool violated = false;

  struct Witness {
    HermitianMatrix A, B; // B is A+P for the monotone check
    double lambda = 0.5;  // unused for monotone
  };
  std::optional<Witness> witness;

  std::string verdict() const { return violated ? "violated" : "certified-at-scale"; }
};

namespace detail {

// Random Hermitian with spectrum log-uniform in the domain truncated to
// [1e-3, 1e3] (keeps powers up to t^{2+gamma} finite).
inline HermitianMatrix random_in_domain(int dim, const Interval& dom, Rng& rng) {
  const double lo = std::max(dom.lo, 1e-3);
  const double hi = std::min(dom.hi, 1e3);
  std::vector<double> eigs(dim);
  for (double& e : eigs) e = rng.log_uniform(lo, hi);
  const ComplexMatrix u = random_unitary(dim, rng);
  ComplexMatrix scaled = u;
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) scaled(i, j) *= eigs[j];
  return HermitianMatrix(scaled * u.adjoint());
}

} // namespace detail

// Randomized certification of operator convexity/concavity/monotonicity at a
// given dimension. For convexity, pairs (A,B) with spectra in dom(f) and
// lambda in {1/2} plus 8 random values (midpoint convexity plus continuity
// suffices, so 1/2 is always probed). For monotonicity, f(A) <= f(A+P) with P
// PSD. Deterministic given the seed; trials are independently seeded so a
// witness found at T trials persists for T' > T.
inline ConvexityCertificate certify(const ScalarFn& f, OperatorProperty property,
                                    int dim, int trials, std::uint64_t seed,
                                    const ToleranceConfig& tol = {}) {
  if (dim < 2) throw dimension_error("certify needs dim >= 2");
  ConvexityCertificate cert;
  cert.property = property;
  cert.trials = trials;
  const std::uint64_t stream = hash_str(property_name(property));

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, stream, static_cast<std::uint64_t>(trial)));
    const HermitianMatrix A = detail::random_in_domain(dim, f.domain(), rng);

    if (property == OperatorProperty::Monotone) {
      ComplexMatrix g = detail::random_gaussian(dim, dim, rng);
      const HermitianMatrix P((rng.uniform(0.1, 1.0) / dim) * (g.adjoint() * g));
      const HermitianMatrix B = A + P;
      const HermitianMatrix lhs = apply_scalar_function(A, f);
      const HermitianMatrix rhs = apply_scalar_function(B, f);
      const double scale = std::max(operator_norm(lhs), operator_norm(rhs));
      const double excess = max_eig(lhs - rhs); // positive part violates f(A) <= f(A+P)
      if (excess > cert.max_violation) {
        cert.max_violation = excess;
        if (excess > tol.slack(scale)) {
          cert.violated = true;
          cert.witness = ConvexityCertificate::Witness{A, B, 0.0};
        }
      }
      continue;
    }

    const HermitianMatrix B = detail::random_in_domain(dim, f.domain(), rng);
    const HermitianMatrix fA = apply_scalar_function(A, f);
    const HermitianMatrix fB = apply_scalar_function(B, f);
    std::array<double, 9> lambdas{};
    lambdas[0] = 0.5;
    for (std::size_t i = 1; i < lambdas.size(); ++i) lambdas[i] = rng.uniform();
    for (double lam : lambdas) {
      const HermitianMatrix mix = lam * A + (1.0 - lam) * B;
      const HermitianMatrix f_mix = apply_scalar_function(mix, f);
      const HermitianMatrix mix_f = lam * fA + (1.0 - lam) * fB;
      // convex: f(mix) <= mix_f; concave: reversed
      const HermitianMatrix diff =
          property == OperatorProperty::Convex ? f_mix - mix_f : mix_f - f_mix;
      const double scale = std::max(operator_norm(f_mix), operator_norm(mix_f));
      const double excess = max_eig(diff);
      if (excess > cert.max_violation) {
        cert.max_violation = excess;
        if (excess > tol.slack(scale)) {
          cert.violated = true;
          cert.witness = ConvexityCertificate::Witness{A, B, lam};
        }
      }
    }
  }
  return cert;
}

// Empirical crosscheck of the four-way equivalence for positive f on (0,inf):
// (i) f operator concave, (ii) f operator monotone, (iii) t/f operator
// monotone, (iv) t*f operator convex. Verdicts are reported as observed and a
// disagreement is flagged, not assumed away.
struct LfmpsReport {
  ConvexityCertificate f_concave;
  ConvexityCertificate f_monotone;
  ConvexityCertificate t_over_f_monotone;
  ConvexityCertificate t_times_f_convex;
  bool consistent = false;

  bool all_pass() const {
    return !f_concave.violated && !f_monotone.violated && !t_over_f_monotone.violated &&
           !t_times_f_convex.violated;
  }
};

inline LfmpsReport lfmps_crosscheck(const ScalarFn& f, int dim, int trials,
                                    std::uint64_t seed, const ToleranceConfig& tol = {}) {
  LfmpsReport rep;
  rep.f_concave = certify(f, OperatorProperty::Concave, dim, trials, seed, tol);
  rep.f_monotone = certify(f, OperatorProperty::Monotone, dim, trials, seed, tol);
  rep.t_over_f_monotone =
      certify(derive(f, DeriveKind::t_over_f), OperatorProperty::Monotone, dim, trials, seed, tol);
  rep.t_times_f_convex =
      certify(derive(f, DeriveKind::t_times_f), OperatorProperty::Convex, dim, trials, seed, tol);
  const bool v = rep.f_concave.violated;
  rep.consistent = rep.f_monotone.violated == v && rep.t_over_f_monotone.violated == v &&
                   rep.t_times_f_convex.violated == v;
  return rep;
}

} // namespace opineq

#endif
