#ifndef OPINEQ_COMMON_HPP
#define OPINEQ_COMMON_HPP

#include <stdexcept>
#include <string>

namespace opineq {

// Thrown when an input matrix fails a structural precondition
// (shape mismatch, non-finite entries, not Hermitian within tolerance).
class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a spectrum leaves the declared domain of a scalar function,
// or a near-singular operand is raised to a negative power.
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Eigensolver failed to converge within the sweep cap. Signals pathological
// input; mapped to exit code 3 by the CLI.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed ScalarFn text or JSON input; message cites the position.
class parse_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Order-check slack: a gap eigenvalue of X <= Y counts as nonnegative when
// it is >= -(atol + rtol * scale). The inequalities themselves are exact;
// the slack only absorbs floating-point error.
struct ToleranceConfig {
  double atol = 1e-10;
  double rtol = 1e-9;

  double slack(double scale) const { return atol + rtol * scale; }
};

// Verdict of one Loewner (or sorted-eigenvalue) comparison.
struct OrderVerdict {
  bool holds = false;
  double gap_min_eig = 0.0;   // lambda_min(Y - X), or the worst sorted gap
  double tolerance_used = 0.0;
};

inline constexpr double kHermTol = 1e-12;   // relative Hermiticity tolerance
inline constexpr double kRankTol = 1e-10;   // singular values below kRankTol*sigma_max are null
inline constexpr double kJacobiTol = 1e-13; // off-diagonal target, relative to ||A||_F
inline constexpr int kJacobiMaxSweeps = 64;

} // namespace opineq

#endif
