#ifndef OPINEQ_ENGINE_HPP
#define OPINEQ_ENGINE_HPP

#include <array>
#include <optional>
#include <string_view>

#include "opineq/certify.hpp"
#include "opineq/constants.hpp"

namespace opineq {

// One identifier per inequality family. CH_OP1/CH_OP2 are the two false
// extensions kept for counterexample work; everything else is a theorem
// under its hypotheses.
enum class Family {
  CHDA,
  POWER_CD,
  KADISON,
  ASY,
  ASY2,
  ASY222,
  ASY33,
  PERSPECTIVE,
  COR_F2_UPPER,
  COR_F2_LOWER,
  COR_F2_SANDWICH,
  COR_GAMMA,
  PROP_FR,
  BR_UNITARY_DOMINANCE,
  SCALAR_CHEBYSHEV,
  MOMENT,
  PO1,
  PO1_REVERSE,
  TT1M1,
  TT1M2,
  ME1,
  REV_JENSEN,
  REV_CHOI,
  THM_REVERSE_F,
  COR_NAKAMOTO,
  M4,
  ELH,
  OMEGA_GAP,
  LEMMA_ASA,
  THM_MAIN2,
  COR_LC,
  CH_OP1,
  CH_OP2,
};

inline constexpr std::array<Family, 33> kAllFamilies = {
    Family::CHDA,          Family::POWER_CD,      Family::KADISON,
    Family::ASY,           Family::ASY2,          Family::ASY222,
    Family::ASY33,         Family::PERSPECTIVE,   Family::COR_F2_UPPER,
    Family::COR_F2_LOWER,  Family::COR_F2_SANDWICH, Family::COR_GAMMA,
    Family::PROP_FR,       Family::BR_UNITARY_DOMINANCE, Family::SCALAR_CHEBYSHEV,
    Family::MOMENT,        Family::PO1,           Family::PO1_REVERSE,
    Family::TT1M1,         Family::TT1M2,         Family::ME1,
    Family::REV_JENSEN,    Family::REV_CHOI,      Family::THM_REVERSE_F,
    Family::COR_NAKAMOTO,  Family::M4,            Family::ELH,
    Family::OMEGA_GAP,     Family::LEMMA_ASA,     Family::THM_MAIN2,
    Family::COR_LC,        Family::CH_OP1,        Family::CH_OP2,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::CHDA: return "chda";
    case Family::POWER_CD: return "power_cd";
    case Family::KADISON: return "kadison";
    case Family::ASY: return "asy";
    case Family::ASY2: return "asy2";
    case Family::ASY222: return "asy222";
    case Family::ASY33: return "asy33";
    case Family::PERSPECTIVE: return "perspective";
    case Family::COR_F2_UPPER: return "cor_f2_upper";
    case Family::COR_F2_LOWER: return "cor_f2_lower";
    case Family::COR_F2_SANDWICH: return "cor_f2_sandwich";
    case Family::COR_GAMMA: return "cor_gamma";
    case Family::PROP_FR: return "prop_fr";
    case Family::BR_UNITARY_DOMINANCE: return "br_unitary_dominance";
    case Family::SCALAR_CHEBYSHEV: return "scalar_chebyshev";
    case Family::MOMENT: return "moment";
    case Family::PO1: return "po1";
    case Family::PO1_REVERSE: return "po1_reverse";
    case Family::TT1M1: return "tt1m1";
    case Family::TT1M2: return "tt1m2";
    case Family::ME1: return "me1";
    case Family::REV_JENSEN: return "rev_jensen";
    case Family::REV_CHOI: return "rev_choi";
    case Family::THM_REVERSE_F: return "thm_reverse_f";
    case Family::COR_NAKAMOTO: return "cor_nakamoto";
    case Family::M4: return "m4";
    case Family::ELH: return "elh";
    case Family::OMEGA_GAP: return "omega_gap";
    case Family::LEMMA_ASA: return "lemma_asa";
    case Family::THM_MAIN2: return "thm_main2";
    case Family::COR_LC: return "cor_lc";
    case Family::CH_OP1: return "ch_op1";
    case Family::CH_OP2: return "ch_op2";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

// Families whose checks are backed by a theorem (a failure is a bug or a
// genuine finding). The two false extensions are excluded.
inline bool theorem_family(Family f) {
  return f != Family::CH_OP1 && f != Family::CH_OP2;
}

inline bool isometry_family(Family f) {
  return f == Family::PO1 || f == Family::PO1_REVERSE || f == Family::TT1M1 ||
         f == Family::TT1M2 || f == Family::ME1;
}

// Exponent tuple; constraints are checked per family at use sites.
struct ExponentParams {
  std::optional<double> r, p, q, alpha, beta, gamma;
};

// One theorem's hypothesis tuple.
struct Instance {
  MapSpec phi;
  HermitianMatrix A;
  std::optional<HermitianMatrix> B;
  std::optional<ScalarFn> f, g;
  ExponentParams params;
  std::optional<SpectralBounds> bounds;
  std::vector<double> seq_a, seq_b; // scalar Chebyshev sequences
  int moment_order = 1;
  std::uint64_t seed = 0;
};

enum class CheckStatus { Checked, Skipped };
enum class IsometryMode { Constructive, Dominance };

struct CheckResult {
  Family family = Family::CHDA;
  CheckStatus status = CheckStatus::Checked;
  std::string skip_reason;
  std::vector<std::string> hypothesis_notes;

  HermitianMatrix lhs, rhs;             // assembled sides, constants included
  std::optional<double> constant;       // the statement's constant
  std::optional<double> chain_constant; // composite of the per-link constants
  std::optional<PolarParts> isometry;
  std::vector<double> chain_gaps; // per proof link; >= -tol when links hold
  OrderVerdict verdict;
  std::optional<Instance> witness;
};

namespace detail {

inline CheckResult skipped(Family fam, std::string reason) {
  CheckResult r;
  r.family = fam;
  r.status = CheckStatus::Skipped;
  r.skip_reason = std::move(reason);
  return r;
}

inline HermitianMatrix power_of(const Spectrum& sp, double p) {
  std::vector<double> vals(sp.eigenvalues.size());
  const double scale = std::max(std::abs(sp.eigenvalues.front()), std::abs(sp.eigenvalues.back()));
  const bool integral = p == std::floor(p) && p >= 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double lam = sp.eigenvalues[i];
    if (!integral) {
      if (p < 0.0 && lam <= 1e-12) throw domain_error("negative power of non-invertible operand");
      if (lam < 0.0) {
        if (lam < -1e-9 * std::max(1.0, scale))
          throw domain_error("fractional power of indefinite operand");
        lam = 0.0;
      }
    }
    vals[i] = std::pow(lam, p);
  }
  return rebuild(sp, vals);
}

inline HermitianMatrix fn_of(const Spectrum& sp, const ScalarFn& f) {
  const Interval dom = f.domain();
  std::vector<double> vals(sp.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double lam = sp.eigenvalues[i];
    const double margin = 1e-9 * std::max(1.0, std::abs(lam));
    if (!dom.contains(lam, margin))
      throw domain_error("eigenvalue outside the scalar function domain");
    lam = std::min(std::max(lam, dom.lo), dom.hi);
    vals[i] = f.eval_unchecked(lam);
  }
  return rebuild(sp, vals);
}

// Tri-state operator-property gate: exact posynomial windows first, randomized
// certification as the fallback for trees the window analysis cannot see.
struct HypGate {
  bool ok = false;
  bool at_scale = false;
};

inline HypGate operator_property_gate(const ScalarFn& f, OperatorProperty prop,
                                      std::uint64_t seed) {
  std::optional<bool> window;
  switch (prop) {
    case OperatorProperty::Convex: window = posyn_operator_convex(f); break;
    case OperatorProperty::Concave: window = posyn_operator_concave(f); break;
    case OperatorProperty::Monotone: window = posyn_operator_monotone(f); break;
  }
  if (window.has_value()) return {*window, false};
  const ConvexityCertificate cert = certify(f, prop, 2, 48, seed);
  return {!cert.violated, true};
}

struct BoundsCheck {
  bool ok = false;
  std::string reason;
  SpectralBounds b;
};

inline BoundsCheck require_bounds(const Instance& inst, const Spectrum& spA) {
  BoundsCheck r;
  if (!inst.bounds) {
    r.reason = "spectral bounds (m, M) required";
    return r;
  }
  r.b = *inst.bounds;
  const double slack = 1e-9 * std::max(1.0, std::abs(spA.max()));
  if (!(r.b.m > 0.0) || spA.min() < r.b.m - slack || spA.max() > r.b.M + slack) {
    r.reason = "spectrum of A not contained in [m, M]";
    return r;
  }
  r.ok = true;
  return r;
}

inline bool positive_invertible(const Spectrum& sp) { return sp.min() > 1e-12; }

inline void finish_loewner(CheckResult& res, const HermitianMatrix& lhs,
                           const HermitianMatrix& rhs, const ToleranceConfig& tol) {
  res.lhs = lhs;
  res.rhs = rhs;
  res.verdict = loewner_leq(lhs, rhs, tol);
}

// lambda_min style gap for an equality link: minus the residual norm, so the
// same ">= -tol" reading applies.
inline double equality_gap(const HermitianMatrix& x, const HermitianMatrix& y) {
  return -operator_norm(x - y);
}

inline bool monotone_direction(const std::vector<double>& v, bool& increasing) {
  bool inc = true, dec = true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] < v[i]) inc = false;
    if (v[i + 1] > v[i]) dec = false;
  }
  if (!inc && !dec) return false;
  increasing = inc;
  return true;
}

// ---------------------------------------------------------------------------
// direct families
// ---------------------------------------------------------------------------

inline CheckResult check_chda(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::CHDA;
  if (!inst.f) return skipped(res.family, "f required");
  const HypGate gate = operator_property_gate(*inst.f, OperatorProperty::Convex, inst.seed);
  if (!gate.ok) return skipped(res.family, "f is not operator convex");
  if (gate.at_scale) res.hypothesis_notes.push_back("f operator convexity certified at scale");
  const Spectrum spA = eig_hermitian(inst.A);
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  finish_loewner(res, apply_scalar_function(phiA, *inst.f), inst.phi.apply(fn_of(spA, *inst.f)),
                 tol);
  return res;
}

inline CheckResult check_power_cd(const Instance& inst, const ToleranceConfig& tol,
                                  bool relaxed = false) {
  CheckResult res;
  res.family = Family::POWER_CD;
  if (!inst.params.p) return skipped(res.family, "exponent p required");
  const double p = *inst.params.p;
  const bool upper = p >= 1.0 - 1e-12 || p <= 1e-12; // Phi(A)^p <= Phi(A^p)
  if (!relaxed) {
    const bool in_window =
        (p >= 1.0 - 1e-12 && p <= 2.0 + 1e-12) || (p >= -1.0 - 1e-12 && p <= 1.0 + 1e-12);
    if (!in_window) return skipped(res.family, "p outside [-1,0], [0,1] and [1,2]");
  }
  const Spectrum spA = eig_hermitian(inst.A);
  const bool needs_positive = p != std::floor(p) || p < 0.0;
  if (needs_positive && !positive_invertible(spA))
    return skipped(res.family, "fractional or negative power needs positive invertible A");
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const HermitianMatrix phi_pow = inst.phi.apply(power_of(spA, p));
  const HermitianMatrix pow_phi = power_of(eig_hermitian(phiA), p);
  if (upper)
    finish_loewner(res, pow_phi, phi_pow, tol);
  else
    finish_loewner(res, phi_pow, pow_phi, tol);
  return res;
}

inline CheckResult check_kadison(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::KADISON;
  const Spectrum spA = eig_hermitian(inst.A);
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  finish_loewner(res, power_of(eig_hermitian(phiA), 2.0), inst.phi.apply(power_of(spA, 2.0)),
                 tol);
  return res;
}

inline CheckResult check_asy(const Instance& inst, const ToleranceConfig& tol,
                             bool relaxed = false) {
  CheckResult res;
  res.family = Family::ASY;
  if (!inst.params.gamma) return skipped(res.family, "gamma required");
  const double g = *inst.params.gamma;
  if (!relaxed && (g < -1e-12 || g > 1.0 + 1e-12))
    return skipped(res.family, "gamma outside [0,1]");
  const Spectrum spA = eig_hermitian(inst.A);
  if (spA.min() < -1e-12) return skipped(res.family, "X must be positive");
  const HermitianMatrix phiX = inst.phi.apply(inst.A);
  const HermitianMatrix phiXg = inst.phi.apply(power_of(spA, g));
  finish_loewner(res, abs_op(phiXg * phiX), power_of(eig_hermitian(phiX), 1.0 + g), tol);
  return res;
}

inline CheckResult check_asy2(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::ASY2;
  if (!inst.params.alpha || !inst.params.beta) return skipped(res.family, "alpha, beta required");
  const double a = *inst.params.alpha, b = *inst.params.beta;
  if (a < -1e-12 || a > b + 1e-12) return skipped(res.family, "needs 0 <= alpha <= beta");
  const Spectrum spA = eig_hermitian(inst.A);
  if (spA.min() < -1e-12) return skipped(res.family, "X must be positive");
  finish_loewner(res,
                 abs_op(inst.phi.apply(power_of(spA, a)) * inst.phi.apply(power_of(spA, b))),
                 inst.phi.apply(power_of(spA, a + b)), tol);
  return res;
}

inline CheckResult check_asy222(const Instance& inst, const ToleranceConfig& tol,
                                bool inverted_first_factor) {
  CheckResult res;
  res.family = inverted_first_factor ? Family::ASY33 : Family::ASY222;
  if (!inst.params.alpha || !inst.params.beta || !inst.params.gamma)
    return skipped(res.family, "alpha, beta, gamma required");
  const double a = *inst.params.alpha, b = *inst.params.beta, g = *inst.params.gamma;
  if (a < -1e-12 || a > b + 1e-12 || b <= 0.0)
    return skipped(res.family, "needs 0 <= alpha <= beta, beta > 0");
  if (g < b / (a + b) - 1e-12 || g > 2.0 * b / (a + b) + 1e-12)
    return skipped(res.family, "gamma outside [beta/(alpha+beta), 2beta/(alpha+beta)]");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "X must be positive invertible");
  const HermitianMatrix first =
      inverted_first_factor
          ? power_of(eig_hermitian(inst.phi.apply(power_of(spA, -a))), -g)
          : power_of(eig_hermitian(inst.phi.apply(power_of(spA, a))), g);
  const HermitianMatrix second = power_of(eig_hermitian(inst.phi.apply(power_of(spA, b))), g);
  finish_loewner(res, abs_op(first * second), inst.phi.apply(power_of(spA, (a + b) * g)), tol);
  return res;
}

inline CheckResult check_perspective(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::PERSPECTIVE;
  if (!inst.B) return skipped(res.family, "B required");
  const Spectrum spA = eig_hermitian(inst.A);
  const Spectrum spB = eig_hermitian(*inst.B);
  if (spA.min() < -1e-12 || !positive_invertible(spB))
    return skipped(res.family, "needs A >= 0 and B positive invertible");
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const HermitianMatrix phiB_inv = power_of(eig_hermitian(inst.phi.apply(*inst.B)), -1.0);
  const HermitianMatrix lhs = conjugate_form(phiB_inv, phiA.cm());
  const HermitianMatrix rhs = inst.phi.apply(conjugate_form(power_of(spB, -1.0), inst.A.cm()));
  finish_loewner(res, lhs, rhs, tol);
  return res;
}

// |Phi(f(A)) Phi(A)| <= Phi(A f(A)) and the reversed inverse version, plus the
// f >= 1 sandwich that chains both with the middle comparison.
inline CheckResult check_cor_f2(const Instance& inst, const ToleranceConfig& tol, Family which) {
  CheckResult res;
  res.family = which;
  if (!inst.f) return skipped(which, "f required");
  const HypGate gate = operator_property_gate(derive(*inst.f, DeriveKind::f_squared),
                                              OperatorProperty::Concave, inst.seed);
  if (!gate.ok) return skipped(which, "f^2 is not operator concave");
  if (gate.at_scale) res.hypothesis_notes.push_back("f^2 concavity certified at scale");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(which, "A must be positive invertible");

  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const HermitianMatrix phiF = inst.phi.apply(fn_of(spA, *inst.f));
  const HermitianMatrix upper_abs = abs_op(phiF * phiA);
  const HermitianMatrix upper_rhs = inst.phi.apply(fn_of(spA, derive(*inst.f, DeriveKind::t_times_f)));
  if (which == Family::COR_F2_UPPER) {
    finish_loewner(res, upper_abs, upper_rhs, tol);
    return res;
  }

  const HermitianMatrix lower_abs = abs_op(power_of(eig_hermitian(phiF), -1.0) * phiA);
  const HermitianMatrix lower_lhs = inst.phi.apply(fn_of(spA, derive(*inst.f, DeriveKind::t_over_f)));
  if (which == Family::COR_F2_LOWER) {
    finish_loewner(res, lower_lhs, lower_abs, tol);
    return res;
  }

  // sandwich: Phi(A/f(A)) <= |Phi(f(A))^{-1}Phi(A)| <= |Phi(f(A))Phi(A)| <= Phi(A f(A))
  const ScalarShape shape = scalar_shape_on(*inst.f, spA.min(), spA.max());
  if (!shape.at_least_one) return skipped(which, "sandwich needs f >= 1 on the spectrum");
  res.chain_gaps.push_back(loewner_leq(lower_lhs, lower_abs, tol).gap_min_eig);
  res.chain_gaps.push_back(loewner_leq(lower_abs, upper_abs, tol).gap_min_eig);
  res.chain_gaps.push_back(loewner_leq(upper_abs, upper_rhs, tol).gap_min_eig);
  finish_loewner(res, lower_lhs, upper_rhs, tol);
  for (double g : res.chain_gaps)
    if (g < -res.verdict.tolerance_used) res.verdict.holds = false;
  res.verdict.gap_min_eig =
      std::min({res.chain_gaps[0], res.chain_gaps[1], res.chain_gaps[2]});
  return res;
}

inline CheckResult check_cor_gamma(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::COR_GAMMA;
  if (!inst.params.gamma) return skipped(res.family, "gamma required");
  const double g = *inst.params.gamma;
  if (g < -1e-12 || g > 0.5 + 1e-12) return skipped(res.family, "gamma outside [0, 1/2]");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const HermitianMatrix phiAg = inst.phi.apply(power_of(spA, g));
  const HermitianMatrix up_lhs = abs_op(phiAg * phiA);
  const HermitianMatrix up_rhs = inst.phi.apply(power_of(spA, 1.0 + g));
  const HermitianMatrix lo_lhs = inst.phi.apply(power_of(spA, 1.0 - g));
  const HermitianMatrix lo_rhs = abs_op(power_of(eig_hermitian(phiAg), -1.0) * phiA);
  res.chain_gaps.push_back(loewner_leq(up_lhs, up_rhs, tol).gap_min_eig);
  res.chain_gaps.push_back(loewner_leq(lo_lhs, lo_rhs, tol).gap_min_eig);
  finish_loewner(res, up_lhs, up_rhs, tol);
  res.verdict.gap_min_eig = std::min(res.chain_gaps[0], res.chain_gaps[1]);
  res.verdict.holds = res.verdict.gap_min_eig >= -res.verdict.tolerance_used;
  return res;
}

inline CheckResult check_prop_fr(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::PROP_FR;
  if (!inst.f || !inst.params.r) return skipped(res.family, "f and r required");
  const double r = *inst.params.r;
  if (r < -1e-12 || r > 0.5 + 1e-12) return skipped(res.family, "r outside [0, 1/2]");
  const HypGate gate = operator_property_gate(derive(*inst.f, DeriveKind::f_squared),
                                              OperatorProperty::Concave, inst.seed);
  if (!gate.ok) return skipped(res.family, "f^2 is not operator concave");
  if (gate.at_scale) res.hypothesis_notes.push_back("f^2 concavity certified at scale");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const HermitianMatrix phiFinv = inst.phi.apply(fn_of(spA, derive(*inst.f, DeriveKind::reciprocal)));
  const HermitianMatrix lhs = abs_op(power_of(eig_hermitian(phiFinv), -r) *
                                     power_of(eig_hermitian(phiA), r));
  const HermitianMatrix phiAf = inst.phi.apply(fn_of(spA, derive(*inst.f, DeriveKind::t_times_f)));
  finish_loewner(res, lhs, power_of(eig_hermitian(phiAf), r), tol);
  return res;
}

inline CheckResult check_br_dominance(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::BR_UNITARY_DOMINANCE;
  if (!inst.f || !inst.g) return skipped(res.family, "monotone functions h1, h2 required");
  const Spectrum spC = eig_hermitian(inst.A);
  if (spC.min() < -1e-12) return skipped(res.family, "base operator must be positive");
  const double lo = std::max(spC.min(), 0.0), hi = spC.max();
  if (hi > lo) {
    const ScalarShape s1 = scalar_shape_on(*inst.f, lo, hi);
    const ScalarShape s2 = scalar_shape_on(*inst.g, lo, hi);
    if (!s1.nondecreasing || !s2.nondecreasing || !s1.positive || !s2.positive)
      return skipped(res.family, "h1, h2 must be nonnegative and nondecreasing");
  }
  const HermitianMatrix Am = fn_of(spC, *inst.f);
  const HermitianMatrix Bm = fn_of(spC, *inst.g);
  const HermitianMatrix phiA = inst.phi.apply(Am);
  const HermitianMatrix X = conjugate_form(inst.phi.apply(Bm), phiA.cm());
  const HermitianMatrix Y = inst.phi.apply(conjugate_form(Bm, Am.cm()));
  res.lhs = X;
  res.rhs = Y;
  res.verdict = spectral_dominance(X, Y, tol);
  return res;
}

inline CheckResult check_scalar_chebyshev(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::SCALAR_CHEBYSHEV;
  const auto& a = inst.seq_a;
  const auto& b = inst.seq_b;
  if (a.size() < 2 || a.size() != b.size()) return skipped(res.family, "two equal-length sequences required");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] > 0.0) || !(b[i] > 0.0)) return skipped(res.family, "sequences must be positive");
  bool a_inc = false, b_inc = false;
  if (!monotone_direction(a, a_inc) || !monotone_direction(b, b_inc))
    return skipped(res.family, "sequences must be monotone");
  double ma = 0, mb = 0, mab = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
    mab += a[i] * b[i];
  }
  const double k = static_cast<double>(a.size());
  ma /= k;
  mb /= k;
  mab /= k;
  const bool similarly_ordered = a_inc == b_inc;
  ComplexMatrix l(1, 1), r(1, 1);
  if (similarly_ordered) { // mean(a) mean(b) <= mean(ab)
    l(0, 0) = ma * mb;
    r(0, 0) = mab;
  } else { // reversed
    l(0, 0) = mab;
    r(0, 0) = ma * mb;
  }
  finish_loewner(res, HermitianMatrix(l), HermitianMatrix(r), tol);
  return res;
}

inline CheckResult check_moment(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::MOMENT;
  const int r = inst.moment_order;
  if (r < 1) return skipped(res.family, "moment order must be >= 1");
  const Spectrum spA = eig_hermitian(inst.A);
  const int k = inst.phi.n_out();
  std::vector<HermitianMatrix> blocks;
  for (int d = 0; d <= 2 * r; ++d) blocks.push_back(inst.phi.apply(power_of(spA, d)));
  ComplexMatrix big((r + 1) * k, (r + 1) * k);
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j)
      for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v) big(i * k + u, j * k + v) = blocks[i + j](u, v);
  finish_loewner(res, HermitianMatrix::zero((r + 1) * k), HermitianMatrix(big), tol);
  return res;
}

// ---------------------------------------------------------------------------
// constructive (partial isometry) families
// ---------------------------------------------------------------------------

// The po1 family and its reverse. The isometry V comes from the polar
// decomposition of T1 = f(Phi(A))^{-r} Phi(A)^r Phi(g(A))^{-r}; the chain is
//   |T0| <= |T1| = V*|T1*|V,  |T1*| <= (t/(fg))^r (Phi(A)) <= Phi(f^-r t^r g^-r (A))
// with every comparison reversed for the concave variant.
inline CheckResult check_po1(const Instance& inst, const ToleranceConfig& tol,
                             IsometryMode mode, bool reverse) {
  CheckResult res;
  res.family = reverse ? Family::PO1_REVERSE : Family::PO1;
  if (!inst.f || !inst.g || !inst.params.r) return skipped(res.family, "f, g and r required");
  const double r = *inst.params.r;
  if (r < -1e-12 || r > 0.5 + 1e-12) return skipped(res.family, "r outside [0, 1/2]");

  const bool trivial_r = r <= 1e-12; // (fg/t)^0 is constant; hypotheses vacuous
  if (!trivial_r) {
    if (!reverse) {
      const HypGate cf = operator_property_gate(*inst.f, OperatorProperty::Convex, inst.seed);
      const HypGate cg = operator_property_gate(*inst.g, OperatorProperty::Convex, inst.seed + 1);
      const HypGate cq = operator_property_gate(
          derive(*inst.f, DeriveKind::fg_over_t, *inst.g), OperatorProperty::Concave,
          inst.seed + 2);
      if (!cf.ok || !cg.ok) return skipped(res.family, "f, g must be operator convex");
      if (!cq.ok) return skipped(res.family, "f(t)g(t)/t is not operator concave");
      if (cf.at_scale || cg.at_scale || cq.at_scale)
        res.hypothesis_notes.push_back("operator hypotheses certified at scale");
    } else {
      const HypGate cf = operator_property_gate(*inst.f, OperatorProperty::Concave, inst.seed);
      const HypGate cg = operator_property_gate(*inst.g, OperatorProperty::Concave, inst.seed + 1);
      const HypGate cq = operator_property_gate(
          derive(*inst.f, DeriveKind::t_over_fg, *inst.g), OperatorProperty::Concave,
          inst.seed + 2);
      if (!cf.ok || !cg.ok || !cq.ok)
        return skipped(res.family, "f, g and t/(f g) must be operator concave");
      if (cf.at_scale || cg.at_scale || cq.at_scale)
        res.hypothesis_notes.push_back("operator hypotheses certified at scale");
    }
  }
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");

  const ScalarFn f_mr = ScalarFn::pow_of(*inst.f, -r);
  const ScalarFn g_mr = ScalarFn::pow_of(*inst.g, -r);
  const ScalarFn t_r = ScalarFn::power(r);
  const ScalarFn core_fn = ScalarFn::product(f_mr, ScalarFn::product(t_r, g_mr));

  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const Spectrum spPhiA = eig_hermitian(phiA);
  const HermitianMatrix phiF_mr = power_of(eig_hermitian(inst.phi.apply(fn_of(spA, *inst.f))), -r);
  const HermitianMatrix phiG_mr = power_of(eig_hermitian(inst.phi.apply(fn_of(spA, *inst.g))), -r);

  const ComplexMatrix T0 = phiF_mr * (power_of(spPhiA, r) * phiG_mr);
  const HermitianMatrix absT0 = abs_op(T0);
  // T1 = f(Phi(A))^{-r} Phi(A)^r  *  Phi(g(A))^{-r}
  const ComplexMatrix T1 =
      fn_of(spPhiA, ScalarFn::product(f_mr, t_r)) * phiG_mr;
  const HermitianMatrix absT1 = abs_op(T1);
  const HermitianMatrix absT1s = abs_op(T1.adjoint());
  const HermitianMatrix C = fn_of(spPhiA, core_fn);
  const HermitianMatrix D = inst.phi.apply(fn_of(spA, core_fn));

  const PolarParts pol = polar(T1);
  res.isometry = pol;
  const HermitianMatrix conj_abs = conjugate_form(absT1s, pol.isometry); // V*|T1*|V
  const HermitianMatrix conj_D = conjugate_form(D, pol.isometry);        // V* D V

  if (!reverse) {
    res.chain_gaps = {min_eig(absT1 - absT0), equality_gap(absT1, conj_abs),
                      min_eig(C - absT1s), min_eig(D - C)};
    if (mode == IsometryMode::Dominance) {
      res.lhs = absT0;
      res.rhs = D;
      res.verdict = spectral_dominance(absT0, D, tol);
    } else {
      finish_loewner(res, absT0, conj_D, tol);
    }
  } else {
    res.chain_gaps = {min_eig(absT0 - absT1), equality_gap(absT1, conj_abs),
                      min_eig(absT1s - C), min_eig(C - D)};
    if (mode == IsometryMode::Dominance) {
      res.lhs = D;
      res.rhs = absT0;
      res.verdict = spectral_dominance(D, absT0, tol);
    } else {
      finish_loewner(res, conj_D, absT0, tol);
    }
  }
  return res;
}

// tt1m1/tt1m2: same chain shape with Kadison in place of the
// power step; U comes from the polar decomposition of
// T1 = f(Phi(A)) Phi(A) Phi(g(A)) (inverses for the second variant).
inline CheckResult check_tt1m(const Instance& inst, const ToleranceConfig& tol,
                              IsometryMode mode, bool inverse_variant) {
  CheckResult res;
  res.family = inverse_variant ? Family::TT1M2 : Family::TT1M1;
  if (!inst.f || !inst.g) return skipped(res.family, "f and g required");
  const HypGate cf2 = operator_property_gate(derive(*inst.f, DeriveKind::f_squared),
                                             OperatorProperty::Concave, inst.seed);
  const HypGate cg2 = operator_property_gate(derive(*inst.g, DeriveKind::f_squared),
                                             OperatorProperty::Concave, inst.seed + 1);
  if (!cf2.ok || !cg2.ok) return skipped(res.family, "f^2, g^2 must be operator concave");
  const ScalarFn fg = ScalarFn::product(*inst.f, *inst.g);
  const ScalarFn t = ScalarFn::identity();
  const ScalarFn core_fn = inverse_variant ? ScalarFn::quotient(t, fg) : ScalarFn::product(t, fg);
  const HypGate ccore = operator_property_gate(
      core_fn, inverse_variant ? OperatorProperty::Concave : OperatorProperty::Convex,
      inst.seed + 2);
  if (!ccore.ok)
    return skipped(res.family, inverse_variant ? "t/(f g) is not operator concave"
                                               : "t f(t) g(t) is not operator convex");
  if (cf2.at_scale || cg2.at_scale || ccore.at_scale)
    res.hypothesis_notes.push_back("operator hypotheses certified at scale");

  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");

  const double e = inverse_variant ? -1.0 : 1.0;
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const Spectrum spPhiA = eig_hermitian(phiA);
  const HermitianMatrix phiF = power_of(eig_hermitian(inst.phi.apply(fn_of(spA, *inst.f))), e);
  const HermitianMatrix phiG = power_of(eig_hermitian(inst.phi.apply(fn_of(spA, *inst.g))), e);

  const ComplexMatrix T0 = phiF * (phiA * phiG);
  const HermitianMatrix absT0 = abs_op(T0);
  const ScalarFn f_e = ScalarFn::pow_of(*inst.f, e);
  const ComplexMatrix T1 = fn_of(spPhiA, ScalarFn::product(f_e, t)) * phiG;
  const HermitianMatrix absT1 = abs_op(T1);
  const HermitianMatrix absT1s = abs_op(T1.adjoint());
  const HermitianMatrix C = fn_of(spPhiA, core_fn);
  const HermitianMatrix D = inst.phi.apply(fn_of(spA, core_fn));

  const PolarParts pol = polar(T1);
  res.isometry = pol;
  const HermitianMatrix conj_abs = conjugate_form(absT1s, pol.isometry);
  const HermitianMatrix conj_D = conjugate_form(D, pol.isometry);

  if (!inverse_variant) {
    res.chain_gaps = {min_eig(absT1 - absT0), equality_gap(absT1, conj_abs),
                      min_eig(C - absT1s), min_eig(D - C)};
    if (mode == IsometryMode::Dominance) {
      res.lhs = absT0;
      res.rhs = D;
      res.verdict = spectral_dominance(absT0, D, tol);
    } else {
      finish_loewner(res, absT0, conj_D, tol);
    }
  } else {
    res.chain_gaps = {min_eig(absT0 - absT1), equality_gap(absT1, conj_abs),
                      min_eig(absT1s - C), min_eig(C - D)};
    if (mode == IsometryMode::Dominance) {
      res.lhs = D;
      res.rhs = absT0;
      res.verdict = spectral_dominance(D, absT0, tol);
    } else {
      finish_loewner(res, conj_D, absT0, tol);
    }
  }
  return res;
}

// me1: Phi(A^{a+b+g}) <= K U*|Phi(A^small) Phi(A^g) Phi(A^big)| U
// with U from the polar decomposition of S = Phi(A^big) Phi(A^g)^{1+small/g}.
// The per-link constants are the proof's own; the end-to-end constant is the
// statement's composite K.
inline CheckResult check_me1(const Instance& inst, const ToleranceConfig& tol,
                             IsometryMode mode) {
  CheckResult res;
  res.family = Family::ME1;
  if (!inst.params.alpha || !inst.params.beta || !inst.params.gamma)
    return skipped(res.family, "alpha, beta, gamma required");
  const double alpha = *inst.params.alpha, beta = *inst.params.beta, gamma = *inst.params.gamma;
  if (alpha < -1e-12 || beta < -1e-12 || gamma <= 1e-12)
    return skipped(res.family, "needs alpha, beta >= 0 and gamma > 0");
  if (std::min(alpha, beta) > gamma / 2.0 + 1e-12 || std::max(alpha, beta) > gamma + 1e-12)
    return skipped(res.family, "needs min{a,b} <= g/2 and max{a,b} <= g");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");
  const BoundsCheck bc = require_bounds(inst, spA);
  if (!bc.ok) return skipped(res.family, bc.reason);

  const double big = std::max(alpha, beta), small = std::min(alpha, beta);
  const double a = big / gamma, b = small / gamma;
  const double h = bc.b.h();

  const HermitianMatrix phiXg = inst.phi.apply(power_of(spA, gamma));
  const Spectrum spPhiXg = eig_hermitian(phiXg);
  const HermitianMatrix phiBig = inst.phi.apply(power_of(spA, big));
  const HermitianMatrix phiSmall = inst.phi.apply(power_of(spA, small));
  const HermitianMatrix lhs = inst.phi.apply(power_of(spA, alpha + beta + gamma));

  const ComplexMatrix Tc = phiSmall * (phiXg * phiBig); // Phi(X^b) Phi(X) Phi(X^a)
  const HermitianMatrix absTc = abs_op(Tc);
  const double K = k_three(h, alpha, beta, gamma);
  res.constant = K;

  if (mode == IsometryMode::Dominance) {
    res.lhs = lhs;
    res.rhs = K * absTc;
    res.verdict = spectral_dominance(lhs, res.rhs, tol);
    return res;
  }

  const ComplexMatrix S = phiBig * power_of(spPhiXg, 1.0 + b);
  const PolarParts pol = polar(S);
  res.isometry = pol;
  const HermitianMatrix absS = abs_op(S);
  const HermitianMatrix absSs = abs_op(S.adjoint());

  // proof-route link constants
  const double c1 = std::sqrt(kappa(std::pow(h, small), 2.0)) /
                    std::sqrt(kappa(std::pow(h, gamma), 2.0 * b));
  const double c2 = std::sqrt(kappa(std::pow(h, 2.0 * gamma), a)) /
                    std::sqrt(kappa(std::pow(h, big), 2.0));
  const double c3 = kappa(std::pow(h, gamma), 1.0 + a + b);
  res.chain_constant = c1 / c2 * c3;

  const HermitianMatrix powSum = power_of(spPhiXg, 1.0 + a + b);
  res.chain_gaps = {
      min_eig(c1 * absTc - absSs),
      equality_gap(absSs, conjugate_form(absS, pol.isometry.adjoint())), // |S*| = U|S|U*
      min_eig(absS - c2 * powSum),
      min_eig(powSum - (1.0 / c3) * lhs),
  };
  finish_loewner(res, lhs, K * conjugate_form(absTc, pol.isometry), tol);
  return res;
}

// ---------------------------------------------------------------------------
// reverse (constant-bearing) families
// ---------------------------------------------------------------------------

inline CheckResult check_rev_jensen(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::REV_JENSEN;
  if (!inst.f) return skipped(res.family, "f required");
  const Spectrum spA = eig_hermitian(inst.A);
  const BoundsCheck bc = require_bounds(inst, spA);
  if (!bc.ok) return skipped(res.family, bc.reason);
  const ScalarShape shape = scalar_shape_on(*inst.f, bc.b.m, bc.b.M);
  if (!shape.positive) return skipped(res.family, "f must be positive on [m, M]");
  const HermitianMatrix phiF = inst.phi.apply(fn_of(spA, *inst.f));
  const HermitianMatrix fPhi = apply_scalar_function(inst.phi.apply(inst.A), *inst.f);
  if (shape.strictly_concave) {
    const double K1 = k1(bc.b, *inst.f);
    res.constant = K1;
    res.hypothesis_notes.push_back("f strictly concave on [m, M]");
    finish_loewner(res, K1 * fPhi, phiF, tol);
    return res;
  }
  if (shape.strictly_convex) {
    const double K2 = k2(bc.b, *inst.f);
    res.constant = K2;
    res.hypothesis_notes.push_back("f strictly convex on [m, M]");
    finish_loewner(res, phiF, K2 * fPhi, tol);
    return res;
  }
  return skipped(res.family, "f is neither strictly concave nor strictly convex on [m, M]");
}

inline CheckResult check_rev_choi(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::REV_CHOI;
  if (!inst.params.p) return skipped(res.family, "p required");
  const double p = *inst.params.p;
  if (p <= 1e-12) return skipped(res.family, "p must be positive");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");
  const BoundsCheck bc = require_bounds(inst, spA);
  if (!bc.ok) return skipped(res.family, bc.reason);
  const double K = k_power(bc.b, p);
  res.constant = K;
  const HermitianMatrix phiAp = inst.phi.apply(power_of(spA, p));
  const HermitianMatrix powPhi = power_of(eig_hermitian(inst.phi.apply(inst.A)), p);
  if (p >= 1.0) // Phi(A^p) <= K Phi(A)^p
    finish_loewner(res, phiAp, K * powPhi, tol);
  else // K Phi(A)^p <= Phi(A^p)
    finish_loewner(res, K * powPhi, phiAp, tol);
  return res;
}

inline CheckResult check_thm_reverse_f(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::THM_REVERSE_F;
  if (!inst.f) return skipped(res.family, "f required");
  const Spectrum spA = eig_hermitian(inst.A);
  const BoundsCheck bc = require_bounds(inst, spA);
  if (!bc.ok) return skipped(res.family, bc.reason);
  const ScalarShape f2_shape =
      scalar_shape_on(derive(*inst.f, DeriveKind::f_squared), bc.b.m, bc.b.M);
  const ScalarShape tf_shape =
      scalar_shape_on(derive(*inst.f, DeriveKind::t_times_f), bc.b.m, bc.b.M);
  if (!f2_shape.positive) return skipped(res.family, "f must be positive on [m, M]");
  res.hypothesis_notes.push_back(f2_shape.strictly_concave ? "f^2 strictly concave on [m, M]"
                                                           : "f^2 NOT strictly concave");
  res.hypothesis_notes.push_back(tf_shape.convex ? "t f(t) convex on [m, M]"
                                                 : "t f(t) NOT convex");
  if (!f2_shape.strictly_concave) return skipped(res.family, "f^2 not strictly concave on [m, M]");
  if (!tf_shape.convex) return skipped(res.family, "t f(t) not convex on [m, M]");

  const double K = k_reverse_theorem(bc.b, *inst.f);
  res.constant = K;
  const HermitianMatrix lhs = inst.phi.apply(fn_of(spA, derive(*inst.f, DeriveKind::t_times_f)));
  const HermitianMatrix phiF = inst.phi.apply(fn_of(spA, *inst.f));
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  finish_loewner(res, lhs, K * abs_op(phiF * phiA), tol);
  return res;
}

inline CheckResult check_nakamoto(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::COR_NAKAMOTO;
  if (!inst.params.gamma) return skipped(res.family, "gamma required");
  const double g = *inst.params.gamma;
  if (g < -1e-12 || g > 1.0 + 1e-12) return skipped(res.family, "gamma outside [0, 1]");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");
  const BoundsCheck bc = require_bounds(inst, spA);
  if (!bc.ok) return skipped(res.family, bc.reason);
  const double K = k_nakamoto(bc.b.h(), g);
  res.constant = K;
  const HermitianMatrix lhs = inst.phi.apply(power_of(spA, 1.0 + g));
  const HermitianMatrix core =
      abs_op(inst.phi.apply(power_of(spA, g)) * inst.phi.apply(inst.A));
  finish_loewner(res, lhs, K * core, tol);
  return res;
}

inline CheckResult check_m4(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::M4;
  if (!inst.params.alpha || !inst.params.beta) return skipped(res.family, "alpha, beta required");
  const double a = *inst.params.alpha, b = *inst.params.beta;
  if (a < -1e-12 || a > b + 1e-12) return skipped(res.family, "needs 0 <= alpha <= beta");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");
  const BoundsCheck bc = require_bounds(inst, spA);
  if (!bc.ok) return skipped(res.family, bc.reason);
  const double K = k_m4(bc.b.h(), a, b);
  res.constant = K;
  const HermitianMatrix lhs = inst.phi.apply(power_of(spA, a + b));
  const HermitianMatrix core =
      abs_op(inst.phi.apply(power_of(spA, a)) * inst.phi.apply(power_of(spA, b)));
  finish_loewner(res, lhs, K * core, tol);
  return res;
}

inline CheckResult check_elh(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::ELH;
  if (!inst.B || !inst.params.r) return skipped(res.family, "B and r required");
  const double r = *inst.params.r;
  if (r < -1e-12 || r > 1.0 + 1e-12) return skipped(res.family, "r outside [0, 1]");
  const Spectrum spA = eig_hermitian(inst.A);
  const Spectrum spB = eig_hermitian(*inst.B);
  if (spB.min() < -1e-12) return skipped(res.family, "B must be positive");
  const double gap = min_eig(inst.A - *inst.B);
  if (gap <= 1e-12) return skipped(res.family, "A - B must be strictly positive");
  const double normA = spA.max();
  const double s = std::pow(normA, r) - std::pow(normA - gap, r);
  res.constant = s;
  finish_loewner(res, power_of(spB, r).shifted(s), power_of(spA, r), tol);
  return res;
}

inline CheckResult check_omega_gap(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::OMEGA_GAP;
  if (!inst.params.r) return skipped(res.family, "r required");
  const double r = *inst.params.r;
  if (r < 0.5 - 1e-12 || r > 1.0 + 1e-12) return skipped(res.family, "r outside [1/2, 1]");
  const Spectrum spA = eig_hermitian(inst.A);
  if (!positive_invertible(spA)) return skipped(res.family, "A must be positive invertible");
  const OmegaResult om = omega(inst.phi, inst.A, r);
  res.constant = om.value;
  const HermitianMatrix phiAr = inst.phi.apply(power_of(spA, r));
  const HermitianMatrix powPhi = power_of(eig_hermitian(inst.phi.apply(inst.A)), r);
  finish_loewner(res, phiAr.shifted(om.value), powPhi, tol);
  return res;
}

inline CheckResult check_lemma_asa(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult res;
  res.family = Family::LEMMA_ASA;
  if (!inst.B || !inst.params.p || !inst.params.q || !inst.params.r)
    return skipped(res.family, "B, p, q, r required");
  const double p = *inst.params.p, q = *inst.params.q, r = *inst.params.r;
  // p >= 1 is required: with p < 1 the scalar case A = aI, B = bI, m = a-b
  // already violates the bound (the statement's p >= 0 is too generous).
  if (p < 1.0 - 1e-12 || r < -1e-12 || q < 1.0 - 1e-12)
    return skipped(res.family, "needs p >= 1, r >= 0 and q >= 1");
  if ((1.0 + r) * q < p + r - 1e-12) return skipped(res.family, "needs (1+r) q >= p+r");
  const Spectrum spA = eig_hermitian(inst.A);
  const Spectrum spB = eig_hermitian(*inst.B);
  if (!positive_invertible(spA) || !positive_invertible(spB))
    return skipped(res.family, "A, B must be positive invertible");
  const double m = min_eig(inst.A - *inst.B);
  if (m <= 1e-12) return skipped(res.family, "A - B must be strictly positive");

  const HermitianMatrix Ar2 = power_of(spA, r / 2.0);
  const HermitianMatrix inner = conjugate_form(power_of(spB, p), Ar2.cm());
  const HermitianMatrix core = hermitian_power(inner, 1.0 / q);
  const double normA = spA.max();
  const double shift_scalar = m * std::pow(spA.min(), r); // m ||A^{-1}||^{-r}
  const double s = std::pow(normA, (p + r) / q) -
                   std::pow(operator_norm(power_of(spA, 1.0 + r).shifted(-shift_scalar)),
                            (p + r) / (q * (1.0 + r)));
  res.constant = s;
  finish_loewner(res, core.shifted(s), power_of(spA, (p + r) / q), tol);
  return res;
}

inline CheckResult check_thm_main2(const Instance& inst, const ToleranceConfig& tol,
                                   bool lc_variant) {
  CheckResult res;
  res.family = lc_variant ? Family::COR_LC : Family::THM_MAIN2;
  double alpha = 1.0, beta = 0.0;
  if (lc_variant) {
    if (!inst.params.gamma) return skipped(res.family, "gamma required");
    beta = *inst.params.gamma;
    if (beta < 0.5 - 1e-12 || beta > 1.0 + 1e-12)
      return skipped(res.family, "gamma outside [1/2, 1]");
  } else {
    if (!inst.params.alpha || !inst.params.beta) return skipped(res.family, "alpha, beta required");
    alpha = *inst.params.alpha;
    beta = *inst.params.beta;
    if (!(beta >= -1e-12 && beta < alpha && alpha <= 2.0 * beta + 1e-12))
      return skipped(res.family, "needs 0 <= beta < alpha <= 2 beta");
  }
  const Spectrum spX = eig_hermitian(inst.A);
  if (!positive_invertible(spX)) return skipped(res.family, "X must be positive invertible");

  const double ratio = beta / alpha; // in [1/2, 1]
  const HermitianMatrix Xa = lc_variant ? inst.A : power_of(spX, alpha);
  const HermitianMatrix P = inst.phi.apply(Xa);
  const Spectrum spP = eig_hermitian(P);
  const HermitianMatrix Pb = inst.phi.apply(power_of(spX, beta));
  const OmegaResult om = omega(inst.phi, Xa, ratio);
  const double c = om.value * spP.min() * spP.min(); // omega * ||P^{-ratio}||^{-2/ratio}
  const double s = std::pow(spP.max(), 1.0 + ratio) -
                   std::pow(operator_norm(power_of(spP, 2.0 + ratio).shifted(-c)),
                            (beta + alpha) / (beta + 2.0 * alpha));
  res.constant = s;
  const HermitianMatrix lhs = abs_op(Pb * P).shifted(s);
  finish_loewner(res, lhs, power_of(spP, 1.0 + ratio), tol);
  return res;
}

// ---------------------------------------------------------------------------
// the two false extensions (counterexample families)
// ---------------------------------------------------------------------------

inline CheckResult check_ch_op(const Instance& inst, const ToleranceConfig& tol, bool sandwich) {
  CheckResult res;
  res.family = sandwich ? Family::CH_OP1 : Family::CH_OP2;
  if (!inst.B) return skipped(res.family, "B required");
  const Spectrum spA = eig_hermitian(inst.A);
  const Spectrum spB = eig_hermitian(*inst.B);
  if (spA.min() < -1e-9 || spB.min() < -1e-9)
    return skipped(res.family, "A, B must be positive");
  const HermitianMatrix phiA = inst.phi.apply(inst.A);
  const HermitianMatrix phiB = inst.phi.apply(*inst.B);
  if (sandwich) { // |Phi(B) Phi(A)| vs Phi(A^{1/2} B A^{1/2})
    const HermitianMatrix sqrtA = power_of(spA, 0.5);
    finish_loewner(res, abs_op(phiB * phiA),
                   inst.phi.apply(conjugate_form(*inst.B, sqrtA.cm())), tol);
  } else { // Phi(A) Phi(B) Phi(A) vs Phi(A B A)
    finish_loewner(res, conjugate_form(phiB, phiA.cm()),
                   inst.phi.apply(conjugate_form(*inst.B, inst.A.cm())), tol);
  }
  return res;
}

} // namespace detail

// Unified entry point used by the suite runner and the explorer.
inline CheckResult check_family(Family fam, const Instance& inst,
                                const ToleranceConfig& tol = {},
                                IsometryMode mode = IsometryMode::Constructive,
                                bool relaxed = false) {
  using namespace detail;
  switch (fam) {
    case Family::CHDA: return check_chda(inst, tol);
    case Family::POWER_CD: return check_power_cd(inst, tol, relaxed);
    case Family::KADISON: return check_kadison(inst, tol);
    case Family::ASY: return check_asy(inst, tol, relaxed);
    case Family::ASY2: return check_asy2(inst, tol);
    case Family::ASY222: return check_asy222(inst, tol, false);
    case Family::ASY33: return check_asy222(inst, tol, true);
    case Family::PERSPECTIVE: return check_perspective(inst, tol);
    case Family::COR_F2_UPPER: return check_cor_f2(inst, tol, Family::COR_F2_UPPER);
    case Family::COR_F2_LOWER: return check_cor_f2(inst, tol, Family::COR_F2_LOWER);
    case Family::COR_F2_SANDWICH: return check_cor_f2(inst, tol, Family::COR_F2_SANDWICH);
    case Family::COR_GAMMA: return check_cor_gamma(inst, tol);
    case Family::PROP_FR: return check_prop_fr(inst, tol);
    case Family::BR_UNITARY_DOMINANCE: return check_br_dominance(inst, tol);
    case Family::SCALAR_CHEBYSHEV: return check_scalar_chebyshev(inst, tol);
    case Family::MOMENT: return check_moment(inst, tol);
    case Family::PO1: return check_po1(inst, tol, mode, false);
    case Family::PO1_REVERSE: return check_po1(inst, tol, mode, true);
    case Family::TT1M1: return check_tt1m(inst, tol, mode, false);
    case Family::TT1M2: return check_tt1m(inst, tol, mode, true);
    case Family::ME1: return check_me1(inst, tol, mode);
    case Family::REV_JENSEN: return check_rev_jensen(inst, tol);
    case Family::REV_CHOI: return check_rev_choi(inst, tol);
    case Family::THM_REVERSE_F: return check_thm_reverse_f(inst, tol);
    case Family::COR_NAKAMOTO: return check_nakamoto(inst, tol);
    case Family::M4: return check_m4(inst, tol);
    case Family::ELH: return check_elh(inst, tol);
    case Family::OMEGA_GAP: return check_omega_gap(inst, tol);
    case Family::LEMMA_ASA: return check_lemma_asa(inst, tol);
    case Family::THM_MAIN2: return check_thm_main2(inst, tol, false);
    case Family::COR_LC: return check_thm_main2(inst, tol, true);
    case Family::CH_OP1: return check_ch_op(inst, tol, true);
    case Family::CH_OP2: return check_ch_op(inst, tol, false);
  }
  throw dimension_error("unknown family");
}

// Spec-surface wrappers grouped the way the operations are named.
inline CheckResult check_inequality(Family fam, const Instance& inst,
                                    const ToleranceConfig& tol = {}) {
  if (isometry_family(fam)) throw dimension_error("use check_with_isometry for this family");
  return check_family(fam, inst, tol);
}

inline CheckResult check_with_isometry(Family fam, const Instance& inst, IsometryMode mode,
                                       const ToleranceConfig& tol = {}) {
  if (!isometry_family(fam)) throw dimension_error("not a partial-isometry family");
  return check_family(fam, inst, tol, mode);
}

inline CheckResult check_reverse(Family fam, const Instance& inst,
                                 const ToleranceConfig& tol = {}) {
  return check_family(fam, inst, tol);
}

inline CheckResult check_moment_matrix(const MapSpec& phi, const HermitianMatrix& A, int order,
                                       const ToleranceConfig& tol = {}) {
  Instance inst;
  inst.phi = phi;
  inst.A = A;
  inst.moment_order = order;
  return detail::check_moment(inst, tol);
}

// ---------------------------------------------------------------------------
// the two explicit refutations, hard-coded inputs
// ---------------------------------------------------------------------------

struct CounterexampleReport {
  HermitianMatrix A, B;              // 3x3 inputs
  HermitianMatrix abs_phiB_phiA;     // exactly [[4,2],[2,4]]
  HermitianMatrix phi_sandwich;      // Phi(A^{1/2} B A^{1/2}), approx [[4,2.41],[2.41,3.89]]
  double ch_op1_gap_min_eig = 0.0;   // negative: the order fails
  HermitianMatrix phiA_phiB_phiA;    // exactly [[8,4],[4,8]]
  HermitianMatrix phi_ABA;           // exactly [[8,6],[6,9]]
  double ch_op2_gap_min_eig = 0.0;   // negative: the order fails
};

inline CounterexampleReport reproduce_counterexamples() {
  auto m3 = [](double a11, double a12, double a13, double a22, double a23, double a33) {
    ComplexMatrix m(3, 3);
    m(0, 0) = a11;
    m(0, 1) = m(1, 0) = a12;
    m(0, 2) = m(2, 0) = a13;
    m(1, 1) = a22;
    m(1, 2) = m(2, 1) = a23;
    m(2, 2) = a33;
    return HermitianMatrix(m);
  };
  CounterexampleReport rep;
  rep.B = m3(2, 1, 1, 2, 0, 1);
  rep.A = m3(2, 0, 0, 2, 1, 3);
  const MapSpec phi = MapSpec::compression(3, 2);

  const HermitianMatrix phiA = phi.apply(rep.A);
  const HermitianMatrix phiB = phi.apply(rep.B);
  rep.abs_phiB_phiA = abs_op(phiB * phiA);
  const HermitianMatrix sqrtA = hermitian_sqrt(rep.A);
  rep.phi_sandwich = phi.apply(conjugate_form(rep.B, sqrtA.cm()));
  rep.ch_op1_gap_min_eig = min_eig(rep.phi_sandwich - rep.abs_phiB_phiA);

  rep.phiA_phiB_phiA = conjugate_form(phiB, phiA.cm());
  rep.phi_ABA = phi.apply(conjugate_form(rep.B, rep.A.cm()));
  rep.ch_op2_gap_min_eig = min_eig(rep.phi_ABA - rep.phiA_phiB_phiA);
  return rep;
}

} // namespace opineq

#endif
