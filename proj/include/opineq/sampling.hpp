#ifndef OPINEQ_SAMPLING_HPP
#define OPINEQ_SAMPLING_HPP

#include "opineq/engine.hpp"

namespace opineq {

// Seeded random hypothesis-satisfying instances, one sampler per family.
// Scalar functions are drawn from posynomial classes whose operator windows
// are exact, so hypothesis checks inside the checkers pass structurally and
// the suites stay deterministic and cheap.

namespace sampling {

inline HermitianMatrix gaussian_hermitian(int n, Rng& rng, double scale = 1.0) {
  ComplexMatrix g = detail::random_gaussian(n, n, rng);
  return HermitianMatrix((0.5 * scale) * (g + g.adjoint()));
}

// spectrum log-uniform inside [m, M], random unitary basis
inline HermitianMatrix bounded_positive(int n, const SpectralBounds& b, Rng& rng) {
  std::vector<double> eigs(n);
  for (double& e : eigs) e = b.m * std::pow(b.M / b.m, rng.uniform());
  const ComplexMatrix u = detail::random_unitary(n, rng);
  ComplexMatrix scaled = u;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scaled(i, j) *= eigs[j];
  return HermitianMatrix(scaled * u.adjoint());
}

inline SpectralBounds sample_bounds(Rng& rng) {
  const double m = rng.log_uniform(0.2, 1.0);
  const double h = rng.uniform(1.3, 6.0);
  return SpectralBounds(m, m * h);
}

inline MapSpec sample_map(int n, Rng& rng) {
  switch (rng.uniform_int(0, 5)) {
    case 0:
      if (n > 1) return MapSpec::compression(n, rng.uniform_int(std::max(1, n - 2), n - 1));
      [[fallthrough]];
    case 1: return MapSpec::normalized_trace(n);
    case 2: {
      const int nblocks = rng.uniform_int(2, n);
      std::vector<std::vector<int>> part(nblocks);
      for (int i = 0; i < n; ++i) part[rng.uniform_int(0, nblocks - 1)].push_back(i);
      part.erase(std::remove_if(part.begin(), part.end(),
                                [](const std::vector<int>& b) { return b.empty(); }),
                 part.end());
      return MapSpec::pinching(n, std::move(part));
    }
    case 3: return random_map(n, n, rng.uniform_int(1, 3), rng.next_u64());
    case 4: return random_map(n, std::max(1, n - 1), rng.uniform_int(1, 3), rng.next_u64());
    default: return random_map(n, n, 1, rng.next_u64()); // single unitary conjugation
  }
}

inline ScalarFn monomial(double coeff, double p) {
  return ScalarFn::product(ScalarFn::constant(coeff), ScalarFn::power(p));
}

inline ScalarFn binomial(double c0, double c1, double p) {
  return ScalarFn::sum(ScalarFn::constant(c0), monomial(c1, p));
}

inline ScalarFn operator_convex_fn(Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0: return monomial(rng.uniform(0.3, 2.0), rng.uniform(1.0, 2.0));
    case 1: return monomial(rng.uniform(0.3, 2.0), rng.uniform(-1.0, 0.0));
    case 2: return binomial(rng.uniform(0.2, 1.0), rng.uniform(0.2, 1.5), rng.uniform(1.0, 2.0));
    default: return ScalarFn::constant(rng.uniform(0.5, 2.0));
  }
}

// f with f^2 operator concave (exponents of f^2 stay inside [0,1])
inline ScalarFn f2_concave_fn(Rng& rng) {
  switch (rng.uniform_int(0, 2)) {
    case 0: return ScalarFn::power(rng.uniform(0.05, 0.5));
    case 1: return binomial(rng.uniform(0.3, 1.2), rng.uniform(0.3, 1.2), rng.uniform(0.05, 0.5));
    default: return ScalarFn::constant(rng.uniform(0.5, 2.0));
  }
}

inline ScalarFn nondecreasing_fn(Rng& rng) {
  if (rng.uniform_int(0, 1) == 0) return ScalarFn::power(rng.uniform(0.2, 1.8));
  return binomial(rng.uniform(0.0, 1.0) + 1e-3, rng.uniform(0.2, 1.5), 1.0);
}

inline Instance sample_instance(Family fam, int dim, std::uint64_t seed) {
  Rng rng(derive_seed(seed, hash_str("instance"), 0));
  Instance inst;
  inst.seed = seed;
  const SpectralBounds b = sample_bounds(rng);
  inst.bounds = b;
  inst.phi = sample_map(dim, rng);
  inst.A = bounded_positive(dim, b, rng);

  switch (fam) {
    case Family::CHDA:
      inst.f = operator_convex_fn(rng);
      break;
    case Family::POWER_CD:
      switch (rng.uniform_int(0, 2)) {
        case 0: inst.params.p = rng.uniform(1.0, 2.0); break;
        case 1: inst.params.p = rng.uniform(-1.0, 0.0); break;
        default: inst.params.p = rng.uniform(0.0, 1.0); break;
      }
      break;
    case Family::KADISON:
    case Family::MOMENT:
      inst.A = gaussian_hermitian(dim, rng);
      inst.bounds.reset();
      inst.moment_order = rng.uniform_int(1, 3);
      break;
    case Family::ASY:
      inst.params.gamma = rng.uniform(0.0, 1.0);
      break;
    case Family::ASY2: {
      const double beta = rng.uniform(0.1, 1.6);
      inst.params.beta = beta;
      inst.params.alpha = rng.uniform(0.0, beta);
      break;
    }
    case Family::ASY222:
    case Family::ASY33: {
      const double beta = rng.uniform(0.3, 1.2);
      const double alpha = rng.uniform(0.0, beta);
      inst.params.beta = beta;
      inst.params.alpha = alpha;
      inst.params.gamma = rng.uniform(beta / (alpha + beta), 2.0 * beta / (alpha + beta));
      break;
    }
    case Family::PERSPECTIVE:
    case Family::CH_OP1:
    case Family::CH_OP2:
      inst.B = bounded_positive(dim, sample_bounds(rng), rng);
      break;
    case Family::COR_F2_UPPER:
    case Family::COR_F2_LOWER:
      inst.f = f2_concave_fn(rng);
      break;
    case Family::COR_F2_SANDWICH:
      inst.f = binomial(1.0, rng.uniform(0.1, 1.5), rng.uniform(0.05, 0.5)); // f >= 1
      break;
    case Family::COR_GAMMA:
      inst.params.gamma = rng.uniform(0.0, 0.5);
      break;
    case Family::PROP_FR:
      inst.f = f2_concave_fn(rng);
      inst.params.r = rng.uniform(0.0, 0.5);
      break;
    case Family::BR_UNITARY_DOMINANCE:
      inst.f = nondecreasing_fn(rng);
      inst.g = nondecreasing_fn(rng);
      break;
    case Family::SCALAR_CHEBYSHEV: {
      const int k = rng.uniform_int(2, 9);
      inst.seq_a.resize(k);
      inst.seq_b.resize(k);
      for (double& x : inst.seq_a) x = rng.log_uniform(0.1, 10.0);
      for (double& x : inst.seq_b) x = rng.log_uniform(0.1, 10.0);
      std::sort(inst.seq_a.begin(), inst.seq_a.end());
      std::sort(inst.seq_b.begin(), inst.seq_b.end());
      if (rng.uniform_int(0, 1) == 1) std::reverse(inst.seq_b.begin(), inst.seq_b.end());
      break;
    }
    case Family::PO1: {
      switch (rng.uniform_int(0, 2)) {
        case 0: {
          const double a = rng.uniform(1.0, 2.0);
          inst.f = ScalarFn::power(a);
          inst.g = ScalarFn::power(rng.uniform(1.0 - a, 0.0));
          break;
        }
        case 1:
          inst.f = ScalarFn::constant(rng.uniform(0.4, 2.0));
          inst.g = ScalarFn::power(rng.uniform(1.0, 2.0));
          break;
        default:
          inst.f = ScalarFn::power(rng.uniform(1.0, 2.0));
          inst.g = ScalarFn::constant(rng.uniform(0.4, 2.0));
          break;
      }
      inst.params.r = rng.uniform(0.0, 0.5);
      break;
    }
    case Family::PO1_REVERSE: {
      const double a = rng.uniform(0.05, 0.9);
      inst.f = ScalarFn::power(a);
      inst.g = ScalarFn::power(rng.uniform(0.05, std::min(0.95, 1.0 - a)));
      inst.params.r = rng.uniform(0.0, 0.5);
      break;
    }
    case Family::TT1M1:
      inst.f = f2_concave_fn(rng);
      inst.g = f2_concave_fn(rng);
      break;
    case Family::TT1M2:
      // monomials keep t/(f g) inside the exact posynomial window
      inst.f = ScalarFn::power(rng.uniform(0.0, 0.5));
      inst.g = ScalarFn::power(rng.uniform(0.0, 0.5));
      break;
    case Family::ME1: {
      const double gamma = rng.uniform(0.4, 1.4);
      const double x = rng.uniform(0.0, gamma / 2.0);
      const double y = rng.uniform(0.0, gamma);
      inst.params.gamma = gamma;
      if (rng.uniform_int(0, 1) == 0) {
        inst.params.alpha = x;
        inst.params.beta = y;
      } else {
        inst.params.alpha = y;
        inst.params.beta = x;
      }
      break;
    }
    case Family::REV_JENSEN:
      if (rng.uniform_int(0, 1) == 0)
        inst.f = binomial(rng.uniform(0.1, 1.0), rng.uniform(0.5, 2.0), rng.uniform(0.1, 0.9));
      else if (rng.uniform_int(0, 1) == 0)
        inst.f = binomial(rng.uniform(0.1, 1.0), rng.uniform(0.5, 2.0), rng.uniform(1.2, 2.5));
      else
        inst.f = binomial(rng.uniform(0.1, 1.0), rng.uniform(0.5, 2.0), rng.uniform(-1.5, -0.3));
      break;
    case Family::REV_CHOI:
      inst.params.p = rng.uniform_int(0, 1) == 0 ? rng.uniform(1.05, 3.0) : rng.uniform(0.05, 0.95);
      break;
    case Family::THM_REVERSE_F:
      inst.f = rng.uniform_int(0, 1) == 0
                   ? ScalarFn::power(rng.uniform(0.1, 0.45))
                   : binomial(rng.uniform(0.2, 1.0), rng.uniform(0.5, 2.0), 0.5);
      break;
    case Family::COR_NAKAMOTO:
      inst.params.gamma = rng.uniform(0.0, 1.0);
      break;
    case Family::M4: {
      const double beta = rng.uniform(0.2, 1.4);
      inst.params.beta = beta;
      inst.params.alpha = rng.uniform(0.0, beta);
      break;
    }
    case Family::ELH: {
      inst.B = bounded_positive(dim, SpectralBounds(0.2, 1.5), rng);
      const double gap = rng.uniform(0.1, 1.0);
      inst.A = *inst.B + bounded_positive(dim, SpectralBounds(gap, gap + rng.uniform(0.2, 2.0)), rng);
      inst.bounds.reset();
      inst.params.r = rng.uniform(0.0, 1.0);
      break;
    }
    case Family::OMEGA_GAP:
      inst.params.r = rng.uniform(0.5, 1.0);
      break;
    case Family::LEMMA_ASA: {
      inst.B = bounded_positive(dim, SpectralBounds(0.2, 1.5), rng);
      const double gap = rng.uniform(0.1, 1.0);
      inst.A = *inst.B + bounded_positive(dim, SpectralBounds(gap, gap + rng.uniform(0.2, 2.0)), rng);
      inst.bounds.reset();
      const double r = rng.uniform(0.0, 2.0);
      const double q = rng.uniform(1.0, 3.0);
      inst.params.r = r;
      inst.params.q = q;
      inst.params.p = rng.uniform(1.0, std::max(1.0, std::min(2.5, (1.0 + r) * q - r)));
      break;
    }
    case Family::THM_MAIN2: {
      const double beta = rng.uniform(0.35, 1.0);
      inst.params.beta = beta;
      inst.params.alpha = rng.uniform(1.02 * beta, 2.0 * beta);
      break;
    }
    case Family::COR_LC:
      inst.params.gamma = rng.uniform(0.5, 0.999);
      break;
  }
  return inst;
}

} // namespace sampling

} // namespace opineq

#endif
