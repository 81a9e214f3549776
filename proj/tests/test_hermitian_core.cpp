#include <catch2/catch_amalgamated.hpp>

#include "opineq/calculus.hpp"
#include "opineq/maps.hpp"

using namespace opineq;

namespace {

HermitianMatrix sym2(double a, double b, double c) {
  ComplexMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = m(1, 0) = b;
  m(1, 1) = c;
  return HermitianMatrix(m);
}

HermitianMatrix random_hermitian(int n, Rng& rng) {
  ComplexMatrix g = detail::random_gaussian(n, n, rng);
  return HermitianMatrix(0.5 * (g + g.adjoint()));
}

HermitianMatrix random_positive(int n, Rng& rng) {
  ComplexMatrix g = detail::random_gaussian(n, n, rng);
  return HermitianMatrix((1.0 / n) * (g.adjoint() * g)).shifted(0.1);
}

} // namespace

TEST_CASE("eig: diagonal and identity inputs") {
  const Spectrum sp = eig_hermitian(HermitianMatrix::diagonal({1, 2, 3}));
  REQUIRE(sp.eigenvalues[0] == Catch::Approx(1.0).margin(1e-14));
  REQUIRE(sp.eigenvalues[1] == Catch::Approx(2.0).margin(1e-14));
  REQUIRE(sp.eigenvalues[2] == Catch::Approx(3.0).margin(1e-14));

  const Spectrum si = eig_hermitian(HermitianMatrix::identity(4));
  for (double lam : si.eigenvalues) REQUIRE(lam == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("eig: [[2,1],[1,4]] has eigenvalues 3 -/+ sqrt(2)") {
  // roots of lambda^2 - 6 lambda + 7, solved by hand
  const Spectrum sp = eig_hermitian(sym2(2, 1, 4));
  REQUIRE(sp.eigenvalues[0] == Catch::Approx(3.0 - std::sqrt(2.0)).margin(1e-12));
  REQUIRE(sp.eigenvalues[1] == Catch::Approx(3.0 + std::sqrt(2.0)).margin(1e-12));
  REQUIRE(min_eig(sym2(2, 1, 4)) == Catch::Approx(3.0 - std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("eig: reconstruction and unitarity on random Hermitian, n <= 12") {
  Rng rng(derive_seed(42, hash_str("eig-prop"), 0));
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 11);
    const HermitianMatrix A = random_hermitian(n, rng);
    const Spectrum sp = eig_hermitian(A);
    ComplexMatrix scaled = sp.eigenvectors;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) scaled(i, j) *= sp.eigenvalues[j];
    const double recon = distance_frobenius(scaled * sp.eigenvectors.adjoint(), A.cm());
    REQUIRE(recon <= 1e-11 * std::max(1.0, A.frobenius_norm()));
    const double unit = distance_frobenius(sp.eigenvectors.adjoint() * sp.eigenvectors,
                                           ComplexMatrix::identity(n));
    REQUIRE(unit <= 1e-11);
    for (int k = 0; k + 1 < n; ++k) REQUIRE(sp.eigenvalues[k] <= sp.eigenvalues[k + 1]);
  }
}

TEST_CASE("eig: deterministic for identical input") {
  Rng rng(derive_seed(7, hash_str("eig-det"), 0));
  const HermitianMatrix A = random_hermitian(6, rng);
  const Spectrum s1 = eig_hermitian(A);
  const Spectrum s2 = eig_hermitian(A);
  REQUIRE(distance_frobenius(s1.eigenvectors, s2.eigenvectors) == 0.0);
  for (int i = 0; i < 6; ++i) REQUIRE(s1.eigenvalues[i] == s2.eigenvalues[i]);
}

TEST_CASE("apply_scalar_function: powers and constants") {
  const HermitianMatrix D = HermitianMatrix::diagonal({1, 2});
  const HermitianMatrix sq = apply_scalar_function(D, ScalarFn::power(2));
  REQUIRE(sq(0, 0).real() == Catch::Approx(1.0).margin(1e-13));
  REQUIRE(sq(1, 1).real() == Catch::Approx(4.0).margin(1e-13));

  // trace of sqrt([[2,1],[1,4]]) = sqrt(3+sqrt 2) + sqrt(3-sqrt 2)
  const HermitianMatrix S = apply_scalar_function(sym2(2, 1, 4), ScalarFn::power(0.5));
  const double expected = std::sqrt(3.0 + std::sqrt(2.0)) + std::sqrt(3.0 - std::sqrt(2.0));
  REQUIRE(S(0, 0).real() + S(1, 1).real() == Catch::Approx(expected).margin(1e-12));

  const HermitianMatrix one = apply_scalar_function(sym2(2, 1, 4), ScalarFn::constant(1.0));
  REQUIRE(distance_frobenius(one.cm(), ComplexMatrix::identity(2)) <= 1e-13);
}

TEST_CASE("apply_scalar_function: domain violation reported") {
  const HermitianMatrix D = HermitianMatrix::diagonal({-2, 3});
  REQUIRE_THROWS_AS(apply_scalar_function(D, ScalarFn::power(0.5)), domain_error);
  REQUIRE_THROWS_AS(hermitian_power(HermitianMatrix::diagonal({0.0, 1.0}), -1.0), domain_error);
}

TEST_CASE("spectral calculus composes: f(g(A)) = (f o g)(A)") {
  Rng rng(derive_seed(11, hash_str("compose"), 0));
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix A = random_positive(3, rng);
    const ScalarFn g = ScalarFn::power(0.5);
    const ScalarFn f = ScalarFn::power(1.5);
    const HermitianMatrix via_two = apply_scalar_function(apply_scalar_function(A, g), f);
    const HermitianMatrix via_comp = apply_scalar_function(A, ScalarFn::compose(f, g));
    REQUIRE(distance_frobenius(via_two.cm(), via_comp.cm()) <=
            1e-9 * std::max(1.0, via_comp.frobenius_norm()));
  }
}

TEST_CASE("abs_op: examples and properties") {
  REQUIRE(distance_frobenius(abs_op(HermitianMatrix::diagonal({-2, 3})).cm(),
                             HermitianMatrix::diagonal({2, 3}).cm()) <= 1e-12);

  // X = [[0,1],[0,0]]: X*X = diag(0,1), square root diag(0,1) by hand
  ComplexMatrix X(2, 2);
  X(0, 1) = 1.0;
  REQUIRE(distance_frobenius(abs_op(X).cm(), HermitianMatrix::diagonal({0, 1}).cm()) <= 1e-12);

  Rng rng(derive_seed(5, hash_str("abs-prop"), 0));
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    const ComplexMatrix Y = detail::random_gaussian(n, n, rng);
    const HermitianMatrix absY = abs_op(Y);
    REQUIRE(min_eig(absY) >= -1e-10);
    const double norm2 = operator_norm(Y) * operator_norm(Y);
    REQUIRE(distance_frobenius((absY * absY), Y.adjoint() * Y) <= 1e-9 * std::max(1.0, norm2));
    // |UX| = |X| for unitary U
    const ComplexMatrix U = detail::random_unitary(n, rng);
    REQUIRE(distance_frobenius(abs_op(U * Y).cm(), absY.cm()) <=
            1e-9 * std::max(1.0, absY.frobenius_norm()));
  }
}

TEST_CASE("polar: examples") {
  {
    const PolarParts p = polar(HermitianMatrix::diagonal({0, 2}).cm());
    REQUIRE(p.rank == 1);
    REQUIRE(distance_frobenius(p.modulus.cm(), HermitianMatrix::diagonal({0, 2}).cm()) <= 1e-12);
    REQUIRE(std::abs(p.isometry(1, 1).real() - 1.0) <= 1e-12);
    REQUIRE(std::abs(p.isometry(0, 0)) <= 1e-12);
  }
  {
    // X = [[0,1],[0,0]] maps e2 -> e1 on the support
    ComplexMatrix X(2, 2);
    X(0, 1) = 1.0;
    const PolarParts p = polar(X);
    REQUIRE(p.rank == 1);
    REQUIRE(distance_frobenius(p.modulus.cm(), HermitianMatrix::diagonal({0, 1}).cm()) <= 1e-12);
    REQUIRE(std::abs(p.isometry(0, 1) - cplx(1.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("polar: reconstruction, projection, unitary on full rank") {
  Rng rng(derive_seed(13, hash_str("polar-prop"), 0));
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);
    const ComplexMatrix X = detail::random_gaussian(n, n, rng);
    const PolarParts p = polar(X);
    REQUIRE(distance_frobenius(p.isometry * p.modulus.cm(), X) <=
            1e-10 * std::max(1.0, X.frobenius_norm()));
    const ComplexMatrix proj = p.isometry.adjoint() * p.isometry;
    REQUIRE(distance_frobenius(proj * proj, proj) <= 1e-10);
    if (p.rank == n) // Gaussian draws are invertible in practice
      REQUIRE(distance_frobenius(proj, ComplexMatrix::identity(n)) <= 1e-10);
  }
}

TEST_CASE("conjugator_for_adjoint: |S| = W* |S*| W") {
  {
    const PolarParts p = conjugator_for_adjoint(HermitianMatrix::diagonal({1, 2}).cm());
    REQUIRE(distance_frobenius(p.isometry, ComplexMatrix::identity(2)) <= 1e-12);
  }
  Rng rng(derive_seed(17, hash_str("conj-prop"), 0));
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix S = detail::random_gaussian(3, 3, rng);
    const PolarParts p = conjugator_for_adjoint(S);
    const HermitianMatrix absS = abs_op(S);
    const HermitianMatrix absSs = abs_op(S.adjoint());
    const HermitianMatrix back = conjugate_form(absSs, p.isometry);
    REQUIRE(distance_frobenius(back.cm(), absS.cm()) <= 1e-9 * std::max(1.0, operator_norm(S)));
  }
}

TEST_CASE("loewner_leq: reflexivity, trivial cases, order on PSD") {
  const HermitianMatrix A = sym2(4, 2, 4);
  const OrderVerdict self = loewner_leq(A, A);
  REQUIRE(self.holds);
  REQUIRE(self.gap_min_eig == Catch::Approx(0.0).margin(1e-14));

  REQUIRE(loewner_leq(HermitianMatrix::zero(2), sym2(1, 0, 2)).holds);
  REQUIRE_THROWS_AS(loewner_leq(A, HermitianMatrix::identity(3)), dimension_error);
}

TEST_CASE("loewner_leq: transitive on sampled triples") {
  Rng rng(derive_seed(23, hash_str("loewner-trans"), 0));
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 4);
    const HermitianMatrix X = random_hermitian(n, rng);
    ComplexMatrix g1 = detail::random_gaussian(n, n, rng);
    ComplexMatrix g2 = detail::random_gaussian(n, n, rng);
    const HermitianMatrix Y = X + HermitianMatrix((1.0 / n) * (g1.adjoint() * g1));
    const HermitianMatrix Z = Y + HermitianMatrix((1.0 / n) * (g2.adjoint() * g2));
    REQUIRE(loewner_leq(X, Y).holds);
    REQUIRE(loewner_leq(Y, Z).holds);
    REQUIRE(loewner_leq(X, Z).holds);
  }
}

TEST_CASE("spectral_dominance: sorted eigenvalue comparison") {
  REQUIRE(spectral_dominance(HermitianMatrix::diagonal({1, 2}),
                             HermitianMatrix::diagonal({2, 3}))
              .holds);
  REQUIRE_FALSE(spectral_dominance(HermitianMatrix::diagonal({1, 3}),
                                   HermitianMatrix::diagonal({2, 2}))
                    .holds);
}

TEST_CASE("operator_norm and min_eig examples") {
  REQUIRE(operator_norm(HermitianMatrix::identity(3)) == Catch::Approx(1.0).margin(1e-13));
  REQUIRE(operator_norm(HermitianMatrix::diagonal({-3, 2})) == Catch::Approx(3.0).margin(1e-13));
  REQUIRE(min_eig(sym2(2, 1, 4)) == Catch::Approx(3.0 - std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("hermitian constructor rejects non-Hermitian input") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 0.5;
  REQUIRE_THROWS_AS(HermitianMatrix(m), dimension_error);
}
