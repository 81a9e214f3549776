#include <catch2/catch_amalgamated.hpp>

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

HermitianMatrix sym3(double a11, double a12, double a13, double a22, double a23, double a33) {
  ComplexMatrix m(3, 3);
  m(0, 0) = a11;
  m(0, 1) = m(1, 0) = a12;
  m(0, 2) = m(2, 0) = a13;
  m(1, 1) = a22;
  m(1, 2) = m(2, 1) = a23;
  m(2, 2) = a33;
  return HermitianMatrix(m);
}

} // namespace

TEST_CASE("apply: normalized trace of [[2,1],[1,4]] is 3I") {
  const HermitianMatrix out = MapSpec::normalized_trace(2).apply(sym2(2, 1, 4));
  REQUIRE(distance_frobenius(out.cm(), (3.0 * ComplexMatrix::identity(2))) <= 1e-13);
}

TEST_CASE("apply: compression keeps the leading block") {
  const HermitianMatrix A = sym3(2, 0, 0, 2, 1, 3);
  const HermitianMatrix out = MapSpec::compression(3, 2).apply(A);
  REQUIRE(distance_frobenius(out.cm(), (2.0 * ComplexMatrix::identity(2))) <= 1e-13);
}

TEST_CASE("apply: pinching to singletons keeps the diagonal") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.5;
  m(0, 1) = cplx(0.3, 0.2);
  m(1, 0) = std::conj(m(0, 1));
  m(1, 1) = 2.5;
  const HermitianMatrix out = MapSpec::pinching(2, {{0}, {1}}).apply(HermitianMatrix(m));
  REQUIRE(distance_frobenius(out.cm(), HermitianMatrix::diagonal({1.5, 2.5}).cm()) <= 1e-13);
}

TEST_CASE("validate: gallery members pass, broken weights fail") {
  REQUIRE(validate(MapSpec::normalized_trace(3)).passed());
  REQUIRE(validate(MapSpec::compression(4, 2)).passed());
  REQUIRE(validate(MapSpec::pinching(3, {{0, 2}, {1}})).passed());
  REQUIRE(validate(random_map(3, 2, 2, 5)).passed());

  Rng rng(derive_seed(5, hash_str("bad-weights"), 0));
  std::vector<MapSpec::KrausTerm> terms(2);
  terms[0].weight = 0.7;
  terms[0].isometry = detail::random_isometry(3, 3, rng);
  terms[1].weight = 0.4;
  terms[1].isometry = detail::random_isometry(3, 3, rng);
  const MapValidationReport rep = validate(MapSpec::kraus_mixture(3, 3, terms));
  REQUIRE_FALSE(rep.unital);
  REQUIRE_FALSE(rep.weights_normalized);
  REQUIRE_FALSE(rep.passed());
}

TEST_CASE("random_map: single term on square shape is a unitary conjugation") {
  const MapSpec phi = random_map(2, 2, 1, 11);
  REQUIRE(phi.terms().size() == 1);
  const ComplexMatrix& v = phi.terms()[0].isometry;
  REQUIRE(distance_frobenius(v.adjoint() * v, ComplexMatrix::identity(2)) <= 1e-10);
  REQUIRE(phi.terms()[0].weight == Catch::Approx(1.0));
  // unitality on I
  REQUIRE(distance_frobenius(phi.apply(HermitianMatrix::identity(2)).cm(),
                             ComplexMatrix::identity(2)) <= 1e-10);
}

TEST_CASE("random_map: rectangular shapes validate; infeasible shapes rejected") {
  REQUIRE(validate(random_map(3, 2, 2, 17)).passed());
  REQUIRE(validate(random_map(4, 4, 3, 17)).passed());
  REQUIRE_THROWS_AS(random_map(2, 3, 1, 17), dimension_error);
}

TEST_CASE("random_map: deterministic given seed") {
  const MapSpec a = random_map(3, 2, 2, 99);
  const MapSpec b = random_map(3, 2, 2, 99);
  REQUIRE(a.terms()[0].weight == b.terms()[0].weight);
  REQUIRE(distance_frobenius(a.terms()[1].isometry, b.terms()[1].isometry) == 0.0);
}

TEST_CASE("properties: linearity, unitality, positivity, Kadison smoke") {
  Rng rng(derive_seed(21, hash_str("map-props"), 0));
  std::vector<MapSpec> gallery = {
      MapSpec::normalized_trace(3),
      MapSpec::compression(3, 2),
      MapSpec::pinching(3, {{0, 1}, {2}}),
      random_map(3, 3, 2, 1),
      random_map(3, 2, 3, 2),
  };
  for (const MapSpec& phi : gallery) {
    // unitality
    REQUIRE(distance_frobenius(phi.apply(HermitianMatrix::identity(3)).cm(),
                               ComplexMatrix::identity(phi.n_out())) <= 1e-10);
    for (int trial = 0; trial < 200; ++trial) { // 1000 PSD inputs across the gallery
      ComplexMatrix g1 = detail::random_gaussian(3, 3, rng);
      ComplexMatrix g2 = detail::random_gaussian(3, 3, rng);
      const HermitianMatrix X = HermitianMatrix(0.5 * (g1 + g1.adjoint()));
      const HermitianMatrix Y = HermitianMatrix(0.5 * (g2 + g2.adjoint()));
      const double al = rng.uniform(-2.0, 2.0), be = rng.uniform(-2.0, 2.0);
      const HermitianMatrix lin = phi.apply(HermitianMatrix(al * X.cm() + be * Y.cm()));
      const HermitianMatrix sep =
          HermitianMatrix(al * phi.apply(X).cm() + be * phi.apply(Y).cm());
      REQUIRE(distance_frobenius(lin.cm(), sep.cm()) <=
              1e-11 * std::max(1.0, sep.frobenius_norm()));

      // positivity on PSD input
      const HermitianMatrix P = detail::random_psd(3, rng);
      REQUIRE(min_eig(phi.apply(P)) >= -1e-10);

      // Kadison smoke: Phi(X^2) - Phi(X)^2 >= 0
      const HermitianMatrix v =
          phi.apply(HermitianMatrix(X.cm() * X.cm())) -
          HermitianMatrix(phi.apply(X).cm() * phi.apply(X).cm());
      REQUIRE(min_eig(v) >= -1e-9);
    }
  }
}
