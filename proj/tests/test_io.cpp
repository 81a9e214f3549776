#include <catch2/catch_amalgamated.hpp>

#include "opineq/io.hpp"
#include "opineq/sampling.hpp"

using namespace opineq;

TEST_CASE("matrix json round-trips through the writer and parser") {
  Rng rng(derive_seed(3, hash_str("io"), 0));
  const HermitianMatrix A = sampling::bounded_positive(3, SpectralBounds(0.5, 2.0), rng);
  JsonWriter w;
  write_matrix(w, A);
  const HermitianMatrix back = parse_hermitian(nlohmann::json::parse(w.str()));
  REQUIRE(distance_frobenius(A.cm(), back.cm()) <= 1e-15 * A.frobenius_norm());
}

TEST_CASE("matrix parser rejects malformed and non-finite input") {
  // 1e999 is rejected while the text is parsed (nlohmann overflow), before
  // the engine's own finiteness gate
  REQUIRE_THROWS(parse_matrix(nlohmann::json::parse(
      R"({"n":2,"entries":[[[1,0],[0,0]],[[0,0],[1e999,0]]]})")));
  REQUIRE_THROWS_AS(parse_matrix(nlohmann::json::parse(R"({"n":2,"entries":[[[1,0]]]})")),
                    parse_error);
}

TEST_CASE("map json round-trips for every variant") {
  Rng rng(derive_seed(5, hash_str("io-map"), 0));
  const std::vector<MapSpec> gallery = {
      MapSpec::compression(3, 2),
      MapSpec::normalized_trace(3),
      MapSpec::pinching(3, {{0, 2}, {1}}),
      random_map(3, 2, 2, 9),
  };
  for (const MapSpec& phi : gallery) {
    JsonWriter w;
    write_map(w, phi);
    const MapSpec back = parse_map(nlohmann::json::parse(w.str()));
    REQUIRE(back.variant_name() == phi.variant_name());
    const HermitianMatrix probe = sampling::bounded_positive(3, SpectralBounds(0.5, 2.0), rng);
    REQUIRE(distance_frobenius(phi.apply(probe).cm(), back.apply(probe).cm()) <= 1e-12);
  }
}

TEST_CASE("instance json round-trips and the check verdict is unchanged") {
  const Instance inst = sampling::sample_instance(Family::ME1, 3, 881);
  JsonWriter w;
  write_instance(w, inst);
  const Instance back = parse_instance(nlohmann::json::parse(w.str()));
  const CheckResult r1 = check_family(Family::ME1, inst);
  const CheckResult r2 = check_family(Family::ME1, back);
  REQUIRE(r1.status == r2.status);
  REQUIRE(r1.verdict.holds == r2.verdict.holds);
  REQUIRE(r1.verdict.gap_min_eig == Catch::Approx(r2.verdict.gap_min_eig).margin(1e-13));
}

TEST_CASE("writer emits 17-significant-digit numbers, byte-stable") {
  JsonWriter a, b;
  a.begin_object().key("x").value(1.0 / 3.0).end_object();
  b.begin_object().key("x").value(1.0 / 3.0).end_object();
  REQUIRE(a.str() == b.str());
  REQUIRE(a.str() == "{\"x\":0.33333333333333331}");
}
