#include <catch2/catch_amalgamated.hpp>

#include "opineq/certify.hpp"

using namespace opineq;

TEST_CASE("eval: basic trees") {
  REQUIRE(ScalarFn::power(2).eval(3.0) == Catch::Approx(9.0));
  // (t*f) for f = sqrt(t) at 4 -> 8
  const ScalarFn tf = derive(ScalarFn::power(0.5), DeriveKind::t_times_f);
  REQUIRE(tf.eval(4.0) == Catch::Approx(8.0));
  // f(t) g(t) / t for f = g = t at 5 -> 5
  const ScalarFn q = derive(ScalarFn::identity(), DeriveKind::fg_over_t, ScalarFn::identity());
  REQUIRE(q.eval(5.0) == Catch::Approx(5.0));
  REQUIRE(ScalarFn::constant(1.0).eval(2.5) == Catch::Approx(1.0));
}

TEST_CASE("derive: tree shapes evaluate to the expected closed forms") {
  const ScalarFn sqrt_t = ScalarFn::power(0.5);
  REQUIRE(derive(sqrt_t, DeriveKind::t_times_f).eval(9.0) ==
          Catch::Approx(std::pow(9.0, 1.5)));
  // fg/t of (t^-gamma, 1) -> t^{-1-gamma}
  const ScalarFn fur = derive(ScalarFn::power(-0.3), DeriveKind::fg_over_t, ScalarFn::constant(1));
  REQUIRE(fur.eval(2.0) == Catch::Approx(std::pow(2.0, -1.3)));
  // f_pow_r(1/2) of t^2 -> t
  REQUIRE(derive(ScalarFn::power(2), DeriveKind::f_pow_r, std::nullopt, 0.5).eval(7.0) ==
          Catch::Approx(7.0));
}

TEST_CASE("derive then eval equals arithmetic on eval results, 256-point grid") {
  const ScalarFn f = ScalarFn::sum(ScalarFn::constant(0.7),
                                   ScalarFn::product(ScalarFn::constant(1.3), ScalarFn::power(0.4)));
  const ScalarFn g = ScalarFn::power(1.2);
  const ScalarFn tf = derive(f, DeriveKind::t_times_f);
  const ScalarFn tof = derive(f, DeriveKind::t_over_f);
  const ScalarFn fg_t = derive(f, DeriveKind::fg_over_t, g);
  const ScalarFn t_fg = derive(f, DeriveKind::t_over_fg, g);
  const ScalarFn rec = derive(f, DeriveKind::reciprocal);
  const ScalarFn f2 = derive(f, DeriveKind::f_squared);
  const ScalarFn fr = derive(f, DeriveKind::f_pow_r, std::nullopt, 0.37);
  for (int i = 0; i < 256; ++i) {
    const double t = std::pow(10.0, -2.0 + 4.0 * i / 255.0);
    const double ft = f.eval(t), gt = g.eval(t);
    REQUIRE(tf.eval(t) == Catch::Approx(t * ft).epsilon(1e-14));
    REQUIRE(tof.eval(t) == Catch::Approx(t / ft).epsilon(1e-14));
    REQUIRE(fg_t.eval(t) == Catch::Approx(ft * gt / t).epsilon(1e-14));
    REQUIRE(t_fg.eval(t) == Catch::Approx(t / (ft * gt)).epsilon(1e-14));
    REQUIRE(rec.eval(t) == Catch::Approx(1.0 / ft).epsilon(1e-14));
    REQUIRE(f2.eval(t) == Catch::Approx(ft * ft).epsilon(1e-14));
    REQUIRE(fr.eval(t) == Catch::Approx(std::pow(ft, 0.37)).epsilon(1e-14));
  }
}

TEST_CASE("parser: the CLI syntax round-trips") {
  const ScalarFn f = ScalarFn::parse("mul(t,pow(t,-0.3))");
  REQUIRE(f.eval(2.0) == Catch::Approx(std::pow(2.0, 0.7)));
  REQUIRE(ScalarFn::parse("const(1)").eval(5.0) == Catch::Approx(1.0));
  REQUIRE(ScalarFn::parse("pow(t,0.5)").eval(9.0) == Catch::Approx(3.0));
  REQUIRE(ScalarFn::parse("add(const(1),div(t,const(2)))").eval(4.0) == Catch::Approx(3.0));
  REQUIRE(ScalarFn::parse("comp(pow(t,2),add(t,const(1)))").eval(2.0) == Catch::Approx(9.0));

  const ScalarFn g = ScalarFn::parse("mul(const(2),pow(t,1.5))");
  REQUIRE(ScalarFn::parse(g.to_text()).eval(3.0) == Catch::Approx(g.eval(3.0)));
}

TEST_CASE("parser: errors cite the position") {
  try {
    ScalarFn::parse("pow(t,");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(std::string(e.what()).find("position") != std::string::npos);
  }
  REQUIRE_THROWS_AS(ScalarFn::parse("foo(t,t)"), parse_error);
  REQUIRE_THROWS_AS(ScalarFn::parse("pow(t,0.5)x"), parse_error);
}

TEST_CASE("posynomial extraction and operator windows") {
  const ScalarFn f = ScalarFn::sum(ScalarFn::constant(1.0),
                                   ScalarFn::product(ScalarFn::constant(0.5), ScalarFn::power(0.3)));
  auto terms = f.as_posynomial();
  REQUIRE(terms.has_value());
  REQUIRE(terms->size() == 2);

  REQUIRE(*posyn_operator_concave(ScalarFn::power(0.5)));
  REQUIRE_FALSE(*posyn_operator_concave(ScalarFn::power(2.0)));
  REQUIRE(*posyn_operator_convex(ScalarFn::power(2.0)));
  REQUIRE(*posyn_operator_convex(ScalarFn::power(-0.5)));
  REQUIRE_FALSE(*posyn_operator_convex(ScalarFn::power(3.0)));
  // (1 + 0.5 t^{0.3})^2 expands inside [0,1]
  const ScalarFn f2 = derive(f, DeriveKind::f_squared);
  REQUIRE(*posyn_operator_concave(f2));
  // composition is invisible to the extraction
  REQUIRE_FALSE(ScalarFn::compose(ScalarFn::power(2), f).as_posynomial().has_value());
}

TEST_CASE("certify: t^2 is operator convex at scale") {
  const ConvexityCertificate c =
      certify(ScalarFn::power(2), OperatorProperty::Convex, 4, 500, 31);
  REQUIRE_FALSE(c.violated);
  REQUIRE(c.verdict() == "certified-at-scale");
}

TEST_CASE("certify: sqrt is operator monotone over 1000 trials") {
  const ConvexityCertificate c =
      certify(ScalarFn::power(0.5), OperatorProperty::Monotone, 4, 1000, 31);
  REQUIRE_FALSE(c.violated);
}

TEST_CASE("certify: t^3 operator convexity violated at dim 2 with witness") {
  const ConvexityCertificate c =
      certify(ScalarFn::power(3), OperatorProperty::Convex, 2, 500, 31);
  REQUIRE(c.violated);
  REQUIRE(c.witness.has_value());
  REQUIRE(c.max_violation > 0.0);

  // the witness reproduces the violation
  const auto& w = *c.witness;
  const HermitianMatrix mix = w.lambda * w.A + (1.0 - w.lambda) * w.B;
  const HermitianMatrix lhs = apply_scalar_function(mix, ScalarFn::power(3));
  const HermitianMatrix rhs = w.lambda * apply_scalar_function(w.A, ScalarFn::power(3)) +
                              (1.0 - w.lambda) * apply_scalar_function(w.B, ScalarFn::power(3));
  REQUIRE(max_eig(lhs - rhs) > 0.0);
}

TEST_CASE("certify: power monotonicity windows at dim 2 within 1000 trials") {
  for (double p : {0.3, 0.5, 1.0}) {
    const ConvexityCertificate c =
        certify(ScalarFn::power(p), OperatorProperty::Monotone, 2, 1000, 47);
    INFO("p = " << p);
    REQUIRE_FALSE(c.violated);
  }
  for (double p : {1.5, 2.0, 3.0}) {
    const ConvexityCertificate c =
        certify(ScalarFn::power(p), OperatorProperty::Monotone, 2, 1000, 47);
    INFO("p = " << p);
    REQUIRE(c.violated);
  }
}

TEST_CASE("certify: witnesses persist under more trials with the same seed") {
  const ConvexityCertificate at200 =
      certify(ScalarFn::power(3), OperatorProperty::Convex, 2, 200, 99);
  REQUIRE(at200.violated); // t^3 violations are plentiful at this budget
  const ConvexityCertificate at800 =
      certify(ScalarFn::power(3), OperatorProperty::Convex, 2, 800, 99);
  REQUIRE(at800.violated);
  REQUIRE(at800.max_violation >= at200.max_violation);
}

TEST_CASE("lfmps_crosscheck: sqrt passes all four, t^2 fails all four, const 1 passes") {
  const LfmpsReport ok = lfmps_crosscheck(ScalarFn::power(0.5), 3, 200, 3);
  REQUIRE(ok.all_pass());
  REQUIRE(ok.consistent);

  const LfmpsReport bad = lfmps_crosscheck(ScalarFn::power(2.0), 2, 500, 3);
  REQUIRE(bad.f_concave.violated);
  REQUIRE(bad.f_monotone.violated);
  REQUIRE(bad.t_over_f_monotone.violated);
  REQUIRE(bad.t_times_f_convex.violated); // t^3 is not operator convex
  REQUIRE(bad.consistent);

  const LfmpsReport one = lfmps_crosscheck(ScalarFn::constant(1.0), 3, 200, 3);
  REQUIRE(one.all_pass());
  REQUIRE(one.consistent);
}

TEST_CASE("lfmps_crosscheck: 1/t is flagged inconsistent on the open half-line") {
  // t * (1/t) = 1 is operator convex, yet 1/t is decreasing; the report
  // records the disagreement instead of assuming the equivalence.
  const LfmpsReport r = lfmps_crosscheck(ScalarFn::power(-1.0), 2, 400, 3);
  REQUIRE(r.f_monotone.violated);
  REQUIRE_FALSE(r.t_times_f_convex.violated);
  REQUIRE_FALSE(r.consistent);
}

TEST_CASE("scalar_shape_on: convexity classification on an interval") {
  const ScalarShape concave = scalar_shape_on(ScalarFn::power(0.5), 1.0, 4.0);
  REQUIRE(concave.strictly_concave);
  REQUIRE(concave.positive);
  const ScalarShape convex = scalar_shape_on(ScalarFn::power(2.0), 1.0, 4.0);
  REQUIRE(convex.strictly_convex);
  const ScalarShape linear = scalar_shape_on(ScalarFn::identity(), 1.0, 4.0);
  REQUIRE(linear.convex);
  REQUIRE(linear.concave);
  REQUIRE_FALSE(linear.strictly_convex);
  REQUIRE_FALSE(linear.strictly_concave);
  REQUIRE(linear.nondecreasing);
}

TEST_CASE("quotient denominators checked on a grid") {
  const ScalarFn ok = ScalarFn::quotient(ScalarFn::identity(), ScalarFn::constant(2.0));
  REQUIRE(ok.denominators_nonvanishing());
}
