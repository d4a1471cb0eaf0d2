#include <doctest.h>

#include "generators.hpp"
#include "speclab/entropy.hpp"
#include "speclab/harmonic.hpp"
#include "speclab/scalar_ops.hpp"
#include "speclab/spectral.hpp"

#include <cmath>

using namespace speclab;

namespace {

SpherePoly sp(const char* text) { return SpherePoly(parse_poly(3, text)); }

const QuadratureRule& rule80() {
  static const QuadratureRule r = build_quadrature(80);
  return r;
}

const HarmonicProjector& proj25() {
  static const HarmonicProjector p(rule80(), 25);
  return p;
}

}  // namespace

TEST_CASE("quadrature rule") {
  const auto r = build_quadrature(10);
  double s = 0;
  for (const auto& nd : r.nodes) s += nd.weight;
  CHECK(std::abs(s - 1) < 1e-15);
  CHECK(std::abs(r.integrate([](const Point3&) { return 1.0; }) - 1) < 1e-15);
  CHECK(std::abs(r.integrate([](const Point3& x) { return x[0] * x[0]; }) - 1.0 / 3) < 1e-13);
  CHECK(std::abs(r.integrate([](const Point3& x) { return std::pow(x[0], 4); }) - 0.2) < 1e-13);
  Monomial m;
  m.set(2, 4);
  CHECK(std::abs(r.integrate([](const Point3& x) { return std::pow(x[2], 4); }) - to_double(moment_integral(2, m))) < 1e-13);
  for (int order : {2, 3, 7, 20, 40, 80}) CHECK(quadrature_moment_error(build_quadrature(order), order) <= 1e-13);
  // one degree past exactness is detected on the azimuthal side
  CHECK(quadrature_moment_error(build_quadrature(6), 8) > 1e-6);
  CHECK_THROWS_AS(build_quadrature(1), Error);
}

TEST_CASE("quadrature against exact integration of random polynomials") {
  testgen::Gen g(7);
  const auto& r = rule80();
  for (int t = 0; t < 20; ++t) {
    const SpherePoly p(g.poly(3, 12, 6));
    const double want = to_double(integrate(p));
    CHECK(std::abs(r.integrate([&](const Point3& x) { return evaluate(p, x); }) - want) <= 1e-10 * (1 + std::abs(want)));
  }
}

TEST_CASE("conformal factor") {
  for (double s : {0.0, 0.1, 0.3, 0.6}) {
    const ConformalFactor F({s, 0, 0});
    CHECK(std::abs(rule80().integrate([&](const Point3& x) { return F(x) * F(x); }) - 1) < 1e-10);
    for (const auto& nd : rule80().nodes) CHECK(F(nd.x) > 0);
  }
  // ∫F^n = 1 fails for a wrong (non-conformal) exponent in the denominator
  CHECK(std::abs(rule80().integrate([](const Point3& x) {
          const double v = 0.91 / std::pow(1.09 - 0.6 * x[0], 1.5);
          return v * v;
        }) - 1) > 1e-3);
  CHECK_THROWS_AS(ConformalFactor({0.8, 0.6, 0}), Error);
}

TEST_CASE("apply_spectral_operator examples") {
  auto img = apply_spectral_operator(sp("1"), [](int) { return 1.0; });
  REQUIRE(img.parts.size() == 1);
  CHECK(img.evaluate({0.3, 0.4, std::sqrt(0.75)}) == doctest::Approx(1));
  const SpherePoly h = apply_spectral_operator_exact(sp("x1"), [](int j) { return mu_prime(2, j); });
  CHECK(h == sp("2*x1"));
  img = apply_spectral_operator(sp("x1^2"), [](int j) { return to_double(A1_eigen(2, j)); });
  REQUIRE(img.parts.size() == 2);
  CHECK(img.parts[0].degree == 0);
  CHECK(img.parts[0].component == sp("1/3"));
  CHECK(img.parts[0].scale == 0.5);
  CHECK(img.parts[1].component == sp("x1^2 - 1/3"));
  CHECK(img.parts[1].scale == 2.5);
  const SpherePoly a = apply_spectral_operator_exact(sp("x1^2"), [](int j) { return A1_eigen(2, j); });
  CHECK(a == sp("5/2*x1^2 - 2/3"));
}

TEST_CASE("harmonic projector") {
  const auto& p = proj25();
  // exact eigenfunctions sit entirely in their own level
  for (int j = 0; j <= 4; ++j) {
    const auto e = build_eigenspace(2, j);
    for (const auto& phi : e.funcs) {
      const auto en = p.energies(rule80().sample([&](const Point3& x) { return evaluate(phi, x); }));
      const double norm = to_double(inner_product(phi, phi));
      for (int k = 0; k <= 25; ++k) CHECK(std::abs(en[k] - (k == j ? norm : 0.0)) <= 1e-12 * (1 + norm));
    }
  }
  CHECK_THROWS_AS(HarmonicProjector(build_quadrature(10), 6), Error);
}

TEST_CASE("entropy sides examples") {
  auto s = entropy_sides(sp("1"), rule80());
  CHECK(std::abs(s.lhs) < 1e-15);
  CHECK(std::abs(s.rhs) < 1e-15);
  s = entropy_sides(sp("1 + x2/2"), rule80());
  CHECK(s.gap > 0);
  const auto sampled = entropy_sides(sphere_function(sp("1 + x2/2")), proj25());
  CHECK(std::abs(sampled.rhs - s.rhs) < 1e-12);
  CHECK(std::abs(sampled.lhs - s.lhs) < 1e-15);
  const auto eq = entropy_sides(conformal_function({0, 0, 0.3}), proj25());
  CHECK(std::abs(eq.gap) < 1e-6);
  CHECK(eq.truncation < 1e-8);
  CHECK_THROWS_AS(entropy_sides(sp("x2"), rule80()), Error);
  CHECK_THROWS_AS(entropy_sides(SpherePoly(parse_poly(4, "1")), rule80()), Error);
}

TEST_CASE("equality is specific to conformal factors") {
  // a perturbed conformal exponent breaks equality
  const ConformalFactor F({0, 0, 0.3});
  const SphereFunction g{"F^1.1", [F](const Point3& x) { return std::pow(F(x), 1.1); }, std::nullopt, false};
  CHECK(entropy_sides(g, proj25()).gap > 1e-5);
  CHECK(beckner_check(g, 0.5, proj25()).gap > 1e-5);
  for (double s : {0.1, 0.3, 0.6}) {
    const auto f = conformal_function({s, 0, 0}, 1.7);
    CHECK(std::abs(entropy_sides(f, proj25()).gap) < 1e-6);
    CHECK(std::abs(beckner_check(f, 0.5, proj25()).gap) < 1e-6);
    CHECK(std::abs(beckner_check(f, 0.25, proj25()).gap) < 1e-6);
  }
}

TEST_CASE("giveaway") {
  CHECK(std::abs(giveaway_sides(sp("1"), rule80()).gap) < 1e-15);
  const auto l = entropy_sides(sp("1 + x2/2"), rule80());
  const auto g = giveaway_sides(sp("1 + x2/2"), rule80());
  CHECK(g.gap > 0);
  CHECK(g.gap > l.gap / 2);
  for (int n = 2; n <= 6; ++n)
    for (int j = 0; j <= 25; ++j) {
      const auto c = log_comparison(n, j);
      CHECK(to_double(c.mu_prime) <= c.log_bound);
    }
}

TEST_CASE("Beckner") {
  for (double r : {0.1, 0.5, 0.9}) {
    const auto s = beckner_check(sphere_function(sp("1")), r, proj25());
    CHECK(std::abs(s.lhs - 1) < 1e-14);
    CHECK(std::abs(s.rhs - 1) < 1e-14);
  }
  CHECK(beckner_check(sphere_function(sp("1 + x1^2/4")), 0.5, proj25()).gap > 0);
  CHECK(std::abs(beckner_check(conformal_function({0, 0, 0.3}), 0.5, proj25()).gap) < 1e-6);
  CHECK_THROWS_AS(beckner_check(sphere_function(sp("1")), 0, proj25()), Error);
  CHECK_THROWS_AS(beckner_check(sphere_function(sp("1")), 1, proj25()), Error);
  // r = 0: both sides are ∫Fⁿ
  const auto z = beckner_sides(sphere_function(sp("2 + x0")), 0, proj25());
  CHECK(std::abs(z.lhs - z.rhs) < 1e-14);
  CHECK(std::abs(z.lhs - to_double(integrate(sp("(2 + x0)^2")))) < 1e-13);
  // double eigenvalues agree with the exact normalization
  for (int j = 0; j <= 10; ++j) {
    CHECK(beckner_eigen(2, 0.5, j) == doctest::Approx((to_double(B_normalized(2, make_rat(1, 2), j).exact.value()))).epsilon(1e-14));
    CHECK(beckner_eigen(3, 0.25, j) == doctest::Approx((to_double(B_normalized(3, make_rat(1, 4), j).exact.value()))).epsilon(1e-14));
  }
}

TEST_CASE("Beckner derivative at r = 0 is the entropy deficit") {
  for (const auto& f : {sphere_function(sp("1 + x2/2")), sphere_function(sp("2 + x0 + x1^2")), conformal_function({0.3, 0, 0})}) {
    const double h = 1e-3;
    const double d = (beckner_sides(f, h, proj25()).gap - beckner_sides(f, -h, proj25()).gap) / (2 * h);
    CHECK(std::abs(d - entropy_sides(f, proj25()).gap) < 1e-5);
  }
}

TEST_CASE("monotone gap along 1 + t x2") {
  double prev = -1;
  for (int k = 0; k <= 9; ++k) {
    const double gap = entropy_sides(SpherePoly(parse_poly(3, "1 + " + to_string(make_rat(k, 10)) + "*x2")), rule80()).gap;
    if (k == 0) CHECK(std::abs(gap) < 1e-14);
    CHECK(gap > prev);
    prev = gap;
  }
}

TEST_CASE("battery and suite") {
  const auto b = entropy_battery();
  CHECK(b.size() == 30);
  std::size_t conformal = 0;
  for (const auto& f : b) conformal += f.conformal ? 1 : 0;
  CHECK(conformal == 8);
  const auto rep = run_entropy_suite({80, 25, 1});
  for (const auto& r : rep.records) {
    INFO(r.test << " " << r.f_description << " gap=" << r.gap);
    CHECK(r.pass);
  }
  CHECK(rep.all_pass());
  const auto js = rep.to_json();
  CHECK(js.find("\"cutoff_J\": 25") != std::string::npos);
  CHECK(js.find("\"f_description\"") != std::string::npos);
  CHECK(rep.summary().all_pass());
  CHECK(rep.to_csv().rfind("test,f_description,order,cutoff_J,lhs,rhs,gap,truncation,status\n", 0) == 0);
  CHECK_THROWS_AS(run_entropy_suite({20, 10, 1}), Error);
}
