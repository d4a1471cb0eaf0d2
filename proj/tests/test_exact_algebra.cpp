#include <doctest.h>

#include "generators.hpp"
#include "speclab/harmonic.hpp"
#include "speclab/linalg.hpp"

using namespace speclab;

namespace {

RawPoly P(int nv, const char* s) { return parse_poly(nv, s); }
SpherePoly S(int nv, const char* s) { return SpherePoly(parse_poly(nv, s)); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/6") == make_rat(1, 2));
  CHECK(parse_rat("-0.3") == make_rat(-3, 10));
  CHECK(parse_rat("1.25e-2") == make_rat(1, 80));
  CHECK(to_string(parse_rat("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK(to_string(parse_crat("1/2+3/4 i")) == "1/2+3/4 i");
  CHECK(to_string(CRat(Rat(0), Rat(-1))) == "0-1 i");
}

TEST_CASE("complex rationals") {
  const CRat z(make_rat(1, 2), Rat(-3));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).im == 0);
  CHECK(z / z == CRat(1));
  CHECK(CRat::i() * CRat::i() == CRat(-1));
}

TEST_CASE("quadratic surds") {
  const QuadSurd five = QuadSurd(Rat(5)).sqrt();
  CHECK(five.radicand() == 5);
  CHECK(five * five == QuadSurd(Rat(5)));
  const QuadSurd x = QuadSurd(Rat(2)) - five;
  CHECK(x.sign() < 0);
  CHECK(x.to_string() == "2 - sqrt(5)");
  CHECK(QuadSurd(make_rat(9, 4)).sqrt() == QuadSurd(make_rat(3, 2)));
  CHECK(QuadSurd(Rat(12)).sqrt().radicand() == 3);
  // (1+√5)² = 6+2√5
  const QuadSurd y = QuadSurd(Rat(6), Rat(2), Int(5));
  CHECK(y.sqrt() == QuadSurd(Rat(1), Rat(1), Int(5)));
  CHECK_THROWS_AS(QuadSurd(Rat(-1)).sqrt(), Error);
  CHECK_THROWS_AS(QuadSurd(Rat(1), Rat(1), Int(2)).sqrt(), Error);
}

TEST_CASE("polynomial parser round-trips the canonical text form") {
  const RawPoly p = P(3, "x0^3 - 1/2*x1 x2 + 3");
  CHECK(to_string(p) == "3 + -1/2 * x1^1 x2^1 + 1 * x0^3");
  CHECK(P(3, to_string(p).c_str()) == p);
  CHECK(to_string(RawPoly(3)) == "0");
  CHECK_THROWS_AS(P(3, "x3"), Error);
  CHECK_THROWS_AS(P(3, "x1/x2"), Error);
  CHECK_THROWS_AS(P(3, "(x1"), Error);
  CHECK(P(3, "(x1+x2)^2") == P(3, "x1^2 + 2*x1*x2 + x2^2"));
  CHECK(P(3, "0.5x1") == P(3, "1/2*x1"));
}

TEST_CASE("reduce: examples") {
  CHECK(S(4, "x0^2 + x1^2 + x2^2 + x3^2") == SpherePoly::constant(3, Rat(1)));
  CHECK(S(3, "x1").rep() == P(3, "x1"));
  CHECK(S(3, "x0^3").rep() == P(3, "x0 - x0 x1^2 - x0 x2^2"));
  CHECK(arith(S(3, "x0"), S(3, "x0"), ArithOp::Mul) == S(3, "1 - x1^2 - x2^2"));
  CHECK(arith(S(3, "x1"), SpherePoly(2), ArithOp::Add) == S(3, "x1"));
  CHECK(arith(S(3, "x1"), S(3, "x2"), ArithOp::Mul).rep() == P(3, "x1 x2"));
  CHECK(arith(S(3, "x1"), S(3, "x2"), ArithOp::Scale, Rat(2)).rep() == P(3, "2 x1"));
  CHECK_THROWS_AS(arith(S(3, "x1"), S(4, "x1"), ArithOp::Add), Error);
  CHECK_THROWS_AS(SpherePoly(1), Error);
}

TEST_CASE("reduce: x0^3 agrees with its reduction at rational sphere points") {
  testgen::Gen g(11);
  const RawPoly raw = P(3, "x0^3");
  const RawPoly red = reduce(raw);
  for (int k = 0; k < 20; ++k) {
    const auto pt = g.sphere_point(3);
    CHECK(raw.evaluate(pt) == red.evaluate(pt));
  }
}

TEST_CASE("reduce: idempotent and kills the ideal") {
  testgen::Gen g(2024);
  for (int n = 2; n <= 5; ++n) {
    const int nv = n + 1;
    for (int k = 0; k < 200; ++k) {
      const RawPoly p = g.poly(nv, 6);
      const RawPoly r = reduce(p);
      REQUIRE(is_normal_form(r));
      REQUIRE(reduce(r) == r);
      const auto pt = g.sphere_point(nv);
      REQUIRE(p.evaluate(pt) == r.evaluate(pt));
    }
    const RawPoly ideal = radius_squared(nv) - RawPoly::constant(nv, Rat(1));
    for (int k = 0; k < 100; ++k) REQUIRE(reduce(ideal * g.poly(nv, 5)).is_zero());
    for (int k = 0; k < 50; ++k) {
      const RawPoly p = g.poly(nv, 5);
      REQUIRE(reduce(p + ideal * g.poly(nv, 4)) == reduce(p));
    }
  }
}

TEST_CASE("ring axioms on the sphere") {
  testgen::Gen g(7);
  for (int k = 0; k < 40; ++k) {
    const SpherePoly a(g.poly(4, 4)), b(g.poly(4, 4)), c(g.poly(4, 3));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == SpherePoly(3));
  }
}

TEST_CASE("euler and ambient laplacian") {
  CHECK(euler(P(3, "x1")) == P(3, "x1"));
  CHECK(euler(P(3, "x1 x2^2")) == P(3, "3 x1 x2^2"));
  CHECK(euler(P(3, "1")).is_zero());
  CHECK(ambient_laplacian(P(3, "x1^2")) == P(3, "-2"));
  CHECK(ambient_laplacian(P(3, "x1 x2")).is_zero());
  CHECK(ambient_laplacian(P(3, "x1^3")) == P(3, "-6 x1"));
}

TEST_CASE("harmonic decomposition: examples") {
  const auto d = harmonic_decompose(S(3, "x1^2"));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].degree == 0);
  CHECK(d.parts[0].h == P(3, "1/3"));
  CHECK(d.parts[1].degree == 2);
  CHECK(d.parts[1].h == P(3, "x1^2 - 1/3*(x0^2+x1^2+x2^2)"));
  const auto lin = harmonic_decompose(S(3, "x1"));
  REQUIRE(lin.parts.size() == 1);
  CHECK(lin.parts[0].h == P(3, "x1"));
  const auto one = harmonic_decompose(S(3, "1"));
  REQUIRE(one.parts.size() == 1);
  CHECK(one.parts[0].degree == 0);
  CHECK(harmonic_decompose(SpherePoly(2)).parts.empty());
}

TEST_CASE("harmonic decomposition: round trip and harmonicity") {
  testgen::Gen g(99);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 30; ++k) {
      const SpherePoly p(g.poly(n + 1, 6));
      const auto d = harmonic_decompose(p);
      REQUIRE(d.reassemble() == p);
      int last = -1;
      for (const auto& part : d.parts) {
        REQUIRE(part.degree > last);
        last = part.degree;
        REQUIRE(ambient_laplacian(part.h).is_zero());
        for (const auto& [m, c] : part.h.terms()) REQUIRE(m.degree() == part.degree);
      }
    }
}

TEST_CASE("homogeneous lift") {
  const RawPoly lift = homogeneous_lift(S(3, "x1^2 + 1"), 2);
  CHECK(lift == P(3, "x0^2 + 2 x1^2 + x2^2"));
  CHECK_THROWS_AS(homogeneous_lift(S(3, "x1 + 1"), 2), Error);
}

TEST_CASE("moments") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i <= n; ++i) {
      Monomial m;
      m.set(i, 2);
      CHECK(moment_integral(n, m) == make_rat(1, n + 1));
    }
  Monomial x04;
  x04.set(0, 4);
  CHECK(moment_integral(2, x04) == make_rat(1, 5));
  CHECK(moment_integral(2, Monomial::unit(0) * Monomial::unit(1)) == 0);
  CHECK(integrate(S(3, "1")) == 1);
  CHECK(integrate(S(3, "x1")) == 0);
  CHECK(integrate(S(3, "x0^2 + x1^2 + x2^2")) == 1);
  // integrating the reduced form agrees with integrating the raw representative
  Monomial m;
  m.set(0, 2);
  m.set(1, 2);
  CHECK(integrate(SpherePoly(RawPoly::monomial(3, m))) == moment_integral(2, m));
}

TEST_CASE("integrals respect the normal form") {
  testgen::Gen g(5);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 40; ++k) {
      const RawPoly p = g.poly(n + 1, 6);
      Rat raw = 0;
      for (const auto& [m, c] : p.terms()) raw += c * moment_integral(n, m);
      REQUIRE(integrate(SpherePoly(p)) == raw);
    }
}

TEST_CASE("L2 pairing is positive definite") {
  testgen::Gen g(17);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 60; ++k) {
      const SpherePoly p(g.poly(n + 1, 5));
      if (p.is_zero()) continue;
      REQUIRE(sgn(integrate(p * p)) > 0);
    }
}

TEST_CASE("harmonic dimension: closed form matches Fischer rank") {
  for (int n = 2; n <= 5; ++n)
    for (int j = 0; j <= 6; ++j) CHECK(harmonic_dimension(n, j) == harmonic_dimension_by_rank(n, j));
  CHECK(harmonic_dimension(2, 3) == 7);
  CHECK(harmonic_dimension(3, 2) == 9);
}

TEST_CASE("exact linear algebra") {
  DenseMatrix<Rat> a(3, 3);
  int v = 1;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = v++;
  CHECK(rank(a) == 2);
  const auto ker = kernel(a);
  REQUIRE(ker.size() == 1);
  for (auto x : mat_vec(a, ker[0])) CHECK(x == 0);
  a(2, 2) = 10;
  const std::vector<Rat> b{Rat(1), Rat(2), Rat(3)};
  const auto x = solve(a, b);
  CHECK(mat_vec(a, x) == b);

  SpanBuilder<int, Rat> span;
  CHECK(span.insert({{0, Rat(1)}, {1, Rat(1)}}));
  CHECK(span.insert({{1, Rat(1)}}));
  CHECK_FALSE(span.insert({{0, Rat(3)}, {1, Rat(-2)}}));
  CHECK(span.rank() == 2);
  CHECK(span.coordinates({{0, Rat(2)}}).has_value());
  CHECK_FALSE(span.coordinates({{2, Rat(1)}}).has_value());
}
