#include <doctest.h>

#include "generators.hpp"
#include "speclab/clifford.hpp"

#include <Eigen/Dense>

using namespace speclab;

namespace {

using CMatrix = DenseMatrix<CRat>;
using CPoly = Poly<CRat>;

Rat q(long a, long b = 1) { return make_rat(a, b); }

SpinorPoly x_times(int n, int i, int a) {
  return SpinorPoly::scalar_times(CSpherePoly::coordinate(n, i), a);
}

/// Random spinor with small Gaussian-integer coefficients up to the given degree.
SpinorPoly random_spinor(testgen::Gen& g, int n, int deg) {
  SpinorPoly s(n);
  const int d = spin_dimension(n);
  for (int t = 0; t < 3; ++t) {
    const RawPoly p = g.poly(n + 1, deg, 3);
    const CPoly cp = p.map_coefficients<CRat>([&](const Rat& c) { return CRat(c, Rat(g.integer(-2, 2))); });
    s += SpinorPoly::scalar_times(CSpherePoly(cp), g.integer(0, d - 1));
  }
  return s;
}

/// Ambient homogeneous monogenics of degree k: kernel of Σ e_i ∂_i on spinor polynomials of
/// degree k, computed on raw representatives without any reduction.
std::vector<std::vector<CPoly>> monogenics(int n, int k) {
  const auto& g = gamma_algebra(n);
  const int d = g.dim_spin;
  const auto monos = monomials_of_degree(n + 1, k);
  const auto lower = k > 0 ? monomials_of_degree(n + 1, k - 1) : std::vector<Monomial>{};
  const std::size_t cols = monos.size() * d;
  CMatrix m(std::max<std::size_t>(lower.size() * d, 1), cols);
  for (std::size_t c = 0; c < monos.size(); ++c)
    for (int b = 0; b < d; ++b)
      for (int i = 0; i <= n; ++i) {
        const int e = monos[c][i];
        if (e == 0) continue;
        Monomial dm = monos[c];
        dm.set(i, e - 1);
        const std::size_t row = std::find(lower.begin(), lower.end(), dm) - lower.begin();
        for (int a = 0; a < d; ++a) m(row * d + a, c * d + b) += g.e[i](a, b) * CRat(e);
      }
  std::vector<std::vector<CPoly>> out;
  for (const auto& v : kernel(m)) {
    std::vector<CPoly> f(d, CPoly(n + 1));
    for (std::size_t c = 0; c < monos.size(); ++c)
      for (int b = 0; b < d; ++b) f[b].add_term(monos[c], v[c * d + b]);
    out.push_back(std::move(f));
  }
  return out;
}

SpinorPoly to_spinor(const std::vector<CPoly>& raw) {
  std::vector<CSpherePoly> comps;
  for (const auto& p : raw) comps.emplace_back(p);
  return SpinorPoly(std::move(comps));
}

const IdentityResult* find(const VerificationReport& r, const std::string& id) {
  for (const auto& x : r.results)
    if (x.identity_id == id) return &x;
  return nullptr;
}

}  // namespace

TEST_CASE("gamma algebra") {
  for (int n = 2; n <= 6; ++n) {
    const auto g = gamma_build(n);
    CHECK(g.dim_spin == (1 << ((n + 1) / 2)));
    CHECK(g.e.size() == static_cast<std::size_t>(n + 1));
    CHECK(gamma_relations_hold(g));
    for (const auto& e : g.e) {
      CRat tr(0);
      for (int a = 0; a < g.dim_spin; ++a) tr += e(a, a);
      if (n <= 5) CHECK(tr.is_zero());
    }
  }
  const auto g2 = gamma_build(2);
  for (const auto& e : g2.e) CHECK(e * e == CMatrix::identity(2) * CRat(-1));
  const auto g3 = gamma_build(3);
  CHECK(g3.dim_spin == 4);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      if (i != j) CHECK((g3.e[i] * g3.e[j] + g3.e[j] * g3.e[i]).is_zero());
  // a broken generator set is rejected
  auto bad = gamma_build(3);
  bad.e[1] = bad.e[0];
  CHECK_FALSE(gamma_relations_hold(bad));
}

TEST_CASE("gamma operator examples") {
  for (int n = 2; n <= 4; ++n) CHECK(gamma_op(SpinorPoly::constant(n, 0)).is_zero());
  const SpinorPoly psi0 = SpinorPoly::constant(2, 0);
  const SpinorPoly xp = clifford_x(psi0);
  CHECK(gamma_op(xp) == xp * CRat(2));
  // x0 − e0 e1 x1 applied to ψ0 is a linear monogenic
  const auto& g = gamma_algebra(2);
  const SpinorPoly f = x_times(2, 0, 0) - SpinorPoly::scalar_times(CSpherePoly::coordinate(2, 1), 0).act(g.e[0] * g.e[1]);
  CHECK(gamma_op(f) == f * CRat(-1));
}

TEST_CASE("gamma operator on monogenics from the Euclidean Dirac kernel") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      const auto ms = monogenics(n, k);
      CHECK(ms.size() == dirac_multiplicity(n, k));
      for (const auto& raw : ms) {
        const SpinorPoly m = to_spinor(raw);
        CHECK(gamma_op(m) == m * CRat(-k));
        const SpinorPoly xm = clifford_x(m);
        CHECK(gamma_op(xm) == xm * CRat(k + n));
        // P swaps m and x m with eigenvalues ±(n/2+k)
        CHECK(dirac_apply(m) == xm * CRat(-(make_rat(n, 2) + k)));
        CHECK(dirac_apply(xm) == m * CRat(-(make_rat(n, 2) + k)));
      }
    }
}

TEST_CASE("Dirac operator foothold") {
  for (int n = 2; n <= 5; ++n)
    for (int a = 0; a < spin_dimension(n); ++a) {
      const SpinorPoly psi0 = SpinorPoly::constant(n, a);
      const SpinorPoly xp = clifford_x(psi0);
      const CRat m(make_rat(n, 2));
      CHECK(dirac_apply(psi0) == xp * (-m));
      CHECK(dirac_apply(xp) == psi0 * (-m));
      CHECK(dirac_apply(foothold(n, a, 1)) == foothold(n, a, 1) * (-m));
      CHECK(dirac_apply(foothold(n, a, -1)) == foothold(n, a, -1) * m);
      CHECK(dirac_apply(dirac_apply(psi0)) == psi0 * (m * m));
    }
}

TEST_CASE("y and U identities on random spinors") {
  testgen::Gen g(2024);
  for (int n = 2; n <= 3; ++n) {
    SpinorPoly acc(n);
    const SpinorPoly psi0 = SpinorPoly::constant(n, 0);
    for (int i = 0; i <= n; ++i) acc += y_apply(i, y_apply(i, psi0));
    CHECK(acc == psi0 * CRat(-n));
    for (int t = 0; t < 20; ++t) {
      const SpinorPoly psi = random_spinor(g, n, 2);
      SpinorPoly xy(n), u2(n);
      for (int i = 0; i <= n; ++i) {
        xy += y_apply(i, psi).times_coordinate(i);
        if (t < 4) u2 += U_spin(i, U_spin(i, psi));
      }
      CHECK(xy.is_zero());
      if (t < 4) CHECK((u2 + dirac_apply(dirac_apply(psi)) + psi * CRat(make_rat(n, 4))).is_zero());
    }
  }
}

TEST_CASE("spinor ladders") {
  const int n = 2;
  const SpinorPoly psi = foothold(n, 0, 1);
  const Rat l = -1;
  bool someS = false;
  SpinorPoly sa(n), as(n), nn(n);
  for (int i = 0; i <= n; ++i) {
    const auto lad = spinor_ladders(i, psi, l);
    CHECK(lad.A.is_zero());
    CHECK(is_eigenspinor(lad.S, Rat(-2), SpinorModel{n}));
    CHECK(is_eigenspinor(lad.N, Rat(1), SpinorModel{n}));
    someS = someS || !lad.S.is_zero();
  }
  CHECK(someS);
  CHECK_THROWS_AS(spinor_ladders(0, SpinorPoly::constant(n, 0), l), Error);
}

TEST_CASE("truncation spaces and spectra") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 0; N <= 2; ++N) {
      const TruncationSpace space(n, N);
      std::size_t expected = 0;
      for (int j = 0; j <= N; ++j) expected += 2 * dirac_multiplicity(n, j);
      CHECK(space.size() == expected);
    }
  const auto s20 = truncation_spectrum(truncation_matrices(2, 0));
  REQUIRE(s20.entries.size() == 2);
  CHECK(s20.entries[0].eigenvalue == 1);
  CHECK(s20.entries[0].multiplicity == 2);
  CHECK(s20.entries[1].eigenvalue == -1);
  CHECK(s20.entries[1].multiplicity == 2);
  CHECK(s20.complete());

  const auto s21 = truncation_spectrum(truncation_matrices(2, 1));
  REQUIRE(s21.entries.size() == 4);
  const std::vector<std::pair<Rat, std::size_t>> want{{q(1), 2}, {q(-1), 2}, {q(2), 4}, {q(-2), 4}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(s21.entries[k].eigenvalue == want[k].first);
    CHECK(s21.entries[k].multiplicity == want[k].second);
    CHECK(s21.entries[k].certified);
  }
  CHECK(s21.to_csv() == "eigenvalue,multiplicity,certified\n1,2,true\n-1,2,true\n2,4,true\n-2,4,true\n");

  const auto s31 = truncation_spectrum(truncation_matrices(3, 1));
  REQUIRE(s31.entries.size() == 4);
  CHECK(s31.entries[0].eigenvalue == q(3, 2));
  CHECK(s31.entries[2].eigenvalue == q(5, 2));
  CHECK(s31.all_on_lattice());
  CHECK(s31.complete());
  for (int n = 2; n <= 3; ++n)
    for (int N = 0; N <= 2; ++N) {
      const auto s = truncation_spectrum(truncation_matrices(n, N));
      CHECK(s.all_on_lattice());
      CHECK(s.complete());
      for (const auto& e : s.entries) CHECK(e.eigenvalue * e.eigenvalue >= q(n * (n - 1), 4));
    }
  // a perturbed operator leaves the lattice
  const SpinorModel off{2, q(1, 3)};
  CHECK_FALSE(truncation_spectrum(truncation_matrices(2, 1, &off)).all_on_lattice());
}

TEST_CASE("truncation matrices satisfy the covariance relation as matrices") {
  for (int n = 2; n <= 3; ++n) {
    const auto t = truncation_matrices(n, 1);
    const CRat h(make_rat(1, 2));
    for (int i = 0; i <= n; ++i) {
      CHECK(t.P_range * (t.U[i] - t.X[i] * h) == (t.U[i] + t.X[i] * h) * t.P);
      CHECK(t.Y[i] == t.P_range * t.X[i] - t.X[i] * t.P);
    }
    CHECK(t.P_range * t.inclusion == t.inclusion * t.P);
  }
  const auto t = truncation_matrices(2, 0);
  const std::string js = t.to_json();
  CHECK(js.find("\"dim_spin\": 2") != std::string::npos);
  CHECK(js.find(" i\"") != std::string::npos);
}

TEST_CASE("eigenspinor bases") {
  for (int n = 2; n <= 3; ++n)
    for (int j = 0; j <= 1; ++j)
      for (int sign : {1, -1}) {
        const Rat l = Rat(sign) * (make_rat(n, 2) + j);
        const auto b = eigenspinor_basis(n, 1, l);
        CHECK(b.size() == dirac_multiplicity(n, j));
        for (const auto& psi : b) CHECK(is_eigenspinor(psi, l, SpinorModel{n}));
      }
  CHECK(eigenspinor_basis(2, 1, q(3, 2)).empty());
}

TEST_CASE("spontaneous Dirac spectrum") {
  const auto s = generate_dirac_spectrum(2, 3);
  const std::vector<Rat> want{q(1), q(-1), q(2), q(-2), q(3), q(-3)};
  CHECK(s == want);
  const auto s3 = generate_dirac_spectrum(3, 2);
  CHECK(s3 == std::vector<Rat>{q(3, 2), q(-3, 2), q(5, 2), q(-5, 2)});
  CHECK(dirac_multiplicity(2, 1) == 4);
  CHECK(dirac_multiplicity(3, 2) == 24);
}

TEST_CASE("cubic refutation") {
  auto c = dirac_refute(2, q(3, 2));
  CHECK(c.values == std::vector<Rat>{q(3, 2), q(1, 2)});
  c = dirac_refute(3, q(2));
  CHECK(c.values == std::vector<Rat>{q(2), q(1)});
  c = dirac_refute(2, q(-7, 3));
  CHECK(c.values == std::vector<Rat>{q(-7, 3), q(7, 3), q(4, 3), q(1, 3)});
  CHECK(c.branches.front() == "-lambda");
  CHECK_THROWS_AS(dirac_refute(2, q(-2)), Error);
  CHECK_THROWS_AS(dirac_refute(3, q(1, 2)), Error);
  testgen::Gen g(99);
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < 25; ++t) {
      Rat cand = g.rational(40, 7);
      const Rat j = abs(cand) - make_rat(n, 2);
      if ((is_integer(j) && sgn(j) >= 0) || cand * cand < make_rat(n * (n - 1), 4)) continue;
      const auto chain = dirac_refute(n, cand);
      CHECK(chain.values.back() * chain.values.back() < chain.bound);
      CHECK(chain.steps() <= static_cast<std::size_t>(to_double(abs(cand))) + 2);
    }
}

TEST_CASE("spinor identity suite passes and detects a corrupted operator") {
  const auto r = verify_spinor_identities(2, 2, {2, nullptr});
  for (const auto& x : r.results) {
    INFO(x.identity_id << ": " << x.counterexample);
    CHECK(x.pass);
  }
  CHECK(r.results.size() >= 25);
  const SpinorModel off{2, q(1)};
  const auto bad = verify_spinor_identities(2, 1, {1, &off});
  CHECK_FALSE(bad.all_pass());
  REQUIRE(find(bad, "conformal_covariance") != nullptr);
  CHECK_FALSE(find(bad, "conformal_covariance")->pass);
  CHECK_FALSE(find(bad, "truncation_spectrum")->pass);
}

TEST_CASE("spinor identity suite, n = 3") {
  const auto r = verify_spinor_identities(3, 2, {2, nullptr});
  for (const auto& x : r.results) {
    INFO(x.identity_id << ": " << x.counterexample);
    CHECK(x.pass);
  }
}
