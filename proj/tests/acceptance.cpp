// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include "speclab/clifford.hpp"
#include "speclab/entropy.hpp"
#include "speclab/harmonic.hpp"
#include "speclab/linalg.hpp"
#include "speclab/scalar_ops.hpp"
#include "speclab/spectral.hpp"

#include "generators.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace speclab;

namespace {

Rat q(long a, long b = 1) { return make_rat(a, b); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why << "; ";
    pass = false;
  }
};

double rel_err(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

/// Matches an id exactly or as the stem of a bracketed family such as "shifted_square_sum[a=1]".
bool id_matches(const std::string& id, const std::string& want) {
  return id == want || (id.size() > want.size() && id.compare(0, want.size(), want) == 0 && id[want.size()] == '[');
}

void require_ids(Outcome& o, const VerificationReport& rep, const std::vector<std::string>& ids, const std::string& where) {
  for (const auto& want : ids) {
    std::size_t seen = 0;
    for (const auto& r : rep.results) {
      if (!id_matches(r.identity_id, want)) continue;
      ++seen;
      if (!r.pass) o.fail(where + " " + r.identity_id + ": " + r.counterexample);
    }
    if (seen == 0) o.fail(where + " missing " + want);
  }
}

int failures = 0;

void run(int id, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && secs >= time_limit) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << time_limit << " s";
    o.fail(s.str());
  }
  std::printf("criterion %2d %s  %-44s %7.2fs  %s\n", id, o.pass ? "PASS" : "FAIL", title, secs, o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

}  // namespace

int main() {
  run(1, "scalar spectrum by lambda+ iteration", 1.0, [](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      const auto spec = generate_spectrum(n, 21);
      if (spec.size() != 21) o.fail("wrong length");
      for (int j = 0; j < static_cast<int>(spec.size()); ++j) {
        const Rat want = (q(n - 2, 2) + j) * (q(n, 2) + j);
        if (spec[j].lambda != want || spec[j].j != j)
          o.fail("n=" + std::to_string(n) + " j=" + std::to_string(j) + " got " + to_string(spec[j].lambda));
      }
    }
    o.detail << "n=2..6, j<=20 exact";
  });

  run(2, "two Laplacian routes agree on monomials", 30.0, [](Outcome& o) {
    std::size_t count = 0;
    for (int n = 2; n <= 5; ++n)
      for (int d = 0; d <= 6; ++d)
        for (const auto& m : monomials_of_degree(n + 1, d)) {
          RawPoly raw(n + 1);
          raw.add_term(m, Rat(1));
          const SpherePoly p(raw);
          if (!(laplacian(p) - laplacian_homogeneous(p)).is_zero()) o.fail("n=" + std::to_string(n) + " " + to_string(p));
          ++count;
        }
    o.detail << count << " monomials, n=2..5, degree<=6";
  });

  run(3, "scalar identity sweep and falsifiability", 0, [](Outcome& o) {
    const std::vector<std::string> ids{"spectrum_generating_commutator", "conformal_covariance", "anticommutator_sum",
                                       "commutator_sum", "shifted_square_sum", "sum_U_squared"};
    for (int n = 2; n <= 5; ++n) {
      const auto rep = verify_scalar_identities(n, 6);
      require_ids(o, rep, ids, "n=" + std::to_string(n));
    }
    ScalarModel bad{3, Rat(1), Rat(0)};
    if (verify_scalar_identities(3, 3, {1, &bad}).all_pass()) o.fail("offset curvature constant passed");
    o.detail << "n=2..5 cap 6; curvature offset 1 rejected";
  });

  run(4, "ladder sum factors through j=4", 0, [](Outcome& o) {
    std::size_t funcs = 0;
    for (int n = 2; n <= 5; ++n)
      for (int j = 0; j <= 4; ++j) {
        const Rat lambda = scalar_eigenvalue(n, j);
        const Rat nu = Rat(n - 1 + 2 * j);
        const Rat mp = -q(1, 2) * (nu + n - 1) * (nu + 2);
        const Rat pm = -q(1, 2) * (nu - n + 1) * (nu - 2);
        for (const auto& phi : build_eigenspace(n, j).funcs) {
          const auto s = ladder_sums(phi, lambda);
          const std::string at = "n=" + std::to_string(n) + " j=" + std::to_string(j);
          if (s.mp != mp || s.pm != pm) o.fail(at + " closed form");
          if (!s.mp_measured || *s.mp_measured != mp) o.fail(at + " measured MP");
          if (!s.pm_measured || *s.pm_measured != pm) o.fail(at + " measured PM");
          if ((sgn(s.pm) == 0) != (j == 0)) o.fail(at + " PM vanishing off the bottom");
          ++funcs;
        }
      }
    for (int n = 2; n <= 4; ++n)
      require_ids(o, verify_scalar_identities(n, 5), {"ladder_sum_MP", "ladder_sum_PM"}, "n=" + std::to_string(n));
    o.detail << funcs << " eigenfunctions, n=2..5";
  });

  run(5, "refutation descends below n(n-2)/4", 0, [](Outcome& o) {
    testgen::Gen g(20261014);
    std::size_t longest = 0;
    for (int n = 2; n <= 6; ++n) {
      int done = 0;
      while (done < 25) {
        const Rat cand = conformal_shift(n) + make_rat(g.integer(0, 4000), g.integer(1, 40));
        if (spectrum_level(n, cand)) continue;
        ++done;
        const auto chain = refute_candidate(n, cand);
        int gap = 0;
        while (scalar_eigenvalue(n, gap) < cand) ++gap;
        if (chain.values.empty() || !(chain.values.back() < QuadSurd(conformal_shift(n))))
          o.fail("n=" + std::to_string(n) + " " + to_string(cand) + " did not cross the bound");
        if (chain.steps() > static_cast<std::size_t>(gap + 1))
          o.fail("n=" + std::to_string(n) + " " + to_string(cand) + " chain too long");
        longest = std::max(longest, chain.steps());
      }
    }
    o.detail << "25 candidates per n=2..6, longest chain " << longest;
  });

  run(6, "eigenfunctions lift to ambient harmonics", 0, [](Outcome& o) {
    for (int n = 2; n <= 5; ++n)
      for (int j = 0; j <= 5; ++j) {
        const auto e = build_eigenspace(n, j);
        std::vector<RawPoly> lifts;
        for (const auto& f : e.funcs) {
          lifts.push_back(homogeneous_lift(f, j));
          if (!ambient_laplacian(lifts.back()).is_zero()) o.fail("not harmonic");
        }
        const std::size_t want = harmonic_dimension(n, j);
        if (want != harmonic_dimension_by_rank(n, j)) o.fail("closed form vs Fischer rank");
        if (poly_rank(lifts) != want || e.funcs.size() != want)
          o.fail("n=" + std::to_string(n) + " j=" + std::to_string(j) + " rank");
      }
    o.detail << "n=2..5, j<=5";
  });

  run(7, "intertwinor recurrence and special families", 0, [](Outcome& o) {
    const std::vector<Rat> grid{q(1, 2), q(-1, 2), q(1), q(-1), q(3, 2), q(2), q(3, 10), q(17, 10)};
    for (int n = 2; n <= 6; ++n) {
      for (const auto& r : grid)
        if (!recurrence_check(n, r, scalar_table(SpectralFamily::ScalarZ, n, r, 12)))
          o.fail("Z n=" + std::to_string(n) + " r=" + to_string(r));
      for (int r = 1; r <= 3; ++r)
        for (int j = 0; j <= 12; ++j) {
          const auto z = scalar_Z(n, Rat(r), j);
          if (!z.exact || *z.exact != diff_product_eigen(n, r, j)) o.fail("diff product n=" + std::to_string(n));
        }
      for (int j0 = 0; j0 <= 3; ++j0) {
        if (!recurrence_check(n, -q(n, 2) - j0, scalar_table(SpectralFamily::ScalarZResidue, n, Rat(j0), 12)))
          o.fail("residue recurrence n=" + std::to_string(n));
        for (int j = j0 + 1; j <= 12; ++j) {
          const auto res = scalar_Z_residue(n, j0, j);
          if (!res.residue_exact || sgn(*res.residue_exact) != 0) o.fail("residue nonzero above j0");
        }
      }
    }
    o.detail << "n=2..6, 8 values of r, jmax 12";
  });

  run(8, "Dirac truncation model identities", 0, [](Outcome& o) {
    const std::vector<std::string> ids{"truncation_spectrum", "conformal_covariance", "ladder_sum_SA", "ladder_sum_AS",
                                       "ladder_sum_NN", "sum_U_y_commutator", "sum_y_squared", "sum_U_squared",
                                       "adjacent_span_rank", "odd_polynomial_intertwinor", "lichnerowicz_bound"};
    for (int n = 2; n <= 3; ++n)
      for (int N = 1; N <= 2; ++N) {
        const auto rep = verify_spinor_identities(n, N);
        require_ids(o, rep, ids, "n=" + std::to_string(n) + " N=" + std::to_string(N));
        const auto spec = truncation_spectrum(truncation_matrices(n, N));
        if (!spec.complete()) o.fail("spectrum incomplete n=" + std::to_string(n) + " N=" + std::to_string(N));
      }
    o.detail << "n=2,3, N=1..2";
  });

  run(9, "Dirac spectral function shift and oddness", 0, [](Outcome& o) {
    for (int n = 2; n <= 6; ++n) {
      for (const Rat& k : {q(1, 4), q(1, 3)})
        for (int j = 0; j <= 6; ++j) {
          const Rat l = q(n, 2) + j;
          const auto a = dirac_alpha(n, k, l);
          const auto a1 = dirac_alpha(n, k, l + 1);
          const auto am = dirac_alpha(n, k, -l);
          if (rel_err(a1.value * to_double(l - k), to_double(l + 1 + k) * a.value) >= 1e-12) o.fail("shift");
          if (rel_err(am.value, -a.value) >= 1e-12) o.fail("oddness");
        }
      for (int j = 0; j <= 6; ++j) {
        const Rat l = q(n, 2) + j;
        const Rat k = q(1, 2);
        if (n % 2 == 0) {
          for (const Rat& s : {l, Rat(-l)}) {
            const auto a = dirac_alpha(n, k, s);
            if (!a.exact || *a.exact != dirac_half_eigen(s)) o.fail("k=1/2 closed form n=" + std::to_string(n));
          }
        } else {
          if (dirac_half_eigen(l + 1) * (l - k) != (l + 1 + k) * dirac_half_eigen(l)) o.fail("odd n shift");
          if (dirac_half_eigen(-l) != -dirac_half_eigen(l)) o.fail("odd n oddness");
        }
      }
    }
    o.detail << "n=2..6, |lambda|=n/2+0..6";
  });

  run(10, "entropy and Beckner battery on S^2", 0, [](Outcome& o) {
    const auto rep = run_entropy_suite();
    std::map<std::string, std::pair<int, int>> tally;  // test -> (passed, total)
    for (const auto& r : rep.records) {
      auto& t = tally[r.test];
      t.second += 1;
      t.first += r.pass ? 1 : 0;
      if (!r.pass) o.fail(r.test + " " + r.f_description);
    }
    for (const char* group : {"lHLS", "lHLS_equality", "lHLS_strict", "beckner", "beckner_equality", "beckner_strict",
                              "spectral_log"})
      if (tally[group].second == 0) o.fail(std::string("no records for ") + group);
    if (entropy_battery().size() != 30) o.fail("battery size");
    for (const char* group : {"lHLS", "lHLS_equality", "lHLS_strict", "beckner", "spectral_log"})
      o.detail << group << " " << tally[group].first << "/" << tally[group].second << " ";
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
