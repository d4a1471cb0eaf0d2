#include "speclab/scalar_ops.hpp"

#include "speclab/harmonic.hpp"
#include "speclab/linalg.hpp"
#include "speclab/parallel.hpp"

#include <functional>

namespace speclab {

namespace {

void check_index(int i, const SpherePoly& p) {
  if (i < 0 || i > p.dim())
    throw Error(Error::Kind::IndexOutOfRange, "coordinate index " + std::to_string(i) + " outside 0.." +
                                                  std::to_string(p.dim()));
}

SpherePoly apply_ladder(int i, const SpherePoly& phi, const Rat& c) { return U(i, phi) + phi.times_coordinate(i) * c; }

Rat plus_coefficient(const Rat& nu) { return (nu - 1) / 2; }
Rat minus_coefficient(const Rat& nu) { return -(nu + 1) / 2; }

Rat require_nu(const Rat& lambda) {
  const auto nu = nu_of(lambda);
  if (!nu) throw Error(Error::Kind::NotInField, "sqrt(4*lambda+1) is irrational for lambda = " + to_string(lambda));
  return *nu;
}

void require_eigen(const SpherePoly& phi, const Rat& lambda) {
  if (!is_eigenfunction(phi, lambda))
    throw Error(Error::Kind::NotEigenfunction, "input is not in E(" + to_string(lambda) + ", D)");
}

std::optional<Rat> ratio_to(const SpherePoly& image, const SpherePoly& phi) {
  if (phi.is_zero()) return std::nullopt;
  const auto& lead = *phi.rep().terms().rbegin();
  const Rat q = image.rep().coefficient(lead.first) / lead.second;
  if (!(image == phi * q)) return std::nullopt;
  return q;
}

}  // namespace

SpherePoly T(int i, const SpherePoly& p) {
  check_index(i, p);
  const RawPoly& rep = p.rep();
  return SpherePoly(euler(rep).times_variable(i) - rep.derivative(i));
}

SpherePoly ScalarModel::U(int i, const SpherePoly& p) const {
  return T(i, p) + p.times_coordinate(i) * (make_rat(n, 2) + weight_offset);
}

SpherePoly ScalarModel::D(const SpherePoly& p) const { return laplacian(p) + p * (conformal_shift(n) + curvature_offset); }

SpherePoly U(int i, const SpherePoly& p) { return ScalarModel{p.dim()}.U(i, p); }

SpherePoly laplacian(const SpherePoly& p) {
  SpherePoly acc(p.dim());
  for (int i = 0; i <= p.dim(); ++i) acc -= T(i, T(i, p));
  return acc;
}

SpherePoly laplacian_homogeneous(const SpherePoly& p) {
  const int n = p.dim();
  SpherePoly acc(n);
  const int top = p.rep().degree();
  for (int d = 0; d <= top; ++d) {
    const RawPoly part = p.rep().homogeneous_part(d);
    if (part.is_zero()) continue;
    acc += SpherePoly(ambient_laplacian(part) + part * Rat(d * (d + n - 1)));
  }
  return acc;
}

SpherePoly conformal_D(const SpherePoly& p) { return ScalarModel{p.dim()}.D(p); }

Rat conformal_shift(int n) { return make_rat(n * (n - 2), 4); }

Rat scalar_eigenvalue(int n, int j) { return make_rat(n - 2 + 2 * j, 2) * make_rat(n + 2 * j, 2); }

Rat laplacian_eigenvalue(int n, int j) { return Rat(j * (n - 1 + j)); }

QuadSurd lambda_step(const QuadSurd& lambda, StepDirection dir) {
  const QuadSurd disc = QuadSurd(Rat(4)) * lambda + QuadSurd(Rat(1));
  if (disc.sign() < 0)
    throw Error(Error::Kind::NegativeDiscriminant, "4*lambda+1 < 0 for lambda = " + lambda.to_string());
  const QuadSurd nu = disc.sqrt();
  const QuadSurd base = lambda + QuadSurd(Rat(1));
  return dir == StepDirection::Plus ? base + nu : base - nu;
}

std::vector<ScalarEigenpair> generate_spectrum(int n, int count) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  if (count < 1) throw Error(Error::Kind::InvalidArgument, "count must be at least 1");
  std::vector<ScalarEigenpair> out;
  QuadSurd lambda(conformal_shift(n));
  for (int j = 0; j < count; ++j) {
    const auto q = lambda.as_rational();
    if (!q) throw Error(Error::Kind::Internal, "spectrum iteration left the rationals");
    out.push_back(ScalarEigenpair{*q, j, {}});
    lambda = lambda_step(lambda, StepDirection::Plus);
  }
  return out;
}

bool is_eigenfunction(const SpherePoly& phi, const Rat& lambda) { return conformal_D(phi) == phi * lambda; }

std::optional<Rat> nu_of(const Rat& lambda) { return rational_sqrt(4 * lambda + 1); }

SpherePoly ladder_plus(int i, const SpherePoly& phi, const Rat& lambda) {
  check_index(i, phi);
  const Rat nu = require_nu(lambda);
  require_eigen(phi, lambda);
  return apply_ladder(i, phi, plus_coefficient(nu));
}

SpherePoly ladder_minus(int i, const SpherePoly& phi, const Rat& lambda) {
  check_index(i, phi);
  const Rat nu = require_nu(lambda);
  require_eigen(phi, lambda);
  return apply_ladder(i, phi, minus_coefficient(nu));
}

LadderSums ladder_sums(const SpherePoly& phi, const Rat& lambda) {
  const Rat nu = require_nu(lambda);
  require_eigen(phi, lambda);
  const int n = phi.dim();
  SpherePoly mp(n), pm(n);
  for (int i = 0; i <= n; ++i) {
    // the second factor acts on the neighbouring level: ν+2 above, the formal ν−2 below
    mp += apply_ladder(i, apply_ladder(i, phi, plus_coefficient(nu)), minus_coefficient(nu + 2));
    pm += apply_ladder(i, apply_ladder(i, phi, minus_coefficient(nu)), plus_coefficient(nu - 2));
  }
  LadderSums out;
  out.mp = -(nu + n - 1) * (nu + 2) / 2;
  out.pm = -(nu - n + 1) * (nu - 2) / 2;
  out.mp_measured = ratio_to(mp, phi);
  out.pm_measured = ratio_to(pm, phi);
  return out;
}

ScalarEigenpair build_eigenspace(int n, int j, std::size_t max_funcs) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  if (j < 0) throw Error(Error::Kind::InvalidArgument, "level must be nonnegative");
  std::vector<SpherePoly> level{SpherePoly::constant(n, Rat(1))};
  for (int k = 0; k < j; ++k) {
    const Rat c = plus_coefficient(Rat(n - 1 + 2 * k));
    const std::size_t target = harmonic_dimension(n, k + 1);
    SpanBuilder<Monomial, Rat, MonomialOrder> span;
    std::vector<SpherePoly> next;
    for (const auto& phi : level) {
      for (int i = 0; i <= n && span.rank() < target; ++i) {
        SpherePoly v = apply_ladder(i, phi, c);
        if (span.insert(v.rep().terms())) next.push_back(std::move(v));
      }
      if (span.rank() == target) break;
    }
    if (span.rank() != target)
      throw Error(Error::Kind::Internal, "ladder images do not fill E_" + std::to_string(k + 1));
    level = std::move(next);
  }
  if (max_funcs != 0 && level.size() > max_funcs) level.resize(max_funcs);
  return ScalarEigenpair{scalar_eigenvalue(n, j), j, std::move(level)};
}

std::optional<int> spectrum_level(int n, const Rat& value) {
  const auto nu = nu_of(value);
  if (!nu || !is_integer(*nu)) return std::nullopt;
  const Int twice_j = nu->get_num() - (n - 1);
  if (twice_j < 0 || twice_j % 2 != 0) return std::nullopt;
  return static_cast<int>(Int(twice_j / 2).get_si());
}

RefutationChain refute_candidate(int n, const Rat& candidate) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  RefutationChain chain;
  chain.n = n;
  chain.start = candidate;
  chain.violated_bound = conformal_shift(n);
  if (candidate < chain.violated_bound)
    throw Error(Error::Kind::BelowBound, "candidate " + to_string(candidate) + " is already below n(n-2)/4 = " +
                                            to_string(chain.violated_bound));
  if (const auto j = spectrum_level(n, candidate))
    throw Error(Error::Kind::OnSpectrum, "on spectrum, j=" + std::to_string(*j));
  const QuadSurd bound(chain.violated_bound);
  QuadSurd cur(candidate);
  chain.values.push_back(cur);
  while (cur >= bound) {
    cur = lambda_step(cur, StepDirection::Minus);
    chain.values.push_back(cur);
  }
  return chain;
}

// ---------------------------------------------------------------------------------------------

namespace {

/// Residual of an identity on one input: zero polynomials mean the identity holds.
using Residuals = std::vector<SpherePoly>;
using IdentityFn = std::function<Residuals(const SpherePoly&)>;

struct SweepSpec {
  std::string id;
  std::string formula;
  IdentityFn fn;
};

IdentityResult sweep(const SweepSpec& spec, int n, int cap, const std::vector<SpherePoly>& inputs, int jobs) {
  std::vector<std::string> failure(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t k) {
    const Residuals res = spec.fn(inputs[k]);
    for (std::size_t r = 0; r < res.size(); ++r)
      if (!res[r].is_zero()) {
        failure[k] = "input " + to_string(inputs[k]) + ", component " + std::to_string(r) + ", residual " +
                     to_string(res[r]);
        return;
      }
  });
  IdentityResult out{spec.id, spec.formula, n, cap, true, inputs.size(), {}};
  for (const auto& f : failure)
    if (!f.empty()) {
      out.pass = false;
      out.counterexample = f;
      break;
    }
  return out;
}

IdentityResult check(std::string id, std::string formula, int n, int cap, std::size_t cases, std::string failure) {
  return IdentityResult{std::move(id), std::move(formula), n, cap, failure.empty(), cases, std::move(failure)};
}

}  // namespace

VerificationReport verify_scalar_identities(int n, int cap, const ScalarVerifyOptions& opts) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  if (cap < 2) throw Error(Error::Kind::InvalidArgument, "degree cap must be at least 2");
  const ScalarModel model = opts.model ? *opts.model : ScalarModel{n};
  if (model.n != n) throw Error(Error::Kind::DimensionMismatch, "operator model has a different n");

  std::vector<SpherePoly> basis;
  for (const auto& m : sphere_basis_monomials(n, cap)) basis.emplace_back(RawPoly::monomial(n + 1, m));

  auto sum_U2 = [&](const SpherePoly& p) {
    SpherePoly acc(n);
    for (int i = 0; i <= n; ++i) acc += model.U(i, model.U(i, p));
    return acc;
  };

  std::vector<SweepSpec> sweeps;
  sweeps.push_back({"laplacian_two_routes", "-sum_i T_i^2 p = sum_d [Lap_amb p_d + d(d+n-1) p_d]",
                    [&](const SpherePoly& p) { return Residuals{laplacian(p) - laplacian_homogeneous(p)}; }});
  sweeps.push_back({"spectrum_generating_commutator", "[D, x_i] = 2 U_i", [&](const SpherePoly& p) {
                      Residuals r;
                      const SpherePoly dp = model.D(p);
                      for (int i = 0; i <= n; ++i)
                        r.push_back(model.D(p.times_coordinate(i)) - dp.times_coordinate(i) - model.U(i, p) * Rat(2));
                      return r;
                    }});
  sweeps.push_back({"conformal_covariance", "D (U_i - x_i) = (U_i + x_i) D", [&](const SpherePoly& p) {
                      Residuals r;
                      const SpherePoly dp = model.D(p);
                      for (int i = 0; i <= n; ++i)
                        r.push_back(model.D(model.U(i, p) - p.times_coordinate(i)) -
                                    (model.U(i, dp) + dp.times_coordinate(i)));
                      return r;
                    }});
  sweeps.push_back({"anticommutator_sum", "sum_i (x_i U_i + U_i x_i) = 0", [&](const SpherePoly& p) {
                      SpherePoly acc(n);
                      for (int i = 0; i <= n; ++i) acc += model.U(i, p).times_coordinate(i) + model.U(i, p.times_coordinate(i));
                      return Residuals{acc};
                    }});
  sweeps.push_back({"commutator_sum", "sum_i [U_i, x_i] = -n", [&](const SpherePoly& p) {
                      SpherePoly acc = p * Rat(n);
                      for (int i = 0; i <= n; ++i) acc += model.U(i, p.times_coordinate(i)) - model.U(i, p).times_coordinate(i);
                      return Residuals{acc};
                    }});
  sweeps.push_back({"sum_U_squared", "sum_i U_i^2 = -D - n/2", [&](const SpherePoly& p) {
                      return Residuals{sum_U2(p) + model.D(p) + p * make_rat(n, 2)};
                    }});
  for (const Rat& a : {Rat(0), Rat(1), Rat(-1), make_rat(3, 2), make_rat(-3, 2)}) {
    sweeps.push_back({"shifted_square_sum[a=" + to_string(a) + "]", "sum_i (U_i + a x_i)^2 = a^2 + sum_i U_i^2",
                      [&, a](const SpherePoly& p) {
                        SpherePoly acc(n);
                        for (int i = 0; i <= n; ++i) {
                          const SpherePoly once = model.U(i, p) + p.times_coordinate(i) * a;
                          acc += model.U(i, once) + once.times_coordinate(i) * a;
                        }
                        return Residuals{acc - p * (a * a) - sum_U2(p)};
                      }});
  }

  VerificationReport report;
  report.suite = "scalar";
  for (const auto& s : sweeps) report.results.push_back(sweep(s, n, cap, basis, opts.jobs));

  // spectrum by iteration against the closed form, and the λ± involution
  {
    std::string failure;
    const auto spec = generate_spectrum(n, cap + 1);
    for (const auto& e : spec)
      if (e.lambda != scalar_eigenvalue(n, e.j) || e.lambda - conformal_shift(n) != laplacian_eigenvalue(n, e.j)) {
        failure = "level " + std::to_string(e.j) + ": iterated " + to_string(e.lambda);
        break;
      }
    report.results.push_back(check("spectrum_iteration", "lambda_{j+1} = lambda_j^+ from n(n-2)/4 equals ((n-2)/2+j)(n/2+j)",
                                   n, cap, spec.size(), failure));
  }
  {
    std::string failure;
    std::size_t cases = 0;
    for (int j = 0; j <= cap && failure.empty(); ++j) {
      const QuadSurd l(scalar_eigenvalue(n, j));
      ++cases;
      if (!(lambda_step(lambda_step(l, StepDirection::Plus), StepDirection::Minus) == l)) failure = "(l+)- at j=" + std::to_string(j);
      // λ⁻ is the lower neighbour only when ν ≥ 2
      if (j >= 1 && !(lambda_step(lambda_step(l, StepDirection::Minus), StepDirection::Plus) == l))
        failure = "(l-)+ at j=" + std::to_string(j);
    }
    for (int k = 1; k <= 6 && failure.empty(); ++k) {
      const QuadSurd l(conformal_shift(n) + make_rat(k, 3));
      ++cases;
      if (!(lambda_step(lambda_step(l, StepDirection::Plus), StepDirection::Minus) == l)) failure = "(l+)- at " + l.to_string();
    }
    report.results.push_back(check("lambda_step_involution", "(lambda^+)^- = lambda = (lambda^-)^+", n, cap, cases, failure));
  }

  // eigenspaces built by ladders, levels whose ladder images stay within the cap
  const int top = cap - 1;
  std::vector<ScalarEigenpair> spaces(static_cast<std::size_t>(top + 1));
  parallel_for(spaces.size(), opts.jobs, [&](std::size_t j) { spaces[j] = build_eigenspace(n, static_cast<int>(j)); });

  std::string dim_fail, eig_fail, lift_fail, target_fail, nonvanish_fail, mp_fail, pm_fail, span_fail;
  std::size_t funcs = 0;
  for (int j = 0; j <= top; ++j) {
    const auto& e = spaces[j];
    const Rat lam = e.lambda;
    const Rat nu(n - 1 + 2 * j);
    if (e.funcs.size() != harmonic_dimension(n, j) && dim_fail.empty())
      dim_fail = "j=" + std::to_string(j) + ": rank " + std::to_string(e.funcs.size());
    for (const auto& phi : e.funcs) {
      ++funcs;
      if (!(model.D(phi) == phi * lam) && eig_fail.empty()) eig_fail = "j=" + std::to_string(j) + ": " + to_string(phi);
      if (!ambient_laplacian(homogeneous_lift(phi, j)).is_zero() && lift_fail.empty())
        lift_fail = "j=" + std::to_string(j) + ": " + to_string(phi);
      bool some_p = false, some_m = false;
      for (int i = 0; i <= n; ++i) {
        const SpherePoly pp = ladder_plus(i, phi, lam);
        const SpherePoly mm = ladder_minus(i, phi, lam);
        some_p = some_p || !pp.is_zero();
        some_m = some_m || !mm.is_zero();
        const bool up_ok = is_eigenfunction(pp, scalar_eigenvalue(n, j + 1));
        const bool down_ok = j == 0 ? mm.is_zero() : is_eigenfunction(mm, scalar_eigenvalue(n, j - 1));
        if ((!up_ok || !down_ok) && target_fail.empty())
          target_fail = "j=" + std::to_string(j) + ", i=" + std::to_string(i) + ": " + to_string(phi);
      }
      if ((!some_p || some_m != (j > 0)) && nonvanish_fail.empty())
        nonvanish_fail = "j=" + std::to_string(j) + ": " + to_string(phi);
      const LadderSums sums = ladder_sums(phi, lam);
      if (sums.mp != -(nu + n - 1) * (nu + 2) / 2 || sums.mp_measured != sums.mp)
        if (mp_fail.empty()) mp_fail = "j=" + std::to_string(j) + ": " + to_string(phi);
      if (sums.pm_measured != sums.pm && pm_fail.empty()) pm_fail = "j=" + std::to_string(j) + ": " + to_string(phi);
    }
    SpanBuilder<Monomial, Rat, MonomialOrder> span;
    for (const auto& phi : e.funcs)
      for (int i = 0; i <= n; ++i) {
        const SpherePoly xp = phi.times_coordinate(i);
        span.insert(xp.rep().terms());
        span.insert(model.D(xp).rep().terms());
      }
    const std::size_t want = (j >= 1 ? harmonic_dimension(n, j - 1) : 0) + harmonic_dimension(n, j + 1);
    if (span.rank() != want && span_fail.empty())
      span_fail = "j=" + std::to_string(j) + ": rank " + std::to_string(span.rank()) + " vs " + std::to_string(want);
  }
  const std::size_t levels = static_cast<std::size_t>(top + 1);
  report.results.push_back(check("eigenspace_dimension", "rank E_j = C(n+j,n) - C(n+j-2,n)", n, cap, levels, dim_fail));
  report.results.push_back(check("eigenfunctions_exact", "D phi = lambda_j phi", n, cap, funcs, eig_fail));
  report.results.push_back(check("harmonic_lift", "Lap_amb (r^j phi(x/r)) = 0", n, cap, funcs, lift_fail));
  report.results.push_back(check("ladder_targets", "P_i E_j in E_{j+1}, M_i E_j in E_{j-1}", n, cap, funcs, target_fail));
  report.results.push_back(check("ladder_nonvanishing", "some P_i phi != 0; some M_i phi != 0 iff j > 0", n, cap, funcs,
                                 nonvanish_fail));
  report.results.push_back(check("ladder_sum_MP", "sum_i M_i P_i = -(nu+n-1)(nu+2)/2", n, cap, funcs, mp_fail));
  report.results.push_back(check("ladder_sum_PM", "sum_i P_i M_i = -(nu-n+1)(nu-2)/2", n, cap, funcs, pm_fail));
  report.results.push_back(check("multiplication_span_rank", "rank span{x_i E_j, D x_i E_j} = dim E_{j-1} + dim E_{j+1}", n,
                                 cap, levels, span_fail));
  return report;
}

}  // namespace speclab
