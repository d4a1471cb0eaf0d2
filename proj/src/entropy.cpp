#include "speclab/entropy.hpp"

#include "speclab/harmonic.hpp"
#include "speclab/parallel.hpp"
#include "speclab/spectral.hpp"

#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_legendre.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <sstream>

namespace speclab {

namespace {

constexpr int kDim = 2;

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t k = 0; k < n; ++k) s += v[k];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double weighted_sum(const QuadratureRule& rule, const std::vector<double>& values) {
  if (values.size() != rule.nodes.size()) throw Error(Error::Kind::DimensionMismatch, "sample count does not match the rule");
  std::vector<double> t(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) t[k] = rule.nodes[k].weight * values[k];
  return pairwise_sum(t.data(), t.size());
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void require_positive(const std::vector<double>& v) {
  for (double x : v)
    if (!(x > 0)) throw Error(Error::Kind::InvalidArgument, "function is not positive at a quadrature node");
}

void require_s2(const SpherePoly& p) {
  if (p.dim() != kDim) throw Error(Error::Kind::DimensionMismatch, "entropy checks run on S^2 only");
}

/// Samples, ∫f², ∫f² log f.
struct LogTerms {
  std::vector<double> samples;
  double l2 = 0;
  double f2logf = 0;
};

LogTerms log_terms(const std::function<double(const Point3&)>& f, const QuadratureRule& rule) {
  LogTerms t;
  t.samples = rule.sample(f);
  require_positive(t.samples);
  std::vector<double> sq(t.samples.size()), ent(t.samples.size());
  for (std::size_t k = 0; k < sq.size(); ++k) {
    sq[k] = t.samples[k] * t.samples[k];
    ent[k] = sq[k] * std::log(t.samples[k]);
  }
  t.l2 = rule.integrate(sq);
  t.f2logf = rule.integrate(ent);
  return t;
}

/// Σ_j eigen(j)·∫h_j² over the exact harmonic components of f.
Rat exact_spectral_form(const SpherePoly& f, const std::function<Rat(int)>& eigen) {
  Rat acc(0);
  for (const auto& part : harmonic_decompose(f).parts) {
    const SpherePoly h(part.h);
    acc += eigen(part.degree) * inner_product(h, h);
  }
  return acc;
}

/// Σ_j eigen(j)·e_j over the projected energies, plus the tail estimate.
std::pair<double, double> sampled_spectral_form(const std::vector<double>& energies, double l2,
                                                const std::function<double(int)>& eigen) {
  double acc = 0, captured = 0;
  for (std::size_t j = 0; j < energies.size(); ++j) {
    acc += eigen(static_cast<int>(j)) * energies[j];
    captured += energies[j];
  }
  const double tail = std::max(0.0, l2 - captured);
  return {acc, tail * std::abs(eigen(static_cast<int>(energies.size())))};
}

double mu_prime_d(int j) { return to_double(mu_prime(kDim, j)); }
double giveaway_eigen(int j) { return std::log(1.0 + 2.0 * j / (kDim - 1)); }

/// P_n(t) and P_n'(t) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(std::size_t n, double t) {
  double p0 = 1, p1 = t;
  for (std::size_t k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1) * t * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = p2;
  }
  return {p1, static_cast<double>(n) * (t * p1 - p0) / (t * t - 1)};
}

InequalitySides finish(double lhs, double rhs, double truncation) {
  return InequalitySides{lhs, rhs, rhs - lhs, truncation};
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Quadrature

std::vector<double> QuadratureRule::sample(const std::function<double(const Point3&)>& f) const {
  std::vector<double> v(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) v[k] = f(nodes[k].x);
  return v;
}

double QuadratureRule::integrate(const std::vector<double>& values) const { return weighted_sum(*this, values); }

double QuadratureRule::integrate(const std::function<double(const Point3&)>& f) const { return integrate(sample(f)); }

QuadratureRule build_quadrature(int order) {
  if (order < 2) throw Error(Error::Kind::InvalidArgument, "quadrature order must be at least 2");
  const std::size_t polar = static_cast<std::size_t>(order / 2 + 1);
  const std::size_t azimuth = static_cast<std::size_t>(order + 1);
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(polar), &gsl_integration_glfixed_table_free);
  if (!table) throw Error(Error::Kind::Internal, "Gauss-Legendre table allocation failed");
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.reserve(polar * azimuth);
  for (std::size_t i = 0; i < polar; ++i) {
    double t = 0, w = 0;
    gsl_integration_glfixed_point(-1.0, 1.0, i, &t, &w, table.get());
    // GSL's untabulated sizes come back with ~1e-11 weight errors; Newton steps restore them
    for (int it = 0; it < 3; ++it) {
      const auto [p, dp] = legendre_with_derivative(polar, t);
      t -= p / dp;
    }
    const double dp = legendre_with_derivative(polar, t).second;
    w = 2 / ((1 - t * t) * dp * dp);
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (std::size_t k = 0; k < azimuth; ++k) {
      const double phi = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(azimuth);
      rule.nodes.push_back({{t, s * std::cos(phi), s * std::sin(phi)}, 0.5 * w / static_cast<double>(azimuth)});
    }
  }
  return rule;
}

double evaluate(const SpherePoly& p, const Point3& x) {
  return p.rep().evaluate(std::vector<double>{x[0], x[1], x[2]});
}

double quadrature_moment_error(const QuadratureRule& rule, int degree) {
  double worst = 0;
  for (const auto& m : sphere_basis_monomials(kDim, degree)) {
    const double got = rule.integrate([&](const Point3& x) {
      double v = 1;
      for (int k = 0; k < 3; ++k) v *= std::pow(x[k], m[k]);
      return v;
    });
    worst = std::max(worst, std::abs(got - to_double(moment_integral(kDim, m))));
  }
  return worst;
}

ConformalFactor::ConformalFactor(const Point3& a) : a_(a), a2_(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]) {
  if (!(a2_ < 1)) throw Error(Error::Kind::InvalidArgument, "conformal center must lie inside the unit ball");
}

double ConformalFactor::operator()(const Point3& x) const {
  const double ax = a_[0] * x[0] + a_[1] * x[1] + a_[2] * x[2];
  return (1 - a2_) / (1 - 2 * ax + a2_);
}

// ---------------------------------------------------------------------------------------------
// Spectral operators

double SpectralImage::evaluate(const Point3& x) const {
  double acc = 0;
  for (const auto& p : parts) acc += p.scale * speclab::evaluate(p.component, x);
  return acc;
}

SpectralImage apply_spectral_operator(const SpherePoly& f, const std::function<double(int)>& eigen) {
  SpectralImage img;
  for (const auto& part : harmonic_decompose(f).parts)
    img.parts.push_back({part.degree, eigen(part.degree), SpherePoly(part.h)});
  return img;
}

SpherePoly apply_spectral_operator_exact(const SpherePoly& f, const std::function<Rat(int)>& eigen) {
  SpherePoly out(f.dim());
  for (const auto& part : harmonic_decompose(f).parts) out += SpherePoly(part.h) * eigen(part.degree);
  return out;
}

HarmonicProjector::HarmonicProjector(const QuadratureRule& rule, int cutoff) : rule_(rule), cutoff_(cutoff) {
  if (cutoff < 0) throw Error(Error::Kind::InvalidArgument, "cutoff must be nonnegative");
  if (2 * cutoff > rule.order)
    throw Error(Error::Kind::InvalidArgument, "quadrature order must be at least twice the cutoff");
  const std::size_t L = static_cast<std::size_t>(cutoff);
  const std::size_t count = (L + 1) * (L + 1);
  y_.assign(count, std::vector<double>(rule.nodes.size()));
  for (int l = 0; l <= cutoff; ++l)
    for (int m = 0; m < 2 * l + 1; ++m) degree_.push_back(l);
  std::vector<double> plm(gsl_sf_legendre_array_n(L));
  const double norm = std::sqrt(4 * M_PI);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const auto& x = rule.nodes[k].x;
    gsl_sf_legendre_array_e(GSL_SF_LEGENDRE_SPHARM, L, x[0], 1.0, plm.data());
    const double phi = std::atan2(x[2], x[1]);
    std::size_t h = 0;
    for (std::size_t l = 0; l <= L; ++l) {
      y_[h++][k] = norm * plm[gsl_sf_legendre_array_index(l, 0)];
      for (std::size_t m = 1; m <= l; ++m) {
        const double p = norm * std::sqrt(2.0) * plm[gsl_sf_legendre_array_index(l, m)];
        y_[h++][k] = p * std::cos(static_cast<double>(m) * phi);
        y_[h++][k] = p * std::sin(static_cast<double>(m) * phi);
      }
    }
  }
}

std::vector<double> HarmonicProjector::coefficients(const std::vector<double>& samples) const {
  std::vector<double> c(y_.size()), t(samples.size());
  for (std::size_t h = 0; h < y_.size(); ++h) {
    for (std::size_t k = 0; k < samples.size(); ++k) t[k] = samples[k] * y_[h][k];
    c[h] = rule_.integrate(t);
  }
  return c;
}

std::vector<double> HarmonicProjector::energies(const std::vector<double>& samples) const {
  const auto c = coefficients(samples);
  std::vector<double> e(static_cast<std::size_t>(cutoff_ + 1), 0.0);
  for (std::size_t h = 0; h < c.size(); ++h) e[degree_[h]] += c[h] * c[h];
  return e;
}

SphereFunction sphere_function(const SpherePoly& p, std::string description) {
  require_s2(p);
  if (description.empty()) description = to_string(p);
  return SphereFunction{std::move(description), [p](const Point3& x) { return evaluate(p, x); }, p, false};
}

SphereFunction conformal_function(const Point3& a, double scale) {
  const ConformalFactor F(a);
  std::string d = "F_a, a=(" + fmt_short(a[0]) + "," + fmt_short(a[1]) + "," + fmt_short(a[2]) + ")";
  if (scale != 1) d = fmt_short(scale) + "*" + d;
  return SphereFunction{d, [F, scale](const Point3& x) { return scale * F(x); }, std::nullopt, true};
}

// ---------------------------------------------------------------------------------------------
// Inequalities

InequalitySides entropy_sides(const SpherePoly& f, const QuadratureRule& rule) {
  require_s2(f);
  const LogTerms t = log_terms([&](const Point3& x) { return evaluate(f, x); }, rule);
  const double l2 = to_double(integrate(f * f));
  const double fhf = to_double(exact_spectral_form(f, [](int j) { return mu_prime(kDim, j); }));
  return finish(4.0 / kDim * t.f2logf, 2.0 / kDim * l2 * std::log(l2) + fhf, 0);
}

InequalitySides entropy_sides(const SphereFunction& f, const HarmonicProjector& proj) {
  const LogTerms t = log_terms(f.eval, proj.rule());
  const auto [fhf, tail] = sampled_spectral_form(proj.energies(t.samples), t.l2, mu_prime_d);
  return finish(4.0 / kDim * t.f2logf, 2.0 / kDim * t.l2 * std::log(t.l2) + fhf, tail);
}

InequalitySides giveaway_sides(const SpherePoly& f, const QuadratureRule& rule) {
  require_s2(f);
  const LogTerms t = log_terms([&](const Point3& x) { return evaluate(f, x); }, rule);
  const double l2 = to_double(integrate(f * f));
  double form = 0;
  for (const auto& part : harmonic_decompose(f).parts) {
    const SpherePoly h(part.h);
    form += giveaway_eigen(part.degree) * to_double(inner_product(h, h));
  }
  return finish(2.0 / kDim * t.f2logf, 1.0 / kDim * l2 * std::log(l2) + form, 0);
}

InequalitySides giveaway_sides(const SphereFunction& f, const HarmonicProjector& proj) {
  const LogTerms t = log_terms(f.eval, proj.rule());
  const auto [form, tail] = sampled_spectral_form(proj.energies(t.samples), t.l2, giveaway_eigen);
  return finish(2.0 / kDim * t.f2logf, 1.0 / kDim * t.l2 * std::log(t.l2) + form, tail);
}

double beckner_eigen(int n, double r, int j) {
  const double m = n / 2.0;
  double v = 1;
  for (int q = 0; q < j; ++q) v *= (m + r + q) / (m - r + q);
  return v;
}

InequalitySides beckner_sides(const SphereFunction& F, double r, const HarmonicProjector& proj) {
  const double m = kDim / 2.0;
  if (!(std::abs(r) < m)) throw Error(Error::Kind::InvalidArgument, "r must satisfy |r| < n/2");
  const auto& rule = proj.rule();
  const auto fv = rule.sample(F.eval);
  require_positive(fv);
  const double p = (kDim - 2 * r) / 2;
  std::vector<double> g(fv.size()), g2(fv.size()), fn(fv.size());
  for (std::size_t k = 0; k < fv.size(); ++k) {
    g[k] = std::pow(fv[k], p);
    g2[k] = g[k] * g[k];
    fn[k] = std::pow(fv[k], kDim);
  }
  const double G2 = rule.integrate(g2);
  // ∫gBg = ∫g² + Σ_j (B_j − 1) e_j, so that r = 0 reproduces ∫g² with no truncation
  const auto [corr, tail] =
      sampled_spectral_form(proj.energies(g), G2, [&](int j) { return beckner_eigen(kDim, r, j) - 1; });
  const double lhs = G2 + corr;
  const double rhs = std::pow(rule.integrate(fn), (kDim - 2 * r) / kDim);
  return InequalitySides{lhs, rhs, lhs - rhs, tail};
}

InequalitySides beckner_check(const SphereFunction& F, double r, const HarmonicProjector& proj) {
  if (!(r > 0 && r < kDim / 2.0)) throw Error(Error::Kind::InvalidArgument, "r must lie in (0, n/2)");
  return beckner_sides(F, r, proj);
}

// ---------------------------------------------------------------------------------------------
// Battery and suite

std::vector<SphereFunction> entropy_battery() {
  std::vector<SphereFunction> b;
  const double s3 = 1 / std::sqrt(3.0), s2 = 1 / std::sqrt(2.0);
  for (const Point3& a : std::vector<Point3>{{0, 0, 0},
                                             {0, 0, 0.1},
                                             {0.3, 0, 0},
                                             {0, 0.6, 0},
                                             {0, 0, -0.3},
                                             {0.6 * s3, 0.6 * s3, 0.6 * s3},
                                             {0.1 * s2, -0.1 * s2, 0}})
    b.push_back(conformal_function(a));
  b.push_back(conformal_function({0, 0, 0.3}, 2.5));

  for (const char* text : {"1 + x2/2", "1 + 9/10*x2", "1 + x1^2/4", "1 + x0^2", "2 + x0 + x1^2", "1 + x0*x1",
                           "1 + (x0 + x1 + x2)/4", "1 + x0*x1*x2", "3 - x2^2 + x0", "1 + x2^4",
                           "1 + x2/2 + 3/10*x0^2", "2 + x0^3", "1 + 7/10*x1", "(1 + x2)^2 + 1/10",
                           "3/2 + x0*x2 - x1^2/2"})
    b.push_back(sphere_function(SpherePoly(parse_poly(3, text)), text));

  auto add = [&](std::string d, std::function<double(const Point3&)> f) {
    b.push_back(SphereFunction{std::move(d), std::move(f), std::nullopt, false});
  };
  const ConformalFactor up({0, 0, 0.3}), down({0, 0, -0.3}), side({0.6, 0, 0});
  add("exp(x2)", [](const Point3& x) { return std::exp(x[2]); });
  add("exp(x0*x1/2)", [](const Point3& x) { return std::exp(0.5 * x[0] * x[1]); });
  add("1/(1 + x2^2/2)", [](const Point3& x) { return 1 / (1 + 0.5 * x[2] * x[2]); });
  add("F_a^2, a=(0,0,0.3)", [up](const Point3& x) { return up(x) * up(x); });
  add("sqrt(F_a), a=(0.6,0,0)", [side](const Point3& x) { return std::sqrt(side(x)); });
  add("F_a + F_b, a=(0,0,0.3), b=(0,0,-0.3)", [up, down](const Point3& x) { return up(x) + down(x); });
  add("cosh(x0)", [](const Point3& x) { return std::cosh(x[0]); });
  return b;
}

bool EntropyReport::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return !records.empty();
}

std::string EntropyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = "entropy";
  doc["status"] = all_pass() ? "pass" : "fail";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["test"] = r.test;
    row["f_description"] = r.f_description;
    row["order"] = r.order;
    row["cutoff_J"] = r.cutoff_J;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["gap"] = r.gap;
    row["truncation"] = r.truncation;
    row["status"] = r.pass ? "pass" : "fail";
    rows.push_back(std::move(row));
  }
  doc["records"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string EntropyReport::to_csv() const {
  std::ostringstream os;
  os << "test,f_description,order,cutoff_J,lhs,rhs,gap,truncation,status\n";
  for (const auto& r : records) {
    std::string d = r.f_description;
    if (d.find_first_of(",\"") != std::string::npos) {
      std::string q = "\"";
      for (char c : d) {
        if (c == '"') q += '"';
        q += c;
      }
      d = q + "\"";
    }
    os << r.test << ',' << d << ',' << r.order << ',' << r.cutoff_J << ',' << fmt(r.lhs) << ',' << fmt(r.rhs) << ','
       << fmt(r.gap) << ',' << fmt(r.truncation) << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
  return os.str();
}

std::string EntropyReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-20s gap=% .6e lhs=% .12e rhs=% .12e  ", r.pass ? "ok" : "FAIL",
                  r.test.c_str(), r.gap, r.lhs, r.rhs);
    os << line << r.f_description << '\n';
  }
  os << (all_pass() ? "entropy: all checks pass\n" : "entropy: FAILURES\n");
  return os.str();
}

VerificationReport EntropyReport::summary() const {
  static const std::map<std::string, std::string> formulas{
      {"quadrature_moments", "rule(x^m) = ∫x^m, deg m ≤ order"},
      {"projector_orthonormality", "rule(Y_a Y_b) = δ_ab, deg ≤ J"},
      {"conformal_volume", "∫F_a^n = 1"},
      {"lHLS", "(4/n)∫f²log f ≤ (2/n)(∫f²)log∫f² + ∫f H f"},
      {"lHLS_equality", "equality for conformal f^{2/n}"},
      {"lHLS_strict", "gap > 1e-4 for non-conformal f"},
      {"dual_route", "exact harmonic ∫fHf = projected ∫fHf"},
      {"giveaway", "(2/n)∫f²log f ≤ (1/n)(∫f²)log∫f² + ∫f log(2A₁/(n−1)) f"},
      {"giveaway_margin", "giveaway gap ≥ lHLS gap / 2"},
      {"beckner", "∫F^{(n−2r)/2} B_{2r} F^{(n−2r)/2} ≥ (∫Fⁿ)^{(n−2r)/n}, r = 1/2"},
      {"beckner_equality", "Beckner equality for conformal F"},
      {"beckner_strict", "Beckner gap > 1e-4 for non-conformal F"},
      {"beckner_derivative", "d/dr|₀ Beckner deficit = lHLS deficit"},
      {"monotone_gap", "lHLS gap of 1 + t x2 increasing in |t|"},
      {"spectral_log", "μ′_j ≤ 2 log((n−1+2j)/(n−1)), j ≤ 25"},
  };
  VerificationReport rep;
  rep.suite = "entropy";
  std::map<std::string, std::size_t> index;
  for (const auto& r : records) {
    auto it = index.find(r.test);
    if (it == index.end()) {
      IdentityResult x;
      x.identity_id = r.test;
      const auto f = formulas.find(r.test);
      x.paper_eq = f == formulas.end() ? r.test : f->second;
      x.dimension = kDim;
      x.degree_cap = r.order;
      it = index.emplace(r.test, rep.results.size()).first;
      rep.results.push_back(std::move(x));
    }
    auto& x = rep.results[it->second];
    ++x.cases;
    if (!r.pass && x.pass) {
      x.pass = false;
      x.counterexample = r.f_description + ": lhs=" + fmt(r.lhs) + " rhs=" + fmt(r.rhs) + " gap=" + fmt(r.gap);
    }
  }
  return rep;
}

EntropyReport run_entropy_suite(const EntropyOptions& opts) {
  if (opts.order < 40) throw Error(Error::Kind::InvalidArgument, "entropy suite needs quadrature order at least 40");
  if (opts.cutoff_J < 1 || 2 * opts.cutoff_J > opts.order)
    throw Error(Error::Kind::InvalidArgument, "cutoff J must lie in [1, order/2]");
  const int order = opts.order, J = opts.cutoff_J;
  EntropyReport rep;
  auto rec = [&](std::string test, std::string d, double lhs, double rhs, double gap, double trunc, bool pass) {
    return EntropyRecord{std::move(test), std::move(d), order, J, lhs, rhs, gap, trunc, pass};
  };

  const QuadratureRule rule = build_quadrature(order);
  const double moment_err = quadrature_moment_error(rule, order);
  rep.records.push_back(rec("quadrature_moments", "all monomials of degree <= " + std::to_string(order), moment_err,
                            1e-13, 1e-13 - moment_err, 0, moment_err <= 1e-13));
  if (moment_err > 1e-13) return rep;

  const HarmonicProjector proj(rule, J);
  {
    double worst = 0;
    const auto& y = proj.harmonics();
    std::vector<double> t(rule.nodes.size());
    for (std::size_t a = 0; a < y.size(); ++a)
      for (std::size_t b = a; b < y.size(); ++b) {
        for (std::size_t k = 0; k < t.size(); ++k) t[k] = y[a][k] * y[b][k];
        worst = std::max(worst, std::abs(rule.integrate(t) - (a == b ? 1.0 : 0.0)));
      }
    rep.records.push_back(rec("projector_orthonormality", "real spherical harmonics, degree <= " + std::to_string(J),
                              worst, 1e-12, 1e-12 - worst, 0, worst <= 1e-12));
  }

  for (double r : {0.0, 0.1, 0.3, 0.6}) {
    const ConformalFactor F({0, r * 0.6, r * 0.8});
    const double vol = rule.integrate([&](const Point3& x) { return std::pow(F(x), kDim); });
    rep.records.push_back(rec("conformal_volume", "|a|=" + fmt_short(r), vol, 1, std::abs(vol - 1), 0, std::abs(vol - 1) <= 1e-10));
  }

  const auto battery = entropy_battery();
  std::vector<std::vector<EntropyRecord>> slots(battery.size());
  parallel_for(battery.size(), opts.jobs, [&](std::size_t k) {
    const auto& f = battery[k];
    auto& out = slots[k];
    const InequalitySides sampled = entropy_sides(f, proj);
    const InequalitySides main = f.poly ? entropy_sides(*f.poly, rule) : sampled;
    out.push_back(rec("lHLS", f.description, main.lhs, main.rhs, main.gap, main.truncation, main.gap >= -1e-10));
    if (f.conformal)
      out.push_back(rec("lHLS_equality", f.description, main.lhs, main.rhs, main.gap, main.truncation,
                        std::abs(main.gap) < 1e-6));
    else
      out.push_back(rec("lHLS_strict", f.description, main.lhs, main.rhs, main.gap, main.truncation, main.gap > 1e-4));
    if (f.poly) {
      const double diff = std::abs(main.rhs - sampled.rhs);
      out.push_back(rec("dual_route", f.description, main.rhs, sampled.rhs, diff, sampled.truncation, diff <= 1e-10));
    }

    const InequalitySides g = f.poly ? giveaway_sides(*f.poly, rule) : giveaway_sides(f, proj);
    out.push_back(rec("giveaway", f.description, g.lhs, g.rhs, g.gap, g.truncation, g.gap >= -1e-10));
    out.push_back(rec("giveaway_margin", f.description, g.gap, main.gap / 2, g.gap - main.gap / 2, g.truncation,
                      g.gap - main.gap / 2 >= -1e-10));

    const InequalitySides b = beckner_check(f, 0.5, proj);
    out.push_back(rec("beckner", f.description, b.lhs, b.rhs, b.gap, b.truncation, b.gap >= -1e-10));
    if (f.conformal)
      out.push_back(rec("beckner_equality", f.description, b.lhs, b.rhs, b.gap, b.truncation, std::abs(b.gap) < 1e-6));
    else
      out.push_back(rec("beckner_strict", f.description, b.lhs, b.rhs, b.gap, b.truncation, b.gap > 1e-4));

    const double h = 1e-3;
    const double d = (beckner_sides(f, h, proj).gap - beckner_sides(f, -h, proj).gap) / (2 * h);
    out.push_back(rec("beckner_derivative", f.description, d, sampled.gap, std::abs(d - sampled.gap), sampled.truncation,
                      std::abs(d - sampled.gap) <= 1e-5));
  });
  for (auto& s : slots) rep.records.insert(rep.records.end(), s.begin(), s.end());

  {
    std::vector<double> gaps;
    for (int k = 0; k <= 9; ++k) {
      gaps.push_back(entropy_sides(SpherePoly(parse_poly(3, "1 + " + to_string(make_rat(k, 10)) + "*x2")), rule).gap);
    }
    // f_{-t} is f_t reflected through x2 = 0, so the gap is even in t
    const double neg = entropy_sides(SpherePoly(parse_poly(3, "1 - 1/2*x2")), rule).gap;
    bool ok = std::abs(gaps[0]) <= 1e-12 && std::abs(neg - gaps[5]) <= 1e-12;
    double least = 1;
    for (std::size_t k = 1; k < gaps.size(); ++k) {
      least = std::min(least, gaps[k] - gaps[k - 1]);
      ok = ok && gaps[k] > gaps[k - 1];
    }
    rep.records.push_back(rec("monotone_gap", "1 + t*x2, t = 0, 0.1, ..., 0.9", gaps[0], gaps.back(), least, 0, ok));
  }

  for (int n = 2; n <= 8; ++n) {
    double margin = 1e300, worst_mu = 0, worst_bound = 0;
    for (int j = 0; j <= 25; ++j) {
      const auto c = log_comparison(n, j);
      const double m = c.log_bound - to_double(c.mu_prime);
      if (m < margin) {
        margin = m;
        worst_mu = to_double(c.mu_prime);
        worst_bound = c.log_bound;
      }
    }
    rep.records.push_back(rec("spectral_log", "n=" + std::to_string(n) + ", j <= 25", worst_mu, worst_bound, margin, 0,
                              margin >= 0));
  }
  return rep;
}

}  // namespace speclab
