#pragma once

#include "speclab/polynomial.hpp"
#include "speclab/report.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace speclab {

using Point3 = std::array<double, 3>;

struct QuadratureNode {
  Point3 x;
  double weight = 0;
};

/// Product rule on S²: Gauss–Legendre in x0, uniform in the azimuth of (x1, x2). Weights sum to 1.
struct QuadratureRule {
  int order = 0;
  std::vector<QuadratureNode> nodes;

  std::vector<double> sample(const std::function<double(const Point3&)>& f) const;
  /// Σ w_k v_k with pairwise summation.
  double integrate(const std::vector<double>& values) const;
  double integrate(const std::function<double(const Point3&)>& f) const;
};

/// Exact for polynomials of degree ≤ order. Throws InvalidArgument for order < 2.
QuadratureRule build_quadrature(int order);

/// max |rule(x^m) − ∫x^m| over normal-form monomials of degree ≤ degree.
double quadrature_moment_error(const QuadratureRule& rule, int degree);

double evaluate(const SpherePoly& p, const Point3& x);

/// F(x) = (1−|a|²)/(1 − 2⟨a,x⟩ + |a|²) for |a| < 1.
class ConformalFactor {
public:
  explicit ConformalFactor(const Point3& a);
  double operator()(const Point3& x) const;
  const Point3& center() const { return a_; }

private:
  Point3 a_;
  double a2_;
};

struct ScaledComponent {
  int degree = 0;
  double scale = 0;
  SpherePoly component;
};

/// Σ scale_j h_j for the harmonic components h_j of the input.
struct SpectralImage {
  std::vector<ScaledComponent> parts;
  double evaluate(const Point3& x) const;
};

SpectralImage apply_spectral_operator(const SpherePoly& f, const std::function<double(int)>& eigen);
SpherePoly apply_spectral_operator_exact(const SpherePoly& f, const std::function<Rat(int)>& eigen);

/// L² energies Σ_m |⟨f, Y_jm⟩|² for j ≤ J from samples on a rule, using orthonormal real
/// spherical harmonics.
class HarmonicProjector {
public:
  HarmonicProjector(const QuadratureRule& rule, int cutoff);

  const QuadratureRule& rule() const { return rule_; }
  int cutoff() const { return cutoff_; }
  std::vector<double> energies(const std::vector<double>& samples) const;
  /// Coefficients against Y_jm, ordered by j then m = 0, 1c, 1s, 2c, ...
  std::vector<double> coefficients(const std::vector<double>& samples) const;
  /// Y_jm on every node, same ordering as coefficients().
  const std::vector<std::vector<double>>& harmonics() const { return y_; }

private:
  QuadratureRule rule_;
  int cutoff_;
  std::vector<std::vector<double>> y_;  // [harmonic][node]
  std::vector<int> degree_;
};

/// A positive function on S² with an optional exact polynomial form.
struct SphereFunction {
  std::string description;
  std::function<double(const Point3&)> eval;
  std::optional<SpherePoly> poly;
  bool conformal = false;  ///< a constant multiple of a conformal factor
};

SphereFunction sphere_function(const SpherePoly& p, std::string description = "");
SphereFunction conformal_function(const Point3& a, double scale = 1);

struct InequalitySides {
  double lhs = 0;
  double rhs = 0;
  double gap = 0;         ///< slack of the inequality; ≥ 0 when it holds
  double truncation = 0;  ///< estimate of the neglected spectral tail
};

/// (4/n)∫f² log f against (2/n)(∫f²) log ∫f² + ∫f H f with H|E_j = μ′_j. The polynomial form
/// takes ∫fHf exactly from the harmonic decomposition; the sampled form projects on the rule.
InequalitySides entropy_sides(const SpherePoly& f, const QuadratureRule& rule);
InequalitySides entropy_sides(const SphereFunction& f, const HarmonicProjector& proj);

/// (2/n)∫f² log f against (1/n)(∫f²) log ∫f² + ∫f log(2A₁/(n−1)) f.
InequalitySides giveaway_sides(const SpherePoly& f, const QuadratureRule& rule);
InequalitySides giveaway_sides(const SphereFunction& f, const HarmonicProjector& proj);

/// Π_{q<j} (m+r+q)/(m−r+q), m = n/2.
double beckner_eigen(int n, double r, int j);

/// ∫g B_{2r} g against (∫Fⁿ)^{(n−2r)/n}, g = F^{(n−2r)/2}. Requires 0 < r < n/2.
InequalitySides beckner_check(const SphereFunction& F, double r, const HarmonicProjector& proj);
/// Same quantities for any |r| < n/2; gap is lhs − rhs.
InequalitySides beckner_sides(const SphereFunction& F, double r, const HarmonicProjector& proj);

// ---------------------------------------------------------------------------------------------

struct EntropyOptions {
  int order = 80;
  int cutoff_J = 25;
  int jobs = 1;
};

struct EntropyRecord {
  std::string test;
  std::string f_description;
  int order = 0;
  int cutoff_J = 0;
  double lhs = 0;
  double rhs = 0;
  double gap = 0;
  double truncation = 0;
  bool pass = false;
};

struct EntropyReport {
  std::vector<EntropyRecord> records;

  bool all_pass() const;
  /// Array of {test, f_description, order, cutoff_J, lhs, rhs, gap, truncation, status}.
  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  /// One identity row per test name.
  VerificationReport summary() const;
};

/// 30 positive functions on S²; the conformal ones are flagged.
std::vector<SphereFunction> entropy_battery();

EntropyReport run_entropy_suite(const EntropyOptions& opts = {});

}  // namespace speclab
