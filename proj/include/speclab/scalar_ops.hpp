#pragma once

#include "speclab/polynomial.hpp"
#include "speclab/report.hpp"

#include <optional>
#include <vector>

namespace speclab {

/// Conformal vector field T_i p = x_i E(p) − ∂_i p, reduced.
SpherePoly T(int i, const SpherePoly& p);
/// U_i = T_i + (n/2) x_i.
SpherePoly U(int i, const SpherePoly& p);
/// Δ = −Σ_i T_i².
SpherePoly laplacian(const SpherePoly& p);
/// Δ through the radial split of the ambient Laplacian, one homogeneous part at a time.
SpherePoly laplacian_homogeneous(const SpherePoly& p);
/// D = Δ + n(n−2)/4.
SpherePoly conformal_D(const SpherePoly& p);

Rat conformal_shift(int n);
/// λ_j = ((n−2)/2 + j)(n/2 + j).
Rat scalar_eigenvalue(int n, int j);
/// j(n−1+j).
Rat laplacian_eigenvalue(int n, int j);

/// The scalar operator set with optional perturbations; the default is the true one. Used to
/// check that the identity sweep can fail.
struct ScalarModel {
  int n = 2;
  Rat curvature_offset{0};  ///< added to n(n−2)/4 inside D
  Rat weight_offset{0};     ///< added to n/2 inside U_i

  SpherePoly U(int i, const SpherePoly& p) const;
  SpherePoly D(const SpherePoly& p) const;
};

enum class StepDirection { Plus, Minus };

/// λ± = λ + 1 ± √(4λ+1), exact in ℚ[√(4λ+1)].
QuadSurd lambda_step(const QuadSurd& lambda, StepDirection dir);

struct ScalarEigenpair {
  Rat lambda;
  int j = 0;
  std::vector<SpherePoly> funcs;
};

/// D-eigenvalues λ_0..λ_{count−1} by iterating λ⁺ from n(n−2)/4. Throws Internal if the
/// iteration ever leaves ℚ.
std::vector<ScalarEigenpair> generate_spectrum(int n, int count);

bool is_eigenfunction(const SpherePoly& phi, const Rat& lambda);

/// ν = √(4λ+1) when rational.
std::optional<Rat> nu_of(const Rat& lambda);

/// P_i φ = (U_i + ½(λ−λ⁻) x_i) φ; requires φ ∈ E(λ, D) and ν rational.
SpherePoly ladder_plus(int i, const SpherePoly& phi, const Rat& lambda);
/// M_i φ = (U_i + ½(λ−λ⁺) x_i) φ.
SpherePoly ladder_minus(int i, const SpherePoly& phi, const Rat& lambda);

struct LadderSums {
  Rat mp;  ///< −½(ν+n−1)(ν+2)
  Rat pm;  ///< −½(ν−n+1)(ν−2)
  /// Factors measured by applying Σ M_i P_i and Σ P_i M_i to φ; nullopt when the image is not
  /// a multiple of φ.
  std::optional<Rat> mp_measured;
  std::optional<Rat> pm_measured;
};
LadderSums ladder_sums(const SpherePoly& phi, const Rat& lambda);

/// Spanning set of E_j grown by the P_i ladders from 1, pivoted by exact rank. `max_funcs`
/// (0 = no limit) truncates the returned list, not the construction.
ScalarEigenpair build_eigenspace(int n, int j, std::size_t max_funcs = 0);

struct RefutationChain {
  int n = 2;
  Rat start;
  std::vector<QuadSurd> values;  ///< start followed by successive λ⁻
  Rat violated_bound;            ///< n(n−2)/4
  std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Descends from a candidate eigenvalue by λ⁻ until it drops below n(n−2)/4. Throws OnSpectrum
/// for a true eigenvalue and BelowBound for a candidate already below the bound.
RefutationChain refute_candidate(int n, const Rat& candidate);
/// Level j with λ_j = value, if any.
std::optional<int> spectrum_level(int n, const Rat& value);

struct ScalarVerifyOptions {
  int jobs = 1;
  const ScalarModel* model = nullptr;  ///< defaults to the true operators
};

/// Checks the scalar operator identities on every normal-form monomial of degree ≤ degree_cap,
/// plus the eigenspace statements for all levels reachable within the cap.
VerificationReport verify_scalar_identities(int n, int degree_cap, const ScalarVerifyOptions& opts = {});

}  // namespace speclab
