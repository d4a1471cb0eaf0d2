#pragma once

#include "speclab/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace speclab {

/// Value of a spectral function at one level. Exact when the gamma arguments differ by an
/// integer, otherwise a high-precision float (see working_precision_digits).
struct SpectralValue {
  enum class Kind { Finite, Pole, Residue };

  Kind kind = Kind::Finite;
  std::optional<Rat> exact;  ///< Finite in the exact regime
  double value = 0;          ///< Finite value rounded to double (NaN for a pole)
  std::string digits;        ///< Finite value at working precision, float regime only
  std::optional<Rat> residue_exact;  ///< Residue kind only

  static SpectralValue finite(Rat q);
  static SpectralValue approx(double v, std::string digits);
  static SpectralValue pole();
  static SpectralValue residue(Rat q);

  bool is_exact() const { return exact.has_value() || residue_exact.has_value(); }
  /// "p/q", 17 significant digits, "pole", or the residue value.
  std::string to_string() const;
  std::string kind_name() const;
};

/// Decimal digits of the float regime: SPECLAB_PRECISION if set (16..100000), else 64.
int working_precision_digits();

/// Γ(a)/Γ(b) with the usual conventions: a pole over a finite value is a pole, a finite value
/// over a pole is 0, and two poles give the limit ratio.
SpectralValue gamma_ratio(const Rat& a, const Rat& b);

/// Z(r, j) = Γ(n/2+j+r)/Γ(n/2+j−r).
SpectralValue scalar_Z(int n, const Rat& r, int j);
/// Residue in r of Z(r, j) at r = −n/2 − j0.
SpectralValue scalar_Z_residue(int n, int j0, int j);
/// ∏_{p=1}^r [ j(n−1+j) + (n/2+p−1)(n/2−p) ].
Rat diff_product_eigen(int n, int r, int j);
/// B(r, j) = Z(r, j) Γ(m−r)/Γ(m+r) = (m+r)_j/(m−r)_j with m = n/2; exact for every rational r.
SpectralValue B_normalized(int n, const Rat& r, int j);
/// μ′_j = Σ_{p<j} 2/(m+p).
Rat mu_prime(int n, int j);

struct LogComparison {
  Rat mu_prime;
  double log_bound = 0;  ///< 2 log((n−1+2j)/(n−1))
};
LogComparison log_comparison(int n, int j);

/// (−λ, λ−1, λ+1).
std::array<Rat, 3> cubic_roots(const Rat& lambda);
/// α(λ) = λ ∏_{q=1}^k (λ² − q²).
Rat dirac_oddpoly_eigen(int k, const Rat& lambda);
/// Whether α(μ)((μ²−λ²)/2 − (k+½)) = α(λ)((μ²−λ²)/2 + (k+½)) holds identically in λ, for
/// μ = λ+1, λ−1, −λ (in that order).
std::array<bool, 3> oddpoly_identity_holds(int k);
/// sgn(λ)^{n+1} Γ(λ+k+1)/Γ(λ−k). Throws InvalidArgument when k + n/2 is an integer.
SpectralValue dirac_alpha(int n, const Rat& k, const Rat& lambda);
/// λ|λ| − ¼ λ/|λ|.
Rat dirac_half_eigen(const Rat& lambda);
/// (n−1)/2 + j.
Rat A1_eigen(int n, int j);

// ---------------------------------------------------------------------------------------------

enum class SpectralFamily {
  ScalarZ,
  ScalarZResidue,
  ScalarB,
  MuPrime,
  DiffProduct,
  A1,
  DiracAlpha,
  DiracOddPoly,
  DiracHalf,
  Cubic
};

std::string family_name(SpectralFamily f);

struct SpectrumRow {
  Rat level;  ///< j for scalar families, λ for Dirac families
  SpectralValue value;
};

struct SpectrumTable {
  int n = 3;
  SpectralFamily family = SpectralFamily::ScalarZ;
  Rat parameter;  ///< r, k, or j0 depending on the family
  std::vector<SpectrumRow> rows;

  std::string to_csv() const;   ///< level,value,kind
  std::string to_json() const;
  std::string to_text() const;
};

/// Scalar family rows for j = 0..jmax.
SpectrumTable scalar_table(SpectralFamily family, int n, const Rat& parameter, int jmax);
/// Dirac family rows for the given λ values.
SpectrumTable dirac_table(SpectralFamily family, int n, const Rat& parameter, const std::vector<Rat>& levels);
/// ±(n/2 + j) for j = 0..jmax, ordered by |λ| with +λ first.
std::vector<Rat> dirac_levels(int n, int jmax);

/// Checks μ_{j+1}(n+2j−2r) = μ_j(n+2j+2r) on adjacent rows: exactly when both entries are
/// exact, else to 1e−12 relative. Pole rows of Z and B tables are checked through their residues
/// (the relation is multiplied through by r − r_pole); residue tables are checked at their pole.
bool recurrence_check(int n, const Rat& r, const SpectrumTable& table);

}  // namespace speclab
