#pragma once

#include "speclab/linalg.hpp"
#include "speclab/polynomial.hpp"
#include "speclab/report.hpp"

#include <string>
#include <vector>

namespace speclab {

/// 2^⌊(n+1)/2⌋.
int spin_dimension(int n);

/// Generators e_0..e_n with e_i e_j + e_j e_i = −2δ_ij, built as i times the Jordan–Wigner
/// Hermitian generators (Z⊗…⊗Z⊗X⊗1⊗…, Z⊗…⊗Z⊗Y⊗1⊗…, Z⊗…⊗Z).
struct GammaAlgebra {
  int n = 2;
  int dim_spin = 2;
  std::vector<DenseMatrix<CRat>> e;
};

GammaAlgebra gamma_build(int n);
/// Shared immutable instance per n.
const GammaAlgebra& gamma_algebra(int n);
/// Exact check of the Clifford relations and e_i⁻¹ = −e_i.
bool gamma_relations_hold(const GammaAlgebra& g);

/// Spinor field on S^n: one CSpherePoly per spinor component.
class SpinorPoly {
public:
  SpinorPoly() = default;
  /// Zero field.
  explicit SpinorPoly(int n);
  explicit SpinorPoly(std::vector<CSpherePoly> components);

  /// Constant spinor u_a (a-th standard basis vector).
  static SpinorPoly constant(int n, int a);
  /// f·u_a.
  static SpinorPoly scalar_times(const CSpherePoly& f, int a);

  int dim() const { return n_; }
  int spin_dim() const { return static_cast<int>(comp_.size()); }
  const CSpherePoly& operator[](int a) const { return comp_.at(a); }
  const std::vector<CSpherePoly>& components() const { return comp_; }
  bool is_zero() const;
  int degree() const;

  SpinorPoly& operator+=(const SpinorPoly& o);
  SpinorPoly& operator-=(const SpinorPoly& o);
  SpinorPoly& operator*=(const CRat& s);
  friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }
  friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) { return a -= b; }
  friend SpinorPoly operator-(SpinorPoly a) { return a *= CRat(-1); }
  friend SpinorPoly operator*(SpinorPoly a, const CRat& s) { return a *= s; }
  friend SpinorPoly operator*(const CRat& s, SpinorPoly a) { return a *= s; }
  friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) { return a.n_ == b.n_ && a.comp_ == b.comp_; }

  /// m(x_i).
  SpinorPoly times_coordinate(int i) const;
  /// Pointwise action of a constant dim_spin × dim_spin matrix.
  SpinorPoly act(const DenseMatrix<CRat>& m) const;

private:
  void check_same(const SpinorPoly& o) const;

  int n_ = 2;
  std::vector<CSpherePoly> comp_;
};

std::string to_string(const SpinorPoly& psi);

/// Clifford multiplication by x = Σ x_i e_i.
SpinorPoly clifford_x(const SpinorPoly& psi);
/// Γ_x = −Σ_{i<j} e_i e_j (x_i∂_j − x_j∂_i), reduced.
SpinorPoly gamma_op(const SpinorPoly& psi);

/// The Dirac operator of the model, P = x·(Γ_x − n/2), and the operators defined from it by
/// commutators. `mass_offset` shifts n/2 and exists only to show the checks can fail.
struct SpinorModel {
  int n = 2;
  Rat mass_offset{0};

  SpinorPoly P(const SpinorPoly& psi) const;
  /// U_i = ½[P², m(x_i)].
  SpinorPoly U(int i, const SpinorPoly& psi) const;
  /// y_i = [P, m(x_i)].
  SpinorPoly y(int i, const SpinorPoly& psi) const;
};

SpinorPoly dirac_apply(const SpinorPoly& psi);
SpinorPoly U_spin(int i, const SpinorPoly& psi);
SpinorPoly y_apply(int i, const SpinorPoly& psi);

/// ψ_a ± x·ψ_a, an eigenspinor with eigenvalue ∓n/2.
SpinorPoly foothold(int n, int a, int sign);

bool is_eigenspinor(const SpinorPoly& psi, const Rat& lambda, const SpinorModel& model);

struct SpinorLadders {
  SpinorPoly A;  ///< (U + λx + ½y)ψ ∈ E(λ+1)
  SpinorPoly S;  ///< (U − λx − ½y)ψ ∈ E(λ−1)
  SpinorPoly N;  ///< (U − ½x − λy)ψ ∈ E(−λ)
};
/// Throws NotEigenfunction unless Pψ = λψ.
SpinorLadders spinor_ladders(int i, const SpinorPoly& psi, const Rat& lambda);

/// dim_spin·C(n+j−1, j), the multiplicity of ±(n/2+j) in the ambient model. For odd n the
/// ambient spinor space carries both half-spin bundles, twice the intrinsic 2^⌊n/2⌋ C(n+j−1, j).
std::size_t dirac_multiplicity(int n, int j);

/// Dirac levels ±(n/2+j), j < count, produced from the foothold eigenvalue −n/2 by the cubic
/// branches, keeping a branch only where its sum factor is nonzero.
std::vector<Rat> generate_dirac_spectrum(int n, int count);

// ---------------------------------------------------------------------------------------------
// Truncations

struct SpinKey {
  Monomial m;
  int comp = 0;
};
struct SpinKeyOrder {
  bool operator()(const SpinKey& a, const SpinKey& b) const {
    if (a.m == b.m) return a.comp < b.comp;
    return MonomialOrder{}(a.m, b.m);
  }
};
using SpinVec = SparseVec<SpinKey, CRat, SpinKeyOrder>;

SpinVec flatten(const SpinorPoly& psi);
SpinorPoly unflatten(int n, const SpinVec& v);

/// V_N = span of degree ≤ N spinor monomials and x· each. P maps it to itself.
class TruncationSpace {
public:
  TruncationSpace(int n, int N);

  int n() const { return n_; }
  int N() const { return N_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<SpinorPoly>& basis() const { return basis_; }
  /// Coordinates of psi; throws Internal when psi is outside V_N.
  std::vector<CRat> coordinates(const SpinorPoly& psi) const;
  bool contains(const SpinorPoly& psi) const;
  SpinorPoly combine(const std::vector<CRat>& coords) const;

private:
  int n_, N_;
  SpanBuilder<SpinKey, CRat, SpinKeyOrder> span_;
  std::vector<SpinorPoly> basis_;
};

/// Exact matrices on V_N. X, U, Y map V_N into V_{N+1} (range basis); P and P_range are the
/// square restrictions of P to V_N and V_{N+1}.
struct TruncationModel {
  int n = 2;
  int N = 0;
  int dim_spin = 2;
  std::vector<SpinorPoly> basis;
  std::vector<SpinorPoly> range_basis;
  DenseMatrix<CRat> P;
  DenseMatrix<CRat> P_range;
  DenseMatrix<CRat> inclusion;  ///< V_N → V_{N+1}
  std::vector<DenseMatrix<CRat>> X, U, Y;

  /// {n, N, dim_spin, basis, range_basis, P, P_range, inclusion, X, U, Y}; entries "a/b+c/d i".
  std::string to_json() const;
};

TruncationModel truncation_matrices(int n, int N, const SpinorModel* model = nullptr);

struct SpectrumEntry {
  Rat eigenvalue;
  std::size_t multiplicity = 0;          ///< exact kernel dimension of P − μ
  std::size_t numeric_multiplicity = 0;  ///< numeric eigenvalues snapped to μ
  bool on_lattice = false;               ///< μ = ±(n/2+j)
  bool certified = false;                ///< exact kernel dimension matches the numeric count
};

struct DiracSpectrum {
  int n = 2;
  int N = 0;
  std::size_t dimension = 0;
  std::vector<SpectrumEntry> entries;  ///< by |μ|, + first
  std::size_t unsnapped = 0;           ///< numeric eigenvalues further than 1e−9 from ½ℤ

  bool all_on_lattice() const;
  /// Every eigenvalue snapped, certified, and the kernels fill V_N.
  bool complete() const;
  /// eigenvalue,multiplicity,certified
  std::string to_csv() const;
  std::string to_json() const;
};

/// Numeric eigenvalues (double precision) snapped to ½ℤ within 1e−9, then the exact kernel of
/// P − μ for each snapped value.
DiracSpectrum truncation_spectrum(const DenseMatrix<CRat>& P, int n, int N);
DiracSpectrum truncation_spectrum(const TruncationModel& model);

/// Exact basis of E(λ, P) ∩ V_N.
std::vector<SpinorPoly> eigenspinor_basis(const TruncationSpace& space, const DenseMatrix<CRat>& P, const Rat& lambda);
std::vector<SpinorPoly> eigenspinor_basis(int n, int N, const Rat& lambda);

// ---------------------------------------------------------------------------------------------

struct SpinorVerifyOptions {
  int jobs = 1;
  const SpinorModel* model = nullptr;
};

/// Operator identities on every basis element of V_N, eigenspinor statements for levels
/// j ≤ N, spectrum certification, and the intertwinor checks.
VerificationReport verify_spinor_identities(int n, int N, const SpinorVerifyOptions& opts = {});

struct DiracRefutation {
  int n = 2;
  Rat start;
  std::vector<Rat> values;  ///< start, then the branch steps
  std::vector<std::string> branches;  ///< "-lambda" or "lambda-1" per step
  Rat bound;                ///< n(n−1)/4, compared against λ²
  std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Follows −λ (if negative) then λ−1 until λ² < n(n−1)/4. Throws OnSpectrum for ±(n/2+j) and
/// BelowBound when the candidate already violates the bound.
DiracRefutation dirac_refute(int n, const Rat& candidate);

}  // namespace speclab
