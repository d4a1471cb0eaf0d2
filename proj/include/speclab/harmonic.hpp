#pragma once

#include "speclab/polynomial.hpp"

#include <vector>

namespace speclab {

/// E(p) = Σ_i x_i ∂p/∂x_i on the given representative.
template <class C>
Poly<C> euler(const Poly<C>& p) {
  Poly<C> r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const int d = m.degree();
    if (d != 0) r.add_term(m, c * C(d));
  }
  return r;
}

/// Nonnegative ambient Laplacian: −Σ_i ∂²p/∂x_i².
template <class C>
Poly<C> ambient_laplacian(const Poly<C>& p) {
  Poly<C> r(p.nvars());
  for (int k = 0; k < p.nvars(); ++k) r -= p.derivative(k).derivative(k);
  return r;
}

/// One Fischer component: h is homogeneous of degree `degree`, ambient-harmonic, and occurs in the
/// lift of its parity class multiplied by r^{2·r2_power}.
struct HarmonicPart {
  int degree = 0;
  int r2_power = 0;
  RawPoly h;
};

struct HarmonicDecomposition {
  int dim = 2;
  std::vector<HarmonicPart> parts;  ///< ascending degree, zero parts omitted

  /// Σ_s h_s restricted to the sphere.
  SpherePoly reassemble() const;
  const HarmonicPart* part_of_degree(int degree) const;
};

/// Splits a function into components in the eigenspaces E_j (restrictions of j-homogeneous
/// harmonic polynomials). Exact.
HarmonicDecomposition harmonic_decompose(const SpherePoly& p);

/// Harmonic projection of a homogeneous polynomial f: the unique harmonic h with f = h + r²q.
/// Also returns q.
std::pair<RawPoly, RawPoly> fischer_split(const RawPoly& homogeneous, int degree);

/// Lifts p to a homogeneous polynomial of degree `degree` agreeing with p on the sphere by
/// multiplying each term by the matching power of r². Throws when a term has the wrong parity
/// or too large a degree.
RawPoly homogeneous_lift(const SpherePoly& p, int degree);

/// ∫ x^m dσ over S^dim with σ(S^dim) = 1.
Rat moment_integral(int dim, const Monomial& m);
/// Linear extension of moment_integral over the normal form.
Rat integrate(const SpherePoly& p);
CRat integrate(const CSpherePoly& p);
/// Exact L² pairing ∫ p q dσ.
Rat inner_product(const SpherePoly& p, const SpherePoly& q);

/// dim of degree-j ambient-harmonic homogeneous polynomials in dim+1 variables, via the closed
/// form C(n+j, n) − C(n+j−2, n).
std::size_t harmonic_dimension(int dim, int j);
/// The same number measured as #monomials − rank(ambient Laplacian : P_j → P_{j−2}).
std::size_t harmonic_dimension_by_rank(int dim, int j);

}  // namespace speclab
