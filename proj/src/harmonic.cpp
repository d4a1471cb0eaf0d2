#include "speclab/harmonic.hpp"

#include "speclab/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace speclab {

namespace {

struct MonomialIndex {
  std::vector<Monomial> list;
  std::map<Monomial, std::size_t, MonomialOrder> index;

  explicit MonomialIndex(std::vector<Monomial> ms) : list(std::move(ms)) {
    for (std::size_t k = 0; k < list.size(); ++k) index.emplace(list[k], k);
  }
  std::size_t at(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end()) throw Error(Error::Kind::Internal, "monomial outside the index");
    return it->second;
  }
};

std::vector<Rat> to_coords(const RawPoly& p, const MonomialIndex& idx) {
  std::vector<Rat> v(idx.list.size(), Rat(0));
  for (const auto& [m, c] : p.terms()) v[idx.at(m)] = c;
  return v;
}

RawPoly from_coords(int nvars, const std::vector<Rat>& v, const MonomialIndex& idx) {
  RawPoly p(nvars);
  for (std::size_t k = 0; k < v.size(); ++k) p.add_term(idx.list[k], v[k]);
  return p;
}

}  // namespace

std::pair<RawPoly, RawPoly> fischer_split(const RawPoly& f, int degree) {
  const int nv = f.nvars();
  for (const auto& [m, c] : f.terms())
    if (m.degree() != degree) throw Error(Error::Kind::InvalidArgument, "fischer_split needs a homogeneous input");
  if (degree < 2 || f.is_zero()) return {f, RawPoly(nv)};
  // unknown q of degree d-2 with Δ(r² q) = Δ f; Δ∘r² is invertible on P_{d-2}
  const MonomialIndex idx(monomials_of_degree(nv, degree - 2));
  const RawPoly r2 = radius_squared(nv);
  const std::size_t n = idx.list.size();
  DenseMatrix<Rat> a(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const RawPoly image = ambient_laplacian(r2 * RawPoly::monomial(nv, idx.list[col]));
    for (const auto& [m, c] : image.terms()) a(idx.at(m), col) = c;
  }
  const std::vector<Rat> rhs = to_coords(ambient_laplacian(f), idx);
  const RawPoly q = from_coords(nv, solve(a, rhs), idx);
  return {f - r2 * q, q};
}

RawPoly homogeneous_lift(const SpherePoly& p, int degree) {
  const int nv = p.dim() + 1;
  RawPoly out(nv);
  std::unordered_map<int, RawPoly> powers;
  for (const auto& [m, c] : p.rep().terms()) {
    const int gap = degree - m.degree();
    if (gap < 0 || gap % 2 != 0)
      throw Error(Error::Kind::InvalidArgument, "term degree incompatible with homogeneous lift of degree " +
                                                    std::to_string(degree));
    auto it = powers.find(gap / 2);
    if (it == powers.end()) it = powers.emplace(gap / 2, radius_power(nv, gap / 2)).first;
    out += it->second * RawPoly::monomial(nv, m, c);
  }
  return out;
}

HarmonicDecomposition harmonic_decompose(const SpherePoly& p) {
  HarmonicDecomposition out;
  out.dim = p.dim();
  const int nv = p.dim() + 1;
  for (int parity = 0; parity < 2; ++parity) {
    SpherePoly cls(p.dim());
    int top = -1;
    RawPoly raw(nv);
    for (const auto& [m, c] : p.rep().terms()) {
      if (m.degree() % 2 != parity) continue;
      raw.add_term(m, c);
      top = std::max(top, m.degree());
    }
    if (top < 0) continue;
    cls = SpherePoly(raw);
    RawPoly f = homogeneous_lift(cls, top);
    int s = 0;
    for (int d = top; d >= 0 && !f.is_zero(); d -= 2, ++s) {
      auto [h, q] = fischer_split(f, d);
      if (!h.is_zero()) out.parts.push_back(HarmonicPart{d, s, std::move(h)});
      f = std::move(q);
    }
  }
  std::sort(out.parts.begin(), out.parts.end(),
            [](const HarmonicPart& a, const HarmonicPart& b) { return a.degree < b.degree; });
  return out;
}

SpherePoly HarmonicDecomposition::reassemble() const {
  SpherePoly acc(dim);
  for (const auto& part : parts) acc += SpherePoly(part.h);
  return acc;
}

const HarmonicPart* HarmonicDecomposition::part_of_degree(int degree) const {
  for (const auto& part : parts)
    if (part.degree == degree) return &part;
  return nullptr;
}

Rat moment_integral(int dim, const Monomial& m) {
  if (m.any_odd()) return Rat(0);
  Int num = 1;
  int half_total = 0;
  for (int k = 0; k <= dim; ++k) {
    const int beta = m[k] / 2;
    num *= double_factorial_odd(static_cast<unsigned long>(beta));
    half_total += beta;
  }
  Int den = 1;
  for (int s = 0; s < half_total; ++s) den *= dim + 1 + 2 * s;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat integrate(const SpherePoly& p) {
  Rat acc = 0;
  for (const auto& [m, c] : p.rep().terms()) acc += c * moment_integral(p.dim(), m);
  return acc;
}

CRat integrate(const CSpherePoly& p) {
  CRat acc;
  for (const auto& [m, c] : p.rep().terms()) acc += c * CRat(moment_integral(p.dim(), m));
  return acc;
}

Rat inner_product(const SpherePoly& p, const SpherePoly& q) { return integrate(p * q); }

std::size_t harmonic_dimension(int dim, int j) {
  if (j < 0) return 0;
  const Int all = binomial(static_cast<unsigned long>(dim + j), static_cast<unsigned long>(dim));
  const Int low = j >= 2 ? binomial(static_cast<unsigned long>(dim + j - 2), static_cast<unsigned long>(dim)) : Int(0);
  return Int(all - low).get_ui();
}

std::size_t harmonic_dimension_by_rank(int dim, int j) {
  const int nv = dim + 1;
  const auto source = monomials_of_degree(nv, j);
  if (j < 2) return source.size();
  const MonomialIndex target(monomials_of_degree(nv, j - 2));
  DenseMatrix<Rat> a(target.list.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const RawPoly image = ambient_laplacian(RawPoly::monomial(nv, source[col]));
    for (const auto& [m, c] : image.terms()) a(target.at(m), col) = c;
  }
  return source.size() - rank(a);
}

}  // namespace speclab
