#include "speclab/clifford.hpp"

#include "speclab/parallel.hpp"
#include "speclab/spectral.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace speclab {

using CMatrix = DenseMatrix<CRat>;
using CPoly = Poly<CRat>;

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

CMatrix pauli(char which) {
  CMatrix m(2, 2);
  switch (which) {
    case 'X': m(0, 1) = CRat(1); m(1, 0) = CRat(1); break;
    case 'Y': m(0, 1) = -CRat::i(); m(1, 0) = CRat::i(); break;
    case 'Z': m(0, 0) = CRat(1); m(1, 1) = CRat(-1); break;
    default: m = CMatrix::identity(2);
  }
  return m;
}

/// Γ-algebra plus the products e_i e_j used by Γ_x.
struct GammaData {
  GammaAlgebra g;
  std::vector<std::vector<CMatrix>> ee;
};

const GammaData& gamma_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GammaData>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto d = std::make_unique<GammaData>();
    d->g = gamma_build(n);
    d->ee.assign(n + 1, std::vector<CMatrix>(n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) d->ee[i][j] = d->g.e[i] * d->g.e[j];
    slot = std::move(d);
  }
  return *slot;
}

std::complex<double> to_complex(const CRat& z) { return {to_double(z.re), to_double(z.im)}; }

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_complex(m(i, j));
  return r;
}

CMatrix shifted(CMatrix m, const Rat& mu) {
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, k) -= CRat(mu);
  return m;
}

bool on_dirac_lattice(int n, const Rat& mu) {
  const Rat j = abs(mu) - make_rat(n, 2);
  return is_integer(j) && sgn(j) >= 0;
}

}  // namespace

int spin_dimension(int n) {
  if (n < 2 || n > kMaxVars - 1) throw Error(Error::Kind::InvalidArgument, "unsupported sphere dimension");
  return 1 << ((n + 1) / 2);
}

GammaAlgebra gamma_build(int n) {
  const int dim = spin_dimension(n);
  const int m = (n + 1) / 2;
  auto string_of = [&](int k, char middle) {
    CMatrix acc = CMatrix::identity(1);
    for (int s = 0; s < m; ++s) acc = kron(acc, pauli(s < k ? 'Z' : (s == k ? middle : 'I')));
    return acc;
  };
  GammaAlgebra g{n, dim, {}};
  for (int idx = 0; idx <= n; ++idx) {
    const CMatrix herm = idx == 2 * m ? string_of(m, 'I') : string_of(idx / 2, idx % 2 == 0 ? 'X' : 'Y');
    g.e.push_back(herm * CRat::i());
  }
  return g;
}

const GammaAlgebra& gamma_algebra(int n) { return gamma_data(n).g; }

bool gamma_relations_hold(const GammaAlgebra& g) {
  const auto id = CMatrix::identity(g.dim_spin);
  for (int i = 0; i <= g.n; ++i) {
    if (g.e[i].rows() != static_cast<std::size_t>(g.dim_spin)) return false;
    for (int j = 0; j <= g.n; ++j) {
      const CMatrix anti = g.e[i] * g.e[j] + g.e[j] * g.e[i];
      const CMatrix want = i == j ? id * CRat(-2) : CMatrix(g.dim_spin, g.dim_spin);
      if (!(anti == want)) return false;
    }
    if (!(g.e[i] * (g.e[i] * CRat(-1)) == id)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------

SpinorPoly::SpinorPoly(int n) : n_(n), comp_(spin_dimension(n), CSpherePoly(n)) {}

SpinorPoly::SpinorPoly(std::vector<CSpherePoly> components) : comp_(std::move(components)) {
  if (comp_.empty()) throw Error(Error::Kind::InvalidArgument, "spinor needs components");
  n_ = comp_[0].dim();
  if (static_cast<int>(comp_.size()) != spin_dimension(n_))
    throw Error(Error::Kind::DimensionMismatch, "wrong number of spinor components");
  for (const auto& c : comp_)
    if (c.dim() != n_) throw Error(Error::Kind::DimensionMismatch, "spinor components on different spheres");
}

SpinorPoly SpinorPoly::constant(int n, int a) { return scalar_times(CSpherePoly::constant(n, CRat(1)), a); }

SpinorPoly SpinorPoly::scalar_times(const CSpherePoly& f, int a) {
  SpinorPoly s(f.dim());
  if (a < 0 || a >= s.spin_dim()) throw Error(Error::Kind::IndexOutOfRange, "spinor component out of range");
  s.comp_[a] = f;
  return s;
}

bool SpinorPoly::is_zero() const {
  return std::all_of(comp_.begin(), comp_.end(), [](const CSpherePoly& c) { return c.is_zero(); });
}

int SpinorPoly::degree() const {
  int d = -1;
  for (const auto& c : comp_) d = std::max(d, c.degree());
  return d;
}

void SpinorPoly::check_same(const SpinorPoly& o) const {
  if (n_ != o.n_ || comp_.size() != o.comp_.size())
    throw Error(Error::Kind::DimensionMismatch, "spinors live on different spheres");
}

SpinorPoly& SpinorPoly::operator+=(const SpinorPoly& o) {
  check_same(o);
  for (std::size_t a = 0; a < comp_.size(); ++a) comp_[a] += o.comp_[a];
  return *this;
}

SpinorPoly& SpinorPoly::operator-=(const SpinorPoly& o) {
  check_same(o);
  for (std::size_t a = 0; a < comp_.size(); ++a) comp_[a] -= o.comp_[a];
  return *this;
}

SpinorPoly& SpinorPoly::operator*=(const CRat& s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

SpinorPoly SpinorPoly::times_coordinate(int i) const {
  if (i < 0 || i > n_) throw Error(Error::Kind::IndexOutOfRange, "coordinate index out of range");
  SpinorPoly r = *this;
  for (auto& c : r.comp_) c = c.times_coordinate(i);
  return r;
}

SpinorPoly SpinorPoly::act(const CMatrix& m) const {
  const std::size_t d = comp_.size();
  if (m.rows() != d || m.cols() != d) throw Error(Error::Kind::DimensionMismatch, "matrix does not act on this spinor");
  SpinorPoly r(n_);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (!m(a, b).is_zero() && !comp_[b].is_zero()) r.comp_[a] += comp_[b] * m(a, b);
  return r;
}

std::string to_string(const SpinorPoly& psi) {
  std::string out = "[";
  for (int a = 0; a < psi.spin_dim(); ++a) {
    if (a) out += "; ";
    out += to_string(psi[a]);
  }
  return out + "]";
}

SpinorPoly clifford_x(const SpinorPoly& psi) {
  const int n = psi.dim(), d = psi.spin_dim();
  const auto& g = gamma_algebra(n);
  std::vector<CPoly> out(d, CPoly(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int b = 0; b < d; ++b) {
      if (psi[b].is_zero()) continue;
      const CPoly shifted_b = psi[b].rep().times_variable(i);
      for (int a = 0; a < d; ++a)
        if (!g.e[i](a, b).is_zero()) out[a] += shifted_b * g.e[i](a, b);
    }
  std::vector<CSpherePoly> comps;
  for (const auto& p : out) comps.emplace_back(p);
  return SpinorPoly(std::move(comps));
}

SpinorPoly gamma_op(const SpinorPoly& psi) {
  const int n = psi.dim(), d = psi.spin_dim();
  const auto& data = gamma_data(n);
  std::vector<std::vector<CPoly>> der(d);
  for (int b = 0; b < d; ++b)
    for (int j = 0; j <= n; ++j) der[b].push_back(psi[b].rep().derivative(j));
  std::vector<CPoly> out(d, CPoly(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int b = 0; b < d; ++b) {
        // angular derivative x_i∂_j − x_j∂_i; it preserves the ideal, so any representative works
        const CPoly L = der[b][j].times_variable(i) - der[b][i].times_variable(j);
        if (L.is_zero()) continue;
        for (int a = 0; a < d; ++a) {
          const CRat& c = data.ee[i][j](a, b);
          if (!c.is_zero()) out[a] -= L * c;
        }
      }
  std::vector<CSpherePoly> comps;
  for (const auto& p : out) comps.emplace_back(p);
  return SpinorPoly(std::move(comps));
}

SpinorPoly SpinorModel::P(const SpinorPoly& psi) const {
  if (psi.dim() != n) throw Error(Error::Kind::DimensionMismatch, "spinor lives on a different sphere");
  return clifford_x(gamma_op(psi) - psi * CRat(make_rat(n, 2) + mass_offset));
}

SpinorPoly SpinorModel::U(int i, const SpinorPoly& psi) const {
  const SpinorPoly xp = psi.times_coordinate(i);
  return (P(P(xp)) - P(P(psi)).times_coordinate(i)) * CRat(make_rat(1, 2));
}

SpinorPoly SpinorModel::y(int i, const SpinorPoly& psi) const {
  return P(psi.times_coordinate(i)) - P(psi).times_coordinate(i);
}

SpinorPoly dirac_apply(const SpinorPoly& psi) { return SpinorModel{psi.dim()}.P(psi); }
SpinorPoly U_spin(int i, const SpinorPoly& psi) { return SpinorModel{psi.dim()}.U(i, psi); }
SpinorPoly y_apply(int i, const SpinorPoly& psi) { return SpinorModel{psi.dim()}.y(i, psi); }

SpinorPoly foothold(int n, int a, int sign) {
  const SpinorPoly psi0 = SpinorPoly::constant(n, a);
  return sign >= 0 ? psi0 + clifford_x(psi0) : psi0 - clifford_x(psi0);
}

bool is_eigenspinor(const SpinorPoly& psi, const Rat& lambda, const SpinorModel& model) {
  return model.P(psi) == psi * CRat(lambda);
}

SpinorLadders spinor_ladders(int i, const SpinorPoly& psi, const Rat& lambda) {
  const SpinorModel model{psi.dim()};
  if (!is_eigenspinor(psi, lambda, model))
    throw Error(Error::Kind::NotEigenfunction, "input is not an eigenspinor for lambda = " + to_string(lambda));
  const SpinorPoly u = model.U(i, psi), x = psi.times_coordinate(i), y = model.y(i, psi);
  const CRat l(lambda), h(make_rat(1, 2));
  return SpinorLadders{u + x * l + y * h, u - x * l - y * h, u - x * h - y * l};
}

std::size_t dirac_multiplicity(int n, int j) {
  return static_cast<std::size_t>(spin_dimension(n)) * binomial(n + j - 1, j).get_ui();
}

std::vector<Rat> generate_dirac_spectrum(int n, int count) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  if (count < 1) throw Error(Error::Kind::InvalidArgument, "count must be positive");
  const Rat m = make_rat(n, 2), h = make_rat(1, 2);
  const Rat top = m + count - 1;
  std::vector<Rat> found{-m};
  for (std::size_t k = 0; k < found.size(); ++k) {
    const Rat l = found[k];
    const auto roots = cubic_roots(l);  // −λ, λ−1, λ+1
    const std::array<Rat, 3> factors{(n - 1) * (l + h) * (l - h), -2 * (l - m) * (l - h), -2 * (l + m) * (l + h)};
    for (int s = 0; s < 3; ++s) {
      if (sgn(factors[s]) == 0 || abs(roots[s]) > top) continue;
      if (std::find(found.begin(), found.end(), roots[s]) == found.end()) found.push_back(roots[s]);
    }
  }
  std::sort(found.begin(), found.end(), [](const Rat& a, const Rat& b) {
    const Rat aa = abs(a), ab = abs(b);
    return aa != ab ? aa < ab : a > b;
  });
  return found;
}

// ---------------------------------------------------------------------------------------------

SpinVec flatten(const SpinorPoly& psi) {
  SpinVec v;
  for (int a = 0; a < psi.spin_dim(); ++a)
    for (const auto& [m, c] : psi[a].rep().terms()) v.emplace(SpinKey{m, a}, c);
  return v;
}

SpinorPoly unflatten(int n, const SpinVec& v) {
  std::vector<CPoly> comps(spin_dimension(n), CPoly(n + 1));
  for (const auto& [k, c] : v) comps.at(k.comp).add_term(k.m, c);
  std::vector<CSpherePoly> out;
  for (const auto& p : comps) out.emplace_back(p);
  return SpinorPoly(std::move(out));
}

TruncationSpace::TruncationSpace(int n, int N) : n_(n), N_(N) {
  if (N < 0) throw Error(Error::Kind::InvalidArgument, "truncation degree must be nonnegative");
  const int d = spin_dimension(n);
  for (const auto& m : sphere_basis_monomials(n, N)) {
    const CSpherePoly f(CPoly::monomial(n + 1, m));
    for (int a = 0; a < d; ++a) {
      const SpinorPoly s = SpinorPoly::scalar_times(f, a);
      span_.insert(flatten(s));
      span_.insert(flatten(clifford_x(s)));
    }
  }
  for (const auto& row : span_.rows()) basis_.push_back(unflatten(n, row));
}

std::vector<CRat> TruncationSpace::coordinates(const SpinorPoly& psi) const {
  auto c = span_.coordinates(flatten(psi));
  if (!c) throw Error(Error::Kind::Internal, "spinor lies outside the truncation V_" + std::to_string(N_));
  return *c;
}

bool TruncationSpace::contains(const SpinorPoly& psi) const { return span_.contains(flatten(psi)); }

SpinorPoly TruncationSpace::combine(const std::vector<CRat>& coords) const {
  if (coords.size() != basis_.size()) throw Error(Error::Kind::DimensionMismatch, "coordinate vector has wrong size");
  SpinorPoly r(n_);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) r += basis_[k] * coords[k];
  return r;
}

namespace {

CMatrix operator_matrix(const TruncationSpace& from, const TruncationSpace& to,
                        const std::function<SpinorPoly(const SpinorPoly&)>& op) {
  CMatrix m(to.size(), from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    const auto c = to.coordinates(op(from.basis()[k]));
    for (std::size_t r = 0; r < c.size(); ++r) m(r, k) = c[r];
  }
  return m;
}

nlohmann::ordered_json matrix_json(const CMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json basis_json(const std::vector<SpinorPoly>& basis) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& b : basis) {
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : b.components()) comps.push_back(to_string(c));
    out.push_back(std::move(comps));
  }
  return out;
}

}  // namespace

TruncationModel truncation_matrices(int n, int N, const SpinorModel* model_ptr) {
  const SpinorModel model = model_ptr ? *model_ptr : SpinorModel{n};
  if (model.n != n) throw Error(Error::Kind::DimensionMismatch, "operator model has a different n");
  const TruncationSpace space(n, N), range(n, N + 1);
  TruncationModel t;
  t.n = n;
  t.N = N;
  t.dim_spin = spin_dimension(n);
  t.basis = space.basis();
  t.range_basis = range.basis();
  t.P = operator_matrix(space, space, [&](const SpinorPoly& p) { return model.P(p); });
  t.P_range = operator_matrix(range, range, [&](const SpinorPoly& p) { return model.P(p); });
  t.inclusion = operator_matrix(space, range, [](const SpinorPoly& p) { return p; });
  for (int i = 0; i <= n; ++i) {
    t.X.push_back(operator_matrix(space, range, [&](const SpinorPoly& p) { return p.times_coordinate(i); }));
    t.U.push_back(operator_matrix(space, range, [&](const SpinorPoly& p) { return model.U(i, p); }));
    t.Y.push_back(operator_matrix(space, range, [&](const SpinorPoly& p) { return model.y(i, p); }));
  }
  return t;
}

std::string TruncationModel::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["N"] = N;
  doc["dim_spin"] = dim_spin;
  doc["basis"] = basis_json(basis);
  doc["range_basis"] = basis_json(range_basis);
  doc["P"] = matrix_json(P);
  doc["P_range"] = matrix_json(P_range);
  doc["inclusion"] = matrix_json(inclusion);
  for (const auto& [name, list] : {std::pair{"X", &X}, std::pair{"U", &U}, std::pair{"Y", &Y}}) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& m : *list) arr.push_back(matrix_json(m));
    doc[name] = std::move(arr);
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------------------------

bool DiracSpectrum::all_on_lattice() const {
  return unsnapped == 0 && std::all_of(entries.begin(), entries.end(), [](const SpectrumEntry& e) { return e.on_lattice; });
}

bool DiracSpectrum::complete() const {
  std::size_t total = 0;
  for (const auto& e : entries) {
    if (!e.certified) return false;
    total += e.multiplicity;
  }
  return unsnapped == 0 && total == dimension;
}

std::string DiracSpectrum::to_csv() const {
  std::ostringstream os;
  os << "eigenvalue,multiplicity,certified\n";
  for (const auto& e : entries) os << to_string(e.eigenvalue) << ',' << e.multiplicity << ',' << (e.certified ? "true" : "false") << '\n';
  return os.str();
}

std::string DiracSpectrum::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["N"] = N;
  doc["dimension"] = dimension;
  doc["unsnapped"] = unsnapped;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["eigenvalue"] = to_string(e.eigenvalue);
    row["multiplicity"] = e.multiplicity;
    row["numeric_multiplicity"] = e.numeric_multiplicity;
    row["on_lattice"] = e.on_lattice;
    row["certified"] = e.certified;
    arr.push_back(std::move(row));
  }
  doc["entries"] = std::move(arr);
  doc["complete"] = complete();
  return doc.dump(2) + "\n";
}

DiracSpectrum truncation_spectrum(const CMatrix& P, int n, int N) {
  if (P.rows() != P.cols()) throw Error(Error::Kind::DimensionMismatch, "spectrum needs a square matrix");
  DiracSpectrum out;
  out.n = n;
  out.N = N;
  out.dimension = P.rows();
  if (P.rows() == 0) return out;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(P), false);
  if (solver.info() != Eigen::Success) throw Error(Error::Kind::Internal, "numeric eigensolver failed");
  std::map<Rat, std::size_t> snapped;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const auto ev = solver.eigenvalues()(k);
    const double half_units = std::round(2 * ev.real());
    if (std::abs(ev - std::complex<double>(half_units / 2, 0)) > 1e-9) {
      ++out.unsnapped;
      continue;
    }
    ++snapped[make_rat(static_cast<long>(half_units), 2)];
  }
  for (const auto& [mu, count] : snapped) {
    SpectrumEntry e;
    e.eigenvalue = mu;
    e.numeric_multiplicity = count;
    e.multiplicity = kernel(shifted(P, mu)).size();
    e.on_lattice = on_dirac_lattice(n, mu);
    e.certified = e.multiplicity == count;
    out.entries.push_back(e);
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    const Rat aa = abs(a.eigenvalue), ab = abs(b.eigenvalue);
    return aa != ab ? aa < ab : a.eigenvalue > b.eigenvalue;
  });
  return out;
}

DiracSpectrum truncation_spectrum(const TruncationModel& model) { return truncation_spectrum(model.P, model.n, model.N); }

std::vector<SpinorPoly> eigenspinor_basis(const TruncationSpace& space, const CMatrix& P, const Rat& lambda) {
  std::vector<SpinorPoly> out;
  for (const auto& v : kernel(shifted(P, lambda))) out.push_back(space.combine(v));
  return out;
}

std::vector<SpinorPoly> eigenspinor_basis(int n, int N, const Rat& lambda) {
  const TruncationSpace space(n, N);
  const SpinorModel model{n};
  const CMatrix P = operator_matrix(space, space, [&](const SpinorPoly& p) { return model.P(p); });
  return eigenspinor_basis(space, P, lambda);
}

// ---------------------------------------------------------------------------------------------

DiracRefutation dirac_refute(int n, const Rat& candidate) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  DiracRefutation chain;
  chain.n = n;
  chain.start = candidate;
  chain.bound = make_rat(n * (n - 1), 4);
  if (on_dirac_lattice(n, candidate)) {
    const Rat j = abs(candidate) - make_rat(n, 2);
    throw Error(Error::Kind::OnSpectrum, "on spectrum, j=" + to_string(j));
  }
  if (candidate * candidate < chain.bound)
    throw Error(Error::Kind::BelowBound, "candidate already violates lambda^2 >= n(n-1)/4");
  Rat cur = candidate;
  chain.values.push_back(cur);
  if (sgn(cur) < 0) {
    cur = -cur;
    chain.values.push_back(cur);
    chain.branches.push_back("-lambda");
  }
  while (cur * cur >= chain.bound) {
    cur -= 1;
    chain.values.push_back(cur);
    chain.branches.push_back("lambda-1");
  }
  return chain;
}

// ---------------------------------------------------------------------------------------------
// Identity suite

namespace {

using Residual = std::vector<SpinorPoly>;

/// op2_i(op1_i ψ) for op ∈ {U, x, y}, indexed [op2][op1], plus the first-order images.
struct SecondOrder {
  std::array<SpinorPoly, 3> first;               // U ψ, x ψ, y ψ
  std::array<std::array<SpinorPoly, 3>, 3> second;
};

enum { kU = 0, kX = 1, kY = 2 };

SpinorPoly apply_op(const SpinorModel& model, int op, int i, const SpinorPoly& psi) {
  switch (op) {
    case kU: return model.U(i, psi);
    case kX: return psi.times_coordinate(i);
    default: return model.y(i, psi);
  }
}

SecondOrder second_order(const SpinorModel& model, int i, const SpinorPoly& psi) {
  SecondOrder s;
  for (int a = 0; a < 3; ++a) s.first[a] = apply_op(model, a, i, psi);
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 3; ++a) s.second[b][a] = apply_op(model, b, i, s.first[a]);
  return s;
}

/// Σ_i (U_i + c_x x_i + c_y y_i)(U_i + d_x x_i + d_y y_i) from the second-order table.
SpinorPoly quadratic_sum(const std::vector<SecondOrder>& tab, int n, const Rat& cx, const Rat& cy, const Rat& dx,
                         const Rat& dy) {
  const std::array<Rat, 3> outer{Rat(1), cx, cy}, inner{Rat(1), dx, dy};
  SpinorPoly acc(n);
  for (const auto& s : tab)
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a) {
        const Rat w = outer[b] * inner[a];
        if (sgn(w) != 0) acc += s.second[b][a] * CRat(w);
      }
  return acc;
}

SpinorPoly odd_poly(const SpinorModel& model, int k, SpinorPoly v) {
  v = model.P(v);
  for (int q = 1; q <= k; ++q) v = model.P(model.P(v)) - v * CRat(Rat(q * q));
  return v;
}

struct InputSweep {
  std::string id;
  std::string formula;
  std::function<Residual(std::size_t)> fn;
};

IdentityResult run_sweep(const InputSweep& s, int n, int N, const std::vector<SpinorPoly>& inputs, int jobs) {
  std::vector<std::string> failure(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t k) {
    const Residual res = s.fn(k);
    for (std::size_t r = 0; r < res.size(); ++r)
      if (!res[r].is_zero()) {
        failure[k] = "input " + to_string(inputs[k]) + ", component " + std::to_string(r) + ", residual " +
                     to_string(res[r]);
        return;
      }
  });
  IdentityResult out{s.id, s.formula, n, N, true, inputs.size(), {}};
  for (const auto& f : failure)
    if (!f.empty()) {
      out.pass = false;
      out.counterexample = f;
      break;
    }
  return out;
}

IdentityResult check(std::string id, std::string formula, int n, int N, std::size_t cases, std::string failure) {
  return IdentityResult{std::move(id), std::move(formula), n, N, failure.empty(), cases, std::move(failure)};
}

/// Exact eigendecomposition of a certified truncation matrix: columns of V are eigenvectors.
struct EigenFrame {
  CMatrix V, Vinv;
  std::vector<Rat> values;  ///< eigenvalue of each column
};

std::optional<EigenFrame> eigen_frame(const CMatrix& P, const DiracSpectrum& spec) {
  if (!spec.complete()) return std::nullopt;
  const std::size_t d = P.rows();
  EigenFrame f{CMatrix(d, d), CMatrix(d, d), {}};
  std::size_t col = 0;
  for (const auto& e : spec.entries)
    for (const auto& v : kernel(shifted(P, e.eigenvalue))) {
      for (std::size_t r = 0; r < d; ++r) f.V(r, col) = v[r];
      f.values.push_back(e.eigenvalue);
      ++col;
    }
  CMatrix aug(d, 2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug(r, c) = f.V(r, c);
    aug(r, d + r) = CRat(1);
  }
  const auto piv = rref(aug);
  if (piv.size() != d || piv.back() != d - 1) return std::nullopt;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) f.Vinv(r, c) = aug(r, d + c);
  return f;
}

CMatrix spectral_matrix(const EigenFrame& f, const std::function<Rat(const Rat&)>& alpha) {
  CMatrix D = f.V;
  for (std::size_t c = 0; c < D.cols(); ++c) {
    const CRat a(alpha(f.values[c]));
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, c) *= a;
  }
  return D * f.Vinv;
}

Eigen::MatrixXcd spectral_matrix_numeric(const EigenFrame& f, const std::function<double(const Rat&)>& alpha) {
  const Eigen::MatrixXcd V = to_eigen(f.V), Vinv = to_eigen(f.Vinv);
  Eigen::VectorXcd diag(f.values.size());
  for (std::size_t k = 0; k < f.values.size(); ++k) diag(k) = alpha(f.values[k]);
  return V * diag.asDiagonal() * Vinv;
}

}  // namespace

VerificationReport verify_spinor_identities(int n, int N, const SpinorVerifyOptions& opts) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  if (N < 1) throw Error(Error::Kind::InvalidArgument, "truncation degree must be at least 1");
  const SpinorModel model = opts.model ? *opts.model : SpinorModel{n};
  if (model.n != n) throw Error(Error::Kind::DimensionMismatch, "operator model has a different n");
  const int jobs = opts.jobs;

  VerificationReport report;
  report.suite = "spinor";
  const auto& g = gamma_algebra(n);
  report.results.push_back(check("clifford_relations", "e_i e_j + e_j e_i = -2 delta_ij, e_i^{-1} = -e_i", n, N,
                                 static_cast<std::size_t>((n + 1) * (n + 1)),
                                 gamma_relations_hold(g) ? "" : "relation violated"));

  const TruncationSpace space(n, N), range(n, N + 1);
  const auto& inputs = space.basis();
  const int nv = n + 1;

  // second-order tables and P-powers per basis element, computed once
  std::vector<std::vector<SecondOrder>> tables(inputs.size());
  std::vector<SpinorPoly> P2(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t k) {
    for (int i = 0; i < nv; ++i) tables[k].push_back(second_order(model, i, inputs[k]));
    P2[k] = model.P(model.P(inputs[k]));
  });

  const Rat h = make_rat(1, 2);
  std::vector<InputSweep> sweeps;
  sweeps.push_back({"conformal_covariance", "P (U_i - x_i/2) = (U_i + x_i/2) P", [&](std::size_t k) {
                      Residual r;
                      const SpinorPoly p = model.P(inputs[k]);
                      for (int i = 0; i < nv; ++i) {
                        const auto& s = tables[k][i];
                        const SpinorPoly lhs = model.P(s.first[kU] - s.first[kX] * CRat(h));
                        r.push_back(lhs - model.U(i, p) - p.times_coordinate(i) * CRat(h));
                      }
                      return r;
                    }});
  sweeps.push_back({"sum_y_squared", "sum_i y_i^2 = -n", [&](std::size_t k) {
                      SpinorPoly acc = inputs[k] * CRat(n);
                      for (const auto& s : tables[k]) acc += s.second[kY][kY];
                      return Residual{acc};
                    }});
  sweeps.push_back({"sum_x_y", "sum_i x_i y_i = sum_i y_i x_i = 0", [&](std::size_t k) {
                      SpinorPoly xy(n), yx(n);
                      for (const auto& s : tables[k]) {
                        xy += s.second[kX][kY];
                        yx += s.second[kY][kX];
                      }
                      return Residual{xy, yx};
                    }});
  sweeps.push_back({"sum_U_y_commutator", "sum_i [U_i, y_i] = 0", [&](std::size_t k) {
                      SpinorPoly acc(n);
                      for (const auto& s : tables[k]) acc += s.second[kU][kY] - s.second[kY][kU];
                      return Residual{acc};
                    }});
  sweeps.push_back({"sum_U_squared", "sum_i U_i^2 = -P^2 - n/4", [&](std::size_t k) {
                      SpinorPoly acc = P2[k] + inputs[k] * CRat(make_rat(n, 4));
                      for (const auto& s : tables[k]) acc += s.second[kU][kU];
                      return Residual{acc};
                    }});
  sweeps.push_back({"shifted_U_square", "sum_i (U_i - (n/2) x_i)^2 = -P^2 + n(n-1)/4", [&](std::size_t k) {
                      const Rat c = -make_rat(n, 2);
                      SpinorPoly acc = quadratic_sum(tables[k], n, c, Rat(0), c, Rat(0));
                      return Residual{acc + P2[k] - inputs[k] * CRat(make_rat(n * (n - 1), 4))};
                    }});
  sweeps.push_back({"anticommutator_sum", "sum_i (x_i U_i + U_i x_i) = 0", [&](std::size_t k) {
                      SpinorPoly acc(n);
                      for (const auto& s : tables[k]) acc += s.second[kX][kU] + s.second[kU][kX];
                      return Residual{acc};
                    }});
  sweeps.push_back({"commutator_sum", "sum_i [U_i, x_i] = -n", [&](std::size_t k) {
                      SpinorPoly acc = inputs[k] * CRat(n);
                      for (const auto& s : tables[k]) acc += s.second[kU][kX] - s.second[kX][kU];
                      return Residual{acc};
                    }});
  const std::vector<std::pair<Rat, Rat>> ab{{Rat(0), Rat(0)},           {Rat(1), h},  {Rat(-1), -h},
                                            {-h, Rat(2)},               {make_rat(3, 2), Rat(-1)}};
  for (const auto& [a, b] : ab) {
    sweeps.push_back({"two_parameter_sum[a=" + to_string(a) + ",b=" + to_string(b) + "]",
                      "sum_i (U_i-(a+1)x_i-b y_i)(U_i+a x_i+b y_i) = -P^2 - 3n/4 - a^2 - a(n+1) + b^2 n",
                      [&, a, b](std::size_t k) {
                        const SpinorPoly lhs = quadratic_sum(tables[k], n, -(a + 1), -b, a, b);
                        const Rat c = -make_rat(3 * n, 4) - a * a - a * (n + 1) + b * b * n;
                        return Residual{lhs + P2[k] - inputs[k] * CRat(c)};
                      }});
  }
  for (int k = 0; k <= 2; ++k) {
    sweeps.push_back({"odd_polynomial_intertwinor[k=" + std::to_string(k) + "]",
                      "P(P^2-1)...(P^2-k^2) (U_i - (k+1/2) x_i) = (U_i + (k+1/2) x_i) P(P^2-1)...(P^2-k^2)",
                      [&, k](std::size_t idx) {
                        Residual r;
                        const CRat c(Rat(k) + h);
                        const SpinorPoly top = odd_poly(model, k, inputs[idx]);
                        for (int i = 0; i < nv; ++i) {
                          const auto& s = tables[idx][i];
                          const SpinorPoly lhs = odd_poly(model, k, s.first[kU] - s.first[kX] * c);
                          r.push_back(lhs - model.U(i, top) - top.times_coordinate(i) * c);
                        }
                        return r;
                      }});
  }
  for (const auto& s : sweeps) report.results.push_back(run_sweep(s, n, N, inputs, jobs));

  // spectrum of the truncations
  const TruncationModel tm = truncation_matrices(n, N, &model);
  const DiracSpectrum spec = truncation_spectrum(tm.P, n, N);
  const DiracSpectrum spec_range = truncation_spectrum(tm.P_range, n, N + 1);
  {
    std::string fail;
    for (const auto* sp : {&spec, &spec_range}) {
      if (!sp->all_on_lattice()) fail = "eigenvalue off the lattice +-(n/2+j) in V_" + std::to_string(sp->N);
      else if (!sp->complete()) fail = "eigenvectors not certified exactly in V_" + std::to_string(sp->N);
      if (!fail.empty()) break;
    }
    report.results.push_back(check("truncation_spectrum", "spec(P|V_N) ⊂ {±(n/2+j)}, certified by exact kernels", n, N,
                                   spec.entries.size() + spec_range.entries.size(), fail));
  }
  {
    std::string fail;
    const Rat bound = make_rat(n * (n - 1), 4);
    for (const auto* sp : {&spec, &spec_range})
      for (const auto& e : sp->entries)
        if (e.eigenvalue * e.eigenvalue < bound) fail = "eigenvalue " + to_string(e.eigenvalue) + " violates the bound";
    report.results.push_back(check("lichnerowicz_bound", "lambda^2 >= n(n-1)/4", n, N,
                                   spec.entries.size() + spec_range.entries.size(), fail));
  }

  // eigenspinors for every level of V_N, and eigenspaces of V_{N+1} as ladder targets
  struct Level {
    Rat lambda;
    std::vector<SpinorPoly> funcs;
  };
  std::vector<Level> levels;
  std::map<Rat, std::size_t> range_dims;
  std::map<Rat, std::vector<SpinorPoly>> range_bases;
  {
    std::string fail;
    std::size_t cases = 0;
    for (int j = 0; j <= N + 1; ++j)
      for (int sign : {1, -1}) {
        const Rat l = Rat(sign) * (make_rat(n, 2) + j);
        auto rb = eigenspinor_basis(range, tm.P_range, l);
        range_dims[l] = rb.size();
        ++cases;
        if (rb.size() != dirac_multiplicity(n, j) && fail.empty())
          fail = "dim E(" + to_string(l) + ") = " + std::to_string(rb.size()) + ", expected " +
                 std::to_string(dirac_multiplicity(n, j));
        if (j <= N) {
          auto b = eigenspinor_basis(space, tm.P, l);
          ++cases;
          if (b.size() != dirac_multiplicity(n, j) && fail.empty())
            fail = "dim E(" + to_string(l) + ") in V_N = " + std::to_string(b.size());
          levels.push_back({l, std::move(b)});
        }
        range_bases[l] = std::move(rb);
      }
    report.results.push_back(check("eigenspace_dimensions", "dim E(±(n/2+j), P) = 2^floor(n/2) C(n+j-1, j)", n, N,
                                   cases, fail));
  }
  {
    std::string fail;
    for (int a = 0; a < g.dim_spin && fail.empty(); ++a)
      for (int sign : {1, -1})
        if (!is_eigenspinor(foothold(n, a, sign), Rat(-sign) * make_rat(n, 2), model))
          fail = "foothold " + std::to_string(a) + " sign " + std::to_string(sign) + " is not an eigenspinor";
    report.results.push_back(check("foothold", "P(psi0 ± x psi0) = ∓(n/2)(psi0 ± x psi0)", n, N,
                                   static_cast<std::size_t>(2 * g.dim_spin), fail));
  }

  // per-eigenspinor statements
  struct EigenCase {
    Rat lambda;
    SpinorPoly psi;
  };
  std::vector<EigenCase> eig;
  for (const auto& lv : levels)
    for (const auto& f : lv.funcs) eig.push_back({lv.lambda, f});

  std::vector<std::array<std::string, 7>> efail(eig.size());
  parallel_for(eig.size(), jobs, [&](std::size_t k) {
    const Rat& l = eig[k].lambda;
    const SpinorPoly& psi = eig[k].psi;
    const int sl = 0, sa = 1, ss = 2, sn = 3, nonvan = 4, cubic = 5, comp = 6;
    std::vector<SecondOrder> tab;
    for (int i = 0; i < nv; ++i) tab.push_back(second_order(model, i, psi));
    const CRat cl(l), ch(h);
    bool anyA = false, anyS = false, anyN = false;
    for (int i = 0; i < nv; ++i) {
      const auto& s = tab[i];
      const SpinorPoly A = s.first[kU] + s.first[kX] * cl + s.first[kY] * ch;
      const SpinorPoly S = s.first[kU] - s.first[kX] * cl - s.first[kY] * ch;
      const SpinorPoly Nn = s.first[kU] - s.first[kX] * ch - s.first[kY] * cl;
      anyA = anyA || !A.is_zero();
      anyS = anyS || !S.is_zero();
      anyN = anyN || !Nn.is_zero();
      if (efail[k][sl].empty() && (!is_eigenspinor(A, l + 1, model) || !is_eigenspinor(S, l - 1, model) ||
                                   !is_eigenspinor(Nn, -l, model)))
        efail[k][sl] = "lambda " + to_string(l) + ", i=" + std::to_string(i) + ": ladder image off target";
      // cubic and compressions
      const SpinorPoly& xv = s.first[kX];
      const Rat ls = l * l;
      const SpinorPoly c1 = model.P(xv) + xv * cl;
      const SpinorPoly c2 = model.P(c1) - c1 * CRat(l - 1);
      const SpinorPoly c3 = model.P(c2) - c2 * CRat(l + 1);
      if (efail[k][cubic].empty() && !c3.is_zero())
        efail[k][cubic] = "lambda " + to_string(l) + ", i=" + std::to_string(i) + ": cubic does not annihilate x_i psi";
      const auto roots = cubic_roots(l);
      for (int t = 0; t < 3 && efail[k][comp].empty(); ++t) {
        const Rat& mu = roots[t];
        auto project = [&](const SpinorPoly& v) {
          SpinorPoly w = v;
          Rat den = 1;
          for (int o = 0; o < 3; ++o) {
            if (o == t) continue;
            w = model.P(w) - w * CRat(roots[o]);
            den *= mu - roots[o];
          }
          return w * CRat(1 / den);
        };
        const SpinorPoly pxm = project(xv);
        if (!(project(s.first[kU]) == pxm * CRat((mu * mu - ls) / 2)) || !(project(s.first[kY]) == pxm * CRat(mu - l)))
          efail[k][comp] = "lambda " + to_string(l) + ", mu " + to_string(mu) + ", i=" + std::to_string(i);
      }
    }
    const Rat m = make_rat(n, 2);
    const bool wantA = sgn((l + m) * (l + h)) != 0, wantS = sgn((l - m) * (l - h)) != 0, wantN = true;
    if (anyA != wantA || anyS != wantS || anyN != wantN)
      efail[k][nonvan] = "lambda " + to_string(l) + ": nonvanishing pattern A " + std::to_string(anyA) + " S " +
                         std::to_string(anyS) + " N " + std::to_string(anyN);
    const SpinorPoly sa_sum = quadratic_sum(tab, n, -(l + 1), -h, l, h);
    if (!(sa_sum == psi * CRat(-2 * (l + m) * (l + h)))) efail[k][sa] = "lambda " + to_string(l);
    const SpinorPoly as_sum = quadratic_sum(tab, n, l - 1, h, -l, -h);
    if (!(as_sum == psi * CRat(-2 * (l - m) * (l - h)))) efail[k][ss] = "lambda " + to_string(l);
    const SpinorPoly nn_sum = quadratic_sum(tab, n, -h, l, -h, -l);
    if (!(nn_sum == psi * CRat((n - 1) * (l + h) * (l - h)))) efail[k][sn] = "lambda " + to_string(l);
  });
  auto first_failure = [&](int slot) {
    for (const auto& f : efail)
      if (!f[slot].empty()) return f[slot];
    return std::string();
  };
  report.results.push_back(check("ladder_targets", "A psi ∈ E(λ+1), S psi ∈ E(λ-1), N psi ∈ E(-λ)", n, N, eig.size(),
                                 first_failure(0)));
  report.results.push_back(check("ladder_sum_SA", "sum_i S_i A_i psi = -2(λ+n/2)(λ+1/2) psi", n, N, eig.size(),
                                 first_failure(1)));
  report.results.push_back(check("ladder_sum_AS", "sum_i A_i S_i psi = -2(λ-n/2)(λ-1/2) psi", n, N, eig.size(),
                                 first_failure(2)));
  report.results.push_back(check("ladder_sum_NN", "sum_i N_i N_i psi = (n-1)(λ+1/2)(λ-1/2) psi", n, N, eig.size(),
                                 first_failure(3)));
  report.results.push_back(check("ladder_nonvanishing", "some A_i psi != 0 iff λ != -n/2; some S_i psi != 0 iff λ != n/2",
                                 n, N, eig.size(), first_failure(4)));
  report.results.push_back(check("cubic_annihilation", "(P+λ)(P-λ+1)(P-λ-1) x_i psi = 0", n, N, eig.size(),
                                 first_failure(5)));
  report.results.push_back(check("eigenspace_compression",
                                 "pi_mu U_i psi = ((mu^2-λ^2)/2) pi_mu x_i psi, pi_mu y_i psi = (mu-λ) pi_mu x_i psi", n,
                                 N, eig.size(), first_failure(6)));

  // span of x_i E, P x_i E, P² x_i E against the three adjacent eigenspaces
  {
    std::string fail;
    for (const auto& lv : levels) {
      SpanBuilder<SpinKey, CRat, SpinKeyOrder> gen, target;
      std::size_t target_dim = 0;
      for (const Rat& mu : cubic_roots(lv.lambda)) {
        auto it = range_bases.find(mu);
        if (it == range_bases.end()) continue;
        for (const auto& b : it->second) target.insert(flatten(b));
        target_dim += it->second.size();
      }
      bool inside = true;
      for (const auto& psi : lv.funcs)
        for (int i = 0; i < nv; ++i) {
          const SpinorPoly xv = psi.times_coordinate(i), px = model.P(xv), ppx = model.P(px);
          for (const auto* v : {&xv, &px, &ppx}) {
            const SpinVec f = flatten(*v);
            gen.insert(f);
            inside = inside && target.contains(f);
          }
        }
      if (fail.empty() && (!inside || gen.rank() != target_dim || target.rank() != target_dim))
        fail = "lambda " + to_string(lv.lambda) + ": rank " + std::to_string(gen.rank()) + " vs " +
               std::to_string(target_dim) + (inside ? "" : " (outside the adjacent eigenspaces)");
    }
    report.results.push_back(check("adjacent_span_rank", "span{x_i E, P x_i E, P^2 x_i E} = E(λ+1) ⊕ E(λ-1) ⊕ E(-λ)",
                                   n, N, levels.size(), fail));
  }

  // intertwinors built from the spectrum: exact for k = 1/2, gamma ratios for k = 1/4 and 1/3
  {
    const auto frame = eigen_frame(tm.P, spec);
    const auto frame_range = eigen_frame(tm.P_range, spec_range);
    std::string fail_half, fail_gamma, fail_levels;
    if (!frame || !frame_range) {
      fail_half = fail_gamma = "truncation spectrum not certified";
    } else {
      auto half = [](const Rat& l) { return dirac_half_eigen(l); };
      const CMatrix A = spectral_matrix(*frame, half), Ar = spectral_matrix(*frame_range, half);
      for (int i = 0; i < nv && fail_half.empty(); ++i) {
        const CMatrix lhs = Ar * (tm.U[i] - tm.X[i]);
        const CMatrix rhs = (tm.U[i] + tm.X[i]) * A;
        if (!(lhs == rhs)) fail_half = "i=" + std::to_string(i);
      }
      for (const Rat& k : {make_rat(1, 4), make_rat(1, 3)}) {
        if (is_integer(k + make_rat(n, 2))) continue;
        auto alpha = [&](const Rat& l) { return dirac_alpha(n, k, l).value; };
        const Eigen::MatrixXcd An = spectral_matrix_numeric(*frame, alpha), Anr = spectral_matrix_numeric(*frame_range, alpha);
        const double c = to_double(k) + 0.5;
        for (int i = 0; i < nv; ++i) {
          const Eigen::MatrixXcd U = to_eigen(tm.U[i]), X = to_eigen(tm.X[i]);
          const Eigen::MatrixXcd lhs = Anr * (U - c * X), rhs = (U + c * X) * An;
          const double scale = std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
          const double err = (lhs - rhs).cwiseAbs().maxCoeff();
          if (err > 1e-12 * scale && fail_gamma.empty())
            fail_gamma = "k=" + to_string(k) + ", i=" + std::to_string(i) + ", relative error " + std::to_string(err / scale);
        }
      }
      // compressed relation between every pair of adjacent eigenvalues present in the model
      std::vector<Rat> vals;
      for (const auto& e : spec_range.entries) vals.push_back(e.eigenvalue);
      for (const Rat& l : vals)
        for (const Rat& mu : {Rat(l + 1), Rat(l - 1), Rat(-l)}) {
          if (std::find(vals.begin(), vals.end(), mu) == vals.end()) continue;
          const Rat gap = (mu * mu - l * l) / 2;
          if (!(dirac_half_eigen(mu) * (gap - 1) == dirac_half_eigen(l) * (gap + 1)) && fail_levels.empty())
            fail_levels = "k=1/2 at lambda " + to_string(l) + ", mu " + to_string(mu);
          for (const Rat& k : {make_rat(1, 4), make_rat(1, 3)}) {
            if (is_integer(k + make_rat(n, 2))) continue;
            const double a = dirac_alpha(n, k, mu).value * to_double(gap - k - h);
            const double b = dirac_alpha(n, k, l).value * to_double(gap + k + h);
            if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b)) && fail_levels.empty())
              fail_levels = "k=" + to_string(k) + " at lambda " + to_string(l) + ", mu " + to_string(mu);
          }
        }
      if (vals.empty()) fail_levels = "no eigenvalues found";
    }
    report.results.push_back(check("half_order_intertwinor", "(P|P| - P/(4|P|)) (U_i - x_i) = (U_i + x_i) (P|P| - P/(4|P|))",
                                   n, N, static_cast<std::size_t>(nv), fail_half));
    report.results.push_back(check("gamma_ratio_intertwinor",
                                   "A (U_i - (k+1/2) x_i) = (U_i + (k+1/2) x_i) A, A = sgn(P)^{n+1} G(P+k+1)/G(P-k), k=1/4,1/3",
                                   n, N, static_cast<std::size_t>(2 * nv), fail_gamma));
    report.results.push_back(check("intertwinor_compression",
                                   "alpha(mu)((mu^2-λ^2)/2 - (k+1/2)) = alpha(λ)((mu^2-λ^2)/2 + (k+1/2))", n, N,
                                   spec_range.entries.size(), fail_levels));
  }
  return report;
}

}  // namespace speclab
