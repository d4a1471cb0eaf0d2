#pragma once

#include "speclab/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace speclab {

/// Largest supported number of ambient coordinates (n + 1).
inline constexpr int kMaxVars = 12;

/// Exponent vector of x_0^{a_0} ... x_n^{a_n}. Slots past the ambient dimension stay zero.
class Monomial {
public:
  Monomial() { exps_.fill(0); }

  static Monomial unit(int var) {
    Monomial m;
    m.exps_[check(var)] = 1;
    return m;
  }

  int operator[](int var) const { return exps_[check(var)]; }
  void set(int var, int e) {
    if (e < 0 || e > 255) throw Error(Error::Kind::InvalidArgument, "exponent out of range");
    exps_[check(var)] = static_cast<std::uint8_t>(e);
  }
  int degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int k = 0; k < kMaxVars; ++k) {
      const int e = exps_[k] + o.exps_[k];
      if (e > 255) throw Error(Error::Kind::InvalidArgument, "exponent overflow");
      r.exps_[k] = static_cast<std::uint8_t>(e);
    }
    return r;
  }
  bool any_odd() const {
    for (auto e : exps_)
      if (e & 1) return true;
    return false;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  const std::array<std::uint8_t, kMaxVars>& exponents() const { return exps_; }

private:
  static int check(int var) {
    if (var < 0 || var >= kMaxVars) throw Error(Error::Kind::IndexOutOfRange, "variable index out of range");
    return var;
  }
  std::array<std::uint8_t, kMaxVars> exps_;
};

/// Canonical term order: ascending total degree, ties broken by descending lexicographic
/// exponent order (x0 heaviest). Iteration and serialisation follow this order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
  }
};

inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const CRat& c) { return c.is_zero(); }
inline bool coeff_is_zero(double c) { return c == 0.0; }

inline std::string coeff_to_string(const Rat& c) { return c.get_str(); }
inline std::string coeff_to_string(const CRat& c) { return to_string(c); }
std::string coeff_to_string(double c);

template <class V, class C>
V coeff_as(const C& c) {
  if constexpr (std::is_same_v<V, double> && std::is_same_v<C, Rat>) return c.get_d();
  else return V(c);
}

/// Sparse polynomial in x_0..x_{nvars-1}; a raw ambient representative, no reduction applied.
template <class C>
class Poly {
public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C, MonomialOrder>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw Error(Error::Kind::InvalidArgument, "unsupported number of variables");
  }

  static Poly constant(int nvars, const C& c) {
    Poly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }
  static Poly variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw Error(Error::Kind::IndexOutOfRange, "variable index out of range");
    Poly p(nvars);
    p.add_term(Monomial::unit(var), C(1));
    return p;
  }
  static Poly monomial(int nvars, const Monomial& m, const C& c = C(1)) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }
  void erase(const Monomial& m) { terms_.erase(m); }

  Poly& operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const C& s) {
    if (coeff_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  /// Multiplication by x_var.
  Poly times_variable(int var) const {
    Poly r(nvars_);
    const Monomial u = Monomial::unit(var);
    // shifting every exponent vector by the same unit keeps the term order
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * u, c);
    return r;
  }

  Poly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw Error(Error::Kind::IndexOutOfRange, "variable index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      const int e = m[var];
      if (e == 0) continue;
      Monomial dm = m;
      dm.set(var, e - 1);
      r.add_term(dm, c * C(e));
    }
    return r;
  }

  /// Homogeneous component of the given total degree.
  Poly homogeneous_part(int deg) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == deg) r.terms_.emplace(m, c);
    return r;
  }

  template <class V>
  V evaluate(const std::vector<V>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw Error(Error::Kind::DimensionMismatch, "point has wrong dimension");
    V acc(0);
    for (const auto& [m, c] : terms_) {
      V t = coeff_as<V>(c);
      for (int k = 0; k < nvars_; ++k)
        for (int e = 0; e < m[k]; ++e) t *= point[k];
      acc += t;
    }
    return acc;
  }

  template <class D, class F>
  Poly<D> map_coefficients(F&& f) const {
    Poly<D> r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  void check_same(const Poly& o) const {
    if (nvars_ != o.nvars_) throw Error(Error::Kind::DimensionMismatch, "polynomials live in different dimensions");
  }

private:
  int nvars_ = 1;
  TermMap terms_;
};

using RawPoly = Poly<Rat>;

/// Canonical text form: terms in canonical order, "c * x0^a0 x1^a1 ..." joined by " + ".
template <class C>
std::string to_string(const Poly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += coeff_to_string(c);
    std::string vars;
    for (int k = 0; k < p.nvars(); ++k) {
      if (m[k] == 0) continue;
      if (!vars.empty()) vars += ' ';
      vars += "x" + std::to_string(k) + "^" + std::to_string(m[k]);
    }
    if (!vars.empty()) out += " * " + vars;
  }
  return out;
}

/// Parses sums/products/powers of rationals and variables x0..x{nvars-1}; accepts the canonical
/// text form, implicit multiplication by juxtaposition, parentheses and division by constants.
RawPoly parse_poly(int nvars, std::string_view text);

/// Σ_{i} x_i^2 in nvars variables.
RawPoly radius_squared(int nvars);
/// r^{2k}.
RawPoly radius_power(int nvars, int k);

/// All monomials of total degree exactly `deg` in nvars variables, canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int deg);

// ---------------------------------------------------------------------------------------------
// Normal form modulo (Σ x_i^2 − 1)

/// Rewrites every x0^a with a ≥ 2 through x0^2 → 1 − Σ_{i≥1} x_i^2; the result has x0-degree ≤ 1.
template <class C>
Poly<C> reduce(const Poly<C>& raw) {
  const int nv = raw.nvars();
  // bucket terms by x0 exponent; rewriting lowers it by two at a time
  std::map<int, Poly<C>, std::greater<>> buckets;
  Poly<C> done(nv);
  for (const auto& [m, c] : raw.terms()) {
    if (m[0] <= 1) done.add_term(m, c);
    else {
      auto [it, _] = buckets.try_emplace(m[0], Poly<C>(nv));
      it->second.add_term(m, c);
    }
  }
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const int a = node.key();
    const Poly<C>& bucket = node.mapped();
    for (const auto& [m, c] : bucket.terms()) {
      Monomial base = m;
      base.set(0, a - 2);
      auto emit = [&](const Monomial& mm, const C& cc) {
        if (a - 2 <= 1) done.add_term(mm, cc);
        else {
          auto [it, _] = buckets.try_emplace(a - 2, Poly<C>(nv));
          it->second.add_term(mm, cc);
        }
      };
      emit(base, c);
      for (int k = 1; k < nv; ++k) {
        Monomial mm = base;
        mm.set(k, mm[k] + 2);
        emit(mm, -c);
      }
    }
  }
  return done;
}

template <class C>
bool is_normal_form(const Poly<C>& p) {
  for (const auto& [m, c] : p.terms())
    if (m[0] > 1) return false;
  return true;
}

/// Function on S^dim represented by its canonical normal form.
template <class C>
class BasicSpherePoly {
public:
  BasicSpherePoly() = default;
  explicit BasicSpherePoly(int dim) : rep_(dim + 1) { check_dim(dim); }
  /// Reduces any ambient representative.
  explicit BasicSpherePoly(const Poly<C>& raw) : rep_(reduce(raw)) { check_dim(raw.nvars() - 1); }

  static BasicSpherePoly constant(int dim, const C& c) { return BasicSpherePoly(Poly<C>::constant(dim + 1, c)); }
  static BasicSpherePoly coordinate(int dim, int i) { return BasicSpherePoly(Poly<C>::variable(dim + 1, i)); }

  int dim() const { return rep_.nvars() - 1; }
  const Poly<C>& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  int degree() const { return rep_.degree(); }

  BasicSpherePoly& operator+=(const BasicSpherePoly& o) { rep_ += o.rep_; return *this; }
  BasicSpherePoly& operator-=(const BasicSpherePoly& o) { rep_ -= o.rep_; return *this; }
  BasicSpherePoly& operator*=(const C& s) { rep_ *= s; return *this; }

  friend BasicSpherePoly operator+(BasicSpherePoly a, const BasicSpherePoly& b) { return a += b; }
  friend BasicSpherePoly operator-(BasicSpherePoly a, const BasicSpherePoly& b) { return a -= b; }
  friend BasicSpherePoly operator-(BasicSpherePoly a) { a.rep_ = -a.rep_; return a; }
  friend BasicSpherePoly operator*(BasicSpherePoly a, const C& s) { return a *= s; }
  friend BasicSpherePoly operator*(const C& s, BasicSpherePoly a) { return a *= s; }
  friend BasicSpherePoly operator*(const BasicSpherePoly& a, const BasicSpherePoly& b) {
    return BasicSpherePoly(a.rep_ * b.rep_);
  }
  friend bool operator==(const BasicSpherePoly& a, const BasicSpherePoly& b) { return a.rep_ == b.rep_; }

  BasicSpherePoly times_coordinate(int i) const { return BasicSpherePoly(rep_.times_variable(i)); }

private:
  static void check_dim(int dim) {
    if (dim < 2) throw Error(Error::Kind::InvalidArgument, "sphere dimension must be at least 2");
  }
  Poly<C> rep_{3};
};

using SpherePoly = BasicSpherePoly<Rat>;
using CSpherePoly = BasicSpherePoly<CRat>;

template <class C>
std::string to_string(const BasicSpherePoly<C>& p) {
  return to_string(p.rep());
}

enum class ArithOp { Add, Sub, Mul, Scale };

/// Ring operations with the normal form re-established; `scalar` is used only by Scale.
SpherePoly arith(const SpherePoly& p, const SpherePoly& q, ArithOp op, const Rat& scalar = Rat(1));

/// Monomials in normal form (x0-degree ≤ 1) of total degree ≤ cap: a basis of polynomial
/// functions of degree ≤ cap on S^dim.
std::vector<Monomial> sphere_basis_monomials(int dim, int cap);
std::size_t sphere_basis_size(int dim, int cap);

}  // namespace speclab
