#include "speclab/polynomial.hpp"

#include <cctype>
#include <cstdio>

namespace speclab {

std::string coeff_to_string(double c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

namespace {

class PolyParser {
public:
  PolyParser(int nvars, std::string_view text) : nvars_(nvars), s_(text) {}

  RawPoly parse() {
    RawPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Error::Kind::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'x' || c == '.' || std::isdigit(static_cast<unsigned char>(c));
  }

  RawPoly expr() {
    RawPoly acc = signed_term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += signed_term();
      } else if (peek('-')) {
        ++pos_;
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  RawPoly signed_term() {
    int sign = 1;
    while (peek('+') || peek('-')) {
      if (s_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    RawPoly t = term();
    return sign < 0 ? -t : t;
  }

  RawPoly term() {
    RawPoly acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        const RawPoly d = power();
        if (d.degree() > 0 || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rat(1) / d.coefficient(Monomial{});
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RawPoly power() {
    RawPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      RawPoly r = RawPoly::constant(nvars_, Rat(1));
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  RawPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RawPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index");
      const int var = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (var >= nvars_) fail("variable x" + std::to_string(var) + " out of range");
      return RawPoly::variable(nvars_, var);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < s_.size() && (s_[look] == '-' || s_[look] == '+')) ++look;
        if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
          pos_ = look;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
      }
      return RawPoly::constant(nvars_, parse_rat(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  int nvars_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

void enumerate(int nvars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

RawPoly parse_poly(int nvars, std::string_view text) { return PolyParser(nvars, text).parse(); }

RawPoly radius_squared(int nvars) {
  RawPoly r(nvars);
  for (int k = 0; k < nvars; ++k) {
    Monomial m;
    m.set(k, 2);
    r.add_term(m, Rat(1));
  }
  return r;
}

RawPoly radius_power(int nvars, int k) {
  RawPoly r = RawPoly::constant(nvars, Rat(1));
  const RawPoly r2 = radius_squared(nvars);
  for (int i = 0; i < k; ++i) r = r * r2;
  return r;
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  Monomial cur;
  enumerate(nvars, 0, deg, cur, out);
  return out;
}

SpherePoly arith(const SpherePoly& p, const SpherePoly& q, ArithOp op, const Rat& scalar) {
  if (p.dim() != q.dim() && op != ArithOp::Scale)
    throw Error(Error::Kind::DimensionMismatch, "operands live on spheres of different dimension");
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
    case ArithOp::Scale: return p * scalar;
  }
  throw Error(Error::Kind::Internal, "unknown arithmetic op");
}

std::vector<Monomial> sphere_basis_monomials(int dim, int cap) {
  std::vector<Monomial> out;
  const int nv = dim + 1;
  for (int d = 0; d <= cap; ++d)
    for (const auto& m : monomials_of_degree(nv, d))
      if (m[0] <= 1) out.push_back(m);
  return out;
}

std::size_t sphere_basis_size(int dim, int cap) {
  if (cap < 0) return 0;
  // x0-free monomials of degree ≤ cap in dim variables, plus x0 times those of degree ≤ cap-1
  const Int a = binomial(static_cast<unsigned long>(dim + cap), static_cast<unsigned long>(dim));
  const Int b = cap >= 1 ? binomial(static_cast<unsigned long>(dim + cap - 1), static_cast<unsigned long>(dim)) : Int(0);
  const Int total = a + b;
  return total.fits_ulong_p() ? total.get_ui() : static_cast<std::size_t>(-1);
}

}  // namespace speclab
