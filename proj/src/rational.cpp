#include "speclab/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace speclab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s, std::string_view whole) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const bool neg = !digits.empty() && digits.front() == '-';
  const std::string body = neg ? digits.substr(1) : digits;
  if (body.empty()) throw Error(Error::Kind::Parse, "malformed number: '" + std::string(whole) + "'");
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Error::Kind::Parse, "malformed number: '" + std::string(whole) + "'");
  }
  Int v(body, 10);
  return neg ? Int(-v) : v;
}

Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(Error::Kind::Parse, "empty number");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Int num = parse_int(trim(s.substr(0, slash)), s);
    const Int den = parse_int(trim(s.substr(slash + 1)), s);
    if (den == 0) throw Error(Error::Kind::Parse, "zero denominator in '" + std::string(s) + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    const Int ex = parse_int(s.substr(e + 1), s);
    if (!ex.fits_slong_p() || abs(ex) > 4096) throw Error(Error::Kind::Parse, "exponent out of range");
    exponent = ex.get_si();
  }
  std::string digits(mantissa);
  long frac_len = 0;
  if (const auto dot = digits.find('.'); dot != std::string::npos) {
    frac_len = static_cast<long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw Error(Error::Kind::Parse, "malformed number: '" + std::string(s) + "'");
  }
  const Int num = parse_int(digits, s);
  const long shift = exponent - frac_len;
  Rat q = shift >= 0 ? Rat(num * pow10(static_cast<unsigned long>(shift)))
                     : Rat(num, pow10(static_cast<unsigned long>(-shift)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

double to_double(const Rat& q) { return q.get_d(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Int double_factorial_odd(unsigned long k) {
  Int r = 1;
  for (unsigned long i = 1; i <= k; ++i) r *= 2 * i - 1;
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

CRat& CRat::operator*=(const CRat& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  Rat r = re * o.re - im * o.im;
  Rat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

CRat& CRat::operator/=(const CRat& o) {
  if (o.is_zero()) throw Error(Error::Kind::InvalidArgument, "division by zero");
  if (sgn(o.im) == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  const Rat norm = o.re * o.re + o.im * o.im;
  Rat r = (re * o.re + im * o.im) / norm;
  Rat i = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const CRat& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  std::string out = z.re.get_str();
  out += sgn(z.im) < 0 ? "-" : "+";
  out += Rat(abs(z.im)).get_str();
  out += " i";
  return out;
}

CRat parse_crat(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty() || s.back() != 'i') return CRat(parse_rat(s));
  std::string_view body = trim(s.substr(0, s.size() - 1));
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+") return CRat(Rat(0), Rat(1));
    if (body == "-") return CRat(Rat(0), Rat(-1));
    return CRat(Rat(0), parse_rat(body));
  }
  const Rat re = parse_rat(body.substr(0, split));
  std::string_view ims = trim(body.substr(split));
  Rat im;
  if (ims == "+") im = 1;
  else if (ims == "-") im = -1;
  else im = parse_rat(ims);
  return CRat(re, im);
}

QuadSurd::QuadSurd(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) <= 0) throw Error(Error::Kind::InvalidArgument, "radicand must be positive");
  normalize();
}

void QuadSurd::normalize() {
  if (sgn(b_) == 0) {
    d_ = 1;
    return;
  }
  for (unsigned long p = 2; p <= 1000; ++p) {
    const unsigned long p2 = p * p;
    if (Int(p2) > d_) break;
    while (mpz_divisible_ui_p(d_.get_mpz_t(), p2)) {
      d_ /= p2;
      b_ *= p;
    }
  }
  if (mpz_perfect_square_p(d_.get_mpz_t())) {
    Int root;
    mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
    a_ += b_ * root;
    b_ = 0;
    d_ = 1;
  }
}

void QuadSurd::unify(const QuadSurd& o) {
  if (o.is_rational()) return;
  if (is_rational()) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_)
    throw Error(Error::Kind::NotInField,
                "mixing Q[sqrt(" + d_.get_str() + ")] and Q[sqrt(" + o.d_.get_str() + ")]");
}

std::optional<Rat> QuadSurd::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return a_;
}

int QuadSurd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  const Rat lhs = a_ * a_;
  const Rat rhs = b_ * b_ * Rat(d_);
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double QuadSurd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return a_.get_str();
  std::ostringstream os;
  const bool has_a = sgn(a_) != 0;
  if (has_a) os << a_.get_str() << (sgn(b_) < 0 ? " - " : " + ");
  else if (sgn(b_) < 0) os << "-";
  const Rat mag = abs(b_);
  if (mag != 1) os << mag.get_str() << "*";
  os << "sqrt(" << d_.get_str() << ")";
  return os.str();
}

QuadSurd QuadSurd::sqrt() const {
  if (sign() < 0) throw Error(Error::Kind::NegativeDiscriminant, "square root of negative value " + to_string());
  if (is_rational()) {
    if (auto r = rational_sqrt(a_)) return QuadSurd(*r);
    // sqrt(p/q) = sqrt(p q) / q
    const Int& p = a_.get_num();
    const Int& q = a_.get_den();
    return QuadSurd(Rat(0), Rat(1, q), p * q);
  }
  // (x + y sqrt d)^2 = A + B sqrt d  <=>  x^2 + d y^2 = A, 2 x y = B
  const Rat& A = a_;
  const Rat& B = b_;
  const Rat disc = A * A - B * B * Rat(d_);
  if (auto s = rational_sqrt(disc)) {
    for (int sgn_s : {1, -1}) {
      const Rat x2 = (A + Rat(sgn_s) * *s) / 2;
      if (sgn(x2) <= 0) continue;
      if (auto x = rational_sqrt(x2)) {
        QuadSurd root(*x, B / (2 * *x), d_);
        if (root.sign() < 0) root = -root;
        return root;
      }
    }
  }
  throw Error(Error::Kind::NotInField, "sqrt(" + to_string() + ") is not in Q[sqrt(" + d_.get_str() + ")]");
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
  unify(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
  unify(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
  unify(o);
  Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d_);
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

}  // namespace speclab
