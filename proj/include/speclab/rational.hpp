#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace speclab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  enum class Kind {
    InvalidArgument,
    DimensionMismatch,
    IndexOutOfRange,
    NotEigenfunction,
    NegativeDiscriminant,
    NotInField,
    OnSpectrum,
    BelowBound,
    Parse,
    CostGuard,
    Internal
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Exact rational in lowest terms with positive denominator (GMP keeps the invariant).
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
/// Accepts "p", "p/q", or a finite decimal such as "-0.3" or "1.25e-2"; the decimal is converted exactly.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);
double to_double(const Rat& q);

bool is_integer(const Rat& q);
/// Exact square root when q is the square of a rational.
std::optional<Rat> rational_sqrt(const Rat& q);
Int factorial(unsigned long k);
/// (2k-1)!! with the convention (-1)!! = 1.
Int double_factorial_odd(unsigned long k);
Int binomial(unsigned long n, unsigned long k);

/// Complex number with rational real and imaginary parts.
struct CRat {
  Rat re;
  Rat im;

  CRat() = default;
  CRat(Rat r) : re(std::move(r)), im(0) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  CRat(long r) : re(r), im(0) {}

  static CRat i() { return CRat(Rat(0), Rat(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  CRat conj() const { return CRat(re, -im); }

  CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
  CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
  CRat& operator*=(const CRat& o);
  CRat& operator/=(const CRat& o);

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  friend CRat operator-(const CRat& a) { return CRat(-a.re, -a.im); }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
};

/// "a/b+c/d i" as used by the matrix dump; pure reals print without the imaginary part.
std::string to_string(const CRat& z);
CRat parse_crat(std::string_view text);

/// Element a + b·√d of the quadratic field ℚ[√d], d a positive non-square integer
/// (or b = 0, in which case the value is rational and d is irrelevant).
class QuadSurd {
public:
  QuadSurd() = default;
  QuadSurd(Rat a) : a_(std::move(a)) {}
  QuadSurd(Rat a, Rat b, Int d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coefficient() const { return b_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  std::optional<Rat> as_rational() const;
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  /// Principal square root, provided it lies in ℚ (for rational input, possibly a new field ℚ[√·])
  /// or in the same field ℚ[√d].
  QuadSurd sqrt() const;

  QuadSurd& operator+=(const QuadSurd& o);
  QuadSurd& operator-=(const QuadSurd& o);
  QuadSurd& operator*=(const QuadSurd& o);

  friend QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
  friend QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
  friend QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
  friend QuadSurd operator-(const QuadSurd& x) { return QuadSurd(-x.a_, -x.b_, x.d_); }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() == 0; }
  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  void unify(const QuadSurd& o);
  void normalize();

  Rat a_{0};
  Rat b_{0};
  Int d_{1};
};

}  // namespace speclab
