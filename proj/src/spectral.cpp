#include "speclab/spectral.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace speclab {

namespace {

/// Rising factorial (a)_k = a(a+1)...(a+k−1).
Rat pochhammer(const Rat& a, long k) {
  Rat p = 1;
  for (long q = 0; q < k; ++q) p *= a + q;
  return p;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// RAII wrapper over an MPFR variable at the requested precision.
class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

SpectralValue float_gamma_ratio(const Rat& a, const Rat& b) {
  const int digits = working_precision_digits();
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623) + 32);
  BigFloat x(bits), y(bits), la(bits), lb(bits);
  mpfr_set_q(x.get(), a.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(y.get(), b.get_mpq_t(), MPFR_RNDN);
  int sa = 1, sb = 1;
  mpfr_lgamma(la.get(), &sa, x.get(), MPFR_RNDN);
  mpfr_lgamma(lb.get(), &sb, y.get(), MPFR_RNDN);
  mpfr_sub(la.get(), la.get(), lb.get(), MPFR_RNDN);
  mpfr_exp(la.get(), la.get(), MPFR_RNDN);
  if (sa * sb < 0) mpfr_neg(la.get(), la.get(), MPFR_RNDN);
  const double v = mpfr_get_d(la.get(), MPFR_RNDN);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, la.get());
  return SpectralValue::approx(v, buf.data());
}

Rat half(int n) { return make_rat(n, 2); }

/// Residue in r of B(r, j) at a pole r0 = n/2 + k; zero when row j is finite there.
std::optional<Rat> B_residue(int n, const Rat& r0, int j) {
  const Rat k = r0 - half(n);
  if (!is_integer(k) || sgn(k) < 0) return std::nullopt;
  const long kk = k.get_num().get_si();
  if (j <= kk) return Rat(0);
  Rat den = -1;
  for (long q = 0; q < j; ++q)
    if (q != kk) den *= Rat(q - kk);
  return pochhammer(half(n) + r0, j) / den;
}

/// Exact value if available, else the double.
struct Number {
  std::optional<Rat> q;
  double d = 0;
};

std::optional<Number> finite_of(const SpectralValue& v) {
  if (v.kind == SpectralValue::Kind::Pole) return std::nullopt;
  if (v.kind == SpectralValue::Kind::Residue) return Number{v.residue_exact, to_double(*v.residue_exact)};
  return Number{v.exact, v.value};
}

bool numbers_agree(const Number& x, const Rat& cx, const Number& y, const Rat& cy) {
  if (x.q && y.q) return *x.q * cx == *y.q * cy;
  const double lhs = (x.q ? to_double(*x.q) : x.d) * to_double(cx);
  const double rhs = (y.q ? to_double(*y.q) : y.d) * to_double(cy);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return false;
  return std::abs(lhs - rhs) <= 1e-12 * scale || scale < 1e-300;
}

std::optional<Rat> pole_residue(SpectralFamily family, int n, const Rat& r, int j) {
  if (family == SpectralFamily::ScalarZ) {
    const Rat j0 = -r - half(n);
    if (!is_integer(j0) || sgn(j0) < 0) return std::nullopt;
    return scalar_Z_residue(n, static_cast<int>(j0.get_num().get_si()), j).residue_exact;
  }
  if (family == SpectralFamily::ScalarB) return B_residue(n, r, j);
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------------------------

SpectralValue SpectralValue::finite(Rat q) {
  SpectralValue v;
  v.value = to_double(q);
  v.exact = std::move(q);
  return v;
}

SpectralValue SpectralValue::approx(double d, std::string digits) {
  SpectralValue v;
  v.value = d;
  v.digits = std::move(digits);
  return v;
}

SpectralValue SpectralValue::pole() {
  SpectralValue v;
  v.kind = Kind::Pole;
  v.value = std::numeric_limits<double>::quiet_NaN();
  return v;
}

SpectralValue SpectralValue::residue(Rat q) {
  SpectralValue v;
  v.kind = Kind::Residue;
  v.value = to_double(q);
  v.residue_exact = std::move(q);
  return v;
}

std::string SpectralValue::to_string() const {
  switch (kind) {
    case Kind::Pole: return "pole";
    case Kind::Residue: return speclab::to_string(*residue_exact);
    case Kind::Finite: return exact ? speclab::to_string(*exact) : fmt17(value);
  }
  return "";
}

std::string SpectralValue::kind_name() const {
  switch (kind) {
    case Kind::Pole: return "pole";
    case Kind::Residue: return "residue";
    case Kind::Finite: return exact ? "exact" : "float";
  }
  return "";
}

int working_precision_digits() {
  const char* env = std::getenv("SPECLAB_PRECISION");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 16 || v > 100000)
    throw Error(Error::Kind::InvalidArgument, "SPECLAB_PRECISION must be an integer in [16, 100000]");
  return static_cast<int>(v);
}

SpectralValue gamma_ratio(const Rat& a, const Rat& b) {
  const Rat diff = a - b;
  if (!is_integer(diff)) return float_gamma_ratio(a, b);
  const long k = diff.get_num().get_si();
  // Γ(b+k)/Γ(b) = (b)_k; as a product it is also the correct limit when b (and possibly a) is a pole
  if (k >= 0) return SpectralValue::finite(pochhammer(b, k));
  const Rat p = pochhammer(a, -k);
  if (sgn(p) == 0) return SpectralValue::pole();
  return SpectralValue::finite(1 / p);
}

SpectralValue scalar_Z(int n, const Rat& r, int j) {
  if (j < 0) throw Error(Error::Kind::InvalidArgument, "level must be nonnegative");
  return gamma_ratio(half(n) + j + r, half(n) + j - r);
}

SpectralValue scalar_Z_residue(int n, int j0, int j) {
  if (j0 < 0 || j < 0) throw Error(Error::Kind::InvalidArgument, "levels must be nonnegative");
  if (j > j0) return SpectralValue::residue(Rat(0));
  const int q = j0 - j;
  // Γ(n+j+j0) = (n+j+j0−1)!
  Rat v(1, 1);
  v /= Rat(factorial(static_cast<unsigned long>(q)) * factorial(static_cast<unsigned long>(n + j + j0 - 1)));
  if (q % 2 != 0) v = -v;
  return SpectralValue::residue(v);
}

Rat diff_product_eigen(int n, int r, int j) {
  if (r < 1 || j < 0) throw Error(Error::Kind::InvalidArgument, "need r >= 1 and j >= 0");
  Rat p = 1;
  for (int q = 1; q <= r; ++q) p *= Rat(j * (n - 1 + j)) + (half(n) + q - 1) * (half(n) - q);
  return p;
}

SpectralValue B_normalized(int n, const Rat& r, int j) {
  if (j < 0) throw Error(Error::Kind::InvalidArgument, "level must be nonnegative");
  const Rat den = pochhammer(half(n) - r, j);
  if (sgn(den) == 0) return SpectralValue::pole();
  return SpectralValue::finite(pochhammer(half(n) + r, j) / den);
}

Rat mu_prime(int n, int j) {
  if (j < 0) throw Error(Error::Kind::InvalidArgument, "level must be nonnegative");
  Rat s = 0;
  for (int p = 0; p < j; ++p) s += 2 / (half(n) + p);
  return s;
}

LogComparison log_comparison(int n, int j) {
  return LogComparison{mu_prime(n, j), 2 * std::log(static_cast<double>(n - 1 + 2 * j) / (n - 1))};
}

std::array<Rat, 3> cubic_roots(const Rat& lambda) { return {Rat(-lambda), Rat(lambda - 1), Rat(lambda + 1)}; }

Rat dirac_oddpoly_eigen(int k, const Rat& lambda) {
  if (k < 0) throw Error(Error::Kind::InvalidArgument, "k must be nonnegative");
  Rat a = lambda;
  for (int q = 1; q <= k; ++q) a *= lambda * lambda - q * q;
  return a;
}

namespace {

/// Dense univariate polynomial over ℚ, low degree first.
struct UPoly {
  std::vector<Rat> c;

  static UPoly constant(const Rat& a) { return UPoly{{a}}; }
  static UPoly linear(const Rat& a0, const Rat& a1) { return UPoly{{a0, a1}}; }

  UPoly operator*(const UPoly& o) const {
    UPoly r{std::vector<Rat>(c.size() + o.c.size() - 1, Rat(0))};
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t k = 0; k < o.c.size(); ++k) r.c[i + k] += c[i] * o.c[k];
    return r;
  }
  UPoly operator+(const UPoly& o) const {
    UPoly r{std::vector<Rat>(std::max(c.size(), o.c.size()), Rat(0))};
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  UPoly operator-(const UPoly& o) const { return *this + o * constant(Rat(-1)); }
  bool is_zero() const {
    for (const auto& a : c)
      if (sgn(a) != 0) return false;
    return true;
  }
};

/// α evaluated at the polynomial argument x (itself a polynomial in λ).
UPoly alpha_of(int k, const UPoly& x) {
  UPoly a = x;
  for (int q = 1; q <= k; ++q) a = a * (x * x - UPoly::constant(Rat(q * q)));
  return a;
}

}  // namespace

std::array<bool, 3> oddpoly_identity_holds(int k) {
  if (k < 0) throw Error(Error::Kind::InvalidArgument, "k must be nonnegative");
  const UPoly lam = UPoly::linear(Rat(0), Rat(1));
  const std::array<UPoly, 3> mus{UPoly::linear(Rat(1), Rat(1)), UPoly::linear(Rat(-1), Rat(1)),
                                 UPoly::linear(Rat(0), Rat(-1))};
  const UPoly kh = UPoly::constant(Rat(k) + make_rat(1, 2));
  std::array<bool, 3> out{};
  for (int s = 0; s < 3; ++s) {
    const UPoly& mu = mus[s];
    const UPoly gap = (mu * mu - lam * lam) * UPoly::constant(make_rat(1, 2));
    const UPoly lhs = alpha_of(k, mu) * (gap - kh);
    const UPoly rhs = alpha_of(k, lam) * (gap + kh);
    out[s] = (lhs - rhs).is_zero();
  }
  return out;
}

SpectralValue dirac_alpha(int n, const Rat& k, const Rat& lambda) {
  if (is_integer(k + half(n)))
    throw Error(Error::Kind::InvalidArgument, "excluded parameters: k + n/2 is an integer (k = " + to_string(k) +
                                                  ", n = " + std::to_string(n) + ")");
  if (sgn(lambda) == 0) throw Error(Error::Kind::InvalidArgument, "lambda = 0 is not a Dirac eigenvalue");
  SpectralValue v = gamma_ratio(lambda + k + 1, lambda - k);
  if (sgn(lambda) < 0 && (n + 1) % 2 != 0) {
    if (v.exact) v.exact = -*v.exact;
    v.value = -v.value;
    if (!v.digits.empty()) v.digits = v.digits[0] == '-' ? v.digits.substr(1) : "-" + v.digits;
  }
  return v;
}

Rat dirac_half_eigen(const Rat& lambda) {
  if (sgn(lambda) == 0) throw Error(Error::Kind::InvalidArgument, "lambda = 0 is not a Dirac eigenvalue");
  const Rat s(sgn(lambda));
  return lambda * abs(lambda) - s / 4;
}

Rat A1_eigen(int n, int j) { return make_rat(n - 1, 2) + j; }

// ---------------------------------------------------------------------------------------------

std::string family_name(SpectralFamily f) {
  switch (f) {
    case SpectralFamily::ScalarZ: return "scalar_Z";
    case SpectralFamily::ScalarZResidue: return "scalar_Z_residue";
    case SpectralFamily::ScalarB: return "scalar_B";
    case SpectralFamily::MuPrime: return "scalar_mu_prime";
    case SpectralFamily::DiffProduct: return "diff_product";
    case SpectralFamily::A1: return "A1";
    case SpectralFamily::DiracAlpha: return "dirac_alpha";
    case SpectralFamily::DiracOddPoly: return "dirac_oddpoly";
    case SpectralFamily::DiracHalf: return "dirac_half";
    case SpectralFamily::Cubic: return "cubic";
  }
  return "";
}

SpectrumTable scalar_table(SpectralFamily family, int n, const Rat& parameter, int jmax) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  if (jmax < 0) throw Error(Error::Kind::InvalidArgument, "jmax must be nonnegative");
  SpectrumTable t{n, family, parameter, {}};
  for (int j = 0; j <= jmax; ++j) {
    SpectralValue v;
    switch (family) {
      case SpectralFamily::ScalarZ: v = scalar_Z(n, parameter, j); break;
      case SpectralFamily::ScalarZResidue: {
        if (!is_integer(parameter) || sgn(parameter) < 0)
          throw Error(Error::Kind::InvalidArgument, "residue family needs a nonnegative integer j0");
        v = scalar_Z_residue(n, static_cast<int>(parameter.get_num().get_si()), j);
        break;
      }
      case SpectralFamily::ScalarB: v = B_normalized(n, parameter, j); break;
      case SpectralFamily::MuPrime: v = SpectralValue::finite(mu_prime(n, j)); break;
      case SpectralFamily::DiffProduct: {
        if (!is_integer(parameter) || sgn(parameter) <= 0)
          throw Error(Error::Kind::InvalidArgument, "differential product family needs a positive integer r");
        v = SpectralValue::finite(diff_product_eigen(n, static_cast<int>(parameter.get_num().get_si()), j));
        break;
      }
      case SpectralFamily::A1: v = SpectralValue::finite(A1_eigen(n, j)); break;
      default: throw Error(Error::Kind::InvalidArgument, family_name(family) + " is not a scalar family");
    }
    t.rows.push_back(SpectrumRow{Rat(j), std::move(v)});
  }
  return t;
}

SpectrumTable dirac_table(SpectralFamily family, int n, const Rat& parameter, const std::vector<Rat>& levels) {
  SpectrumTable t{n, family, parameter, {}};
  for (const auto& l : levels) {
    switch (family) {
      case SpectralFamily::DiracAlpha: t.rows.push_back({l, dirac_alpha(n, parameter, l)}); break;
      case SpectralFamily::DiracOddPoly: {
        if (!is_integer(parameter) || sgn(parameter) < 0)
          throw Error(Error::Kind::InvalidArgument, "odd polynomial family needs a nonnegative integer k");
        t.rows.push_back({l, SpectralValue::finite(dirac_oddpoly_eigen(static_cast<int>(parameter.get_num().get_si()), l))});
        break;
      }
      case SpectralFamily::DiracHalf: t.rows.push_back({l, SpectralValue::finite(dirac_half_eigen(l))}); break;
      case SpectralFamily::Cubic:
        for (const auto& root : cubic_roots(l)) t.rows.push_back({l, SpectralValue::finite(root)});
        break;
      default: throw Error(Error::Kind::InvalidArgument, family_name(family) + " is not a Dirac family");
    }
  }
  return t;
}

std::vector<Rat> dirac_levels(int n, int jmax) {
  std::vector<Rat> out;
  for (int j = 0; j <= jmax; ++j) {
    const Rat l = half(n) + j;
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

std::string SpectrumTable::to_csv() const {
  std::ostringstream os;
  os << "level,value,kind\n";
  for (const auto& row : rows) os << to_string(row.level) << ',' << row.value.to_string() << ',' << row.value.kind_name() << '\n';
  return os.str();
}

std::string SpectrumTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["family"] = family_name(family);
  doc["parameter"] = to_string(parameter);
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["level"] = to_string(row.level);
    r["value"] = row.value.to_string();
    r["kind"] = row.value.kind_name();
    if (row.value.kind == SpectralValue::Kind::Finite) r["decimal"] = row.value.exact ? to_double(*row.value.exact) : row.value.value;
    if (!row.value.digits.empty()) r["digits"] = row.value.digits;
    rows_json.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows_json);
  return doc.dump(2) + "\n";
}

std::string SpectrumTable::to_text() const {
  std::ostringstream os;
  os << family_name(family) << " (n=" << n << ", parameter=" << to_string(parameter) << ")\n";
  for (const auto& row : rows)
    os << "  " << to_string(row.level) << "\t" << row.value.to_string() << "\t" << row.value.kind_name() << '\n';
  return os.str();
}

bool recurrence_check(int n, const Rat& r, const SpectrumTable& table) {
  if (table.rows.size() < 2) return false;
  if (table.family == SpectralFamily::ScalarZResidue && r != -half(n) - table.parameter) return false;
  const bool meromorphic = table.family == SpectralFamily::ScalarZ || table.family == SpectralFamily::ScalarB;
  for (std::size_t k = 0; k + 1 < table.rows.size(); ++k) {
    const auto& lo = table.rows[k];
    const auto& hi = table.rows[k + 1];
    if (!is_integer(lo.level) || hi.level != lo.level + 1) return false;
    const int j = static_cast<int>(lo.level.get_num().get_si());
    const Rat c_hi = Rat(n + 2 * j) - 2 * r;  // multiplies μ_{j+1}
    const Rat c_lo = Rat(n + 2 * j) + 2 * r;  // multiplies μ_j
    const auto f_lo = finite_of(lo.value);
    const auto f_hi = finite_of(hi.value);
    if (f_lo && f_hi) {
      if (!numbers_agree(*f_hi, c_hi, *f_lo, c_lo)) return false;
      continue;
    }
    if (!meromorphic) return false;
    // multiply the relation by (r − r_pole): residues must agree, and where only one side has a
    // pole its coefficient must vanish, leaving derivative(coefficient)·residue = other side
    const auto res_lo = f_lo ? std::optional<Rat>(Rat(0)) : pole_residue(table.family, n, r, j);
    const auto res_hi = f_hi ? std::optional<Rat>(Rat(0)) : pole_residue(table.family, n, r, j + 1);
    if (!res_lo || !res_hi) return false;
    if (*res_hi * c_hi != *res_lo * c_lo) return false;
    if (!f_lo && f_hi) {
      if (sgn(c_lo) != 0) return false;
      if (!numbers_agree(*f_hi, c_hi, Number{Rat(2) * *res_lo, 0}, Rat(1))) return false;
    }
    if (f_lo && !f_hi) {
      if (sgn(c_hi) != 0) return false;
      if (!numbers_agree(Number{Rat(-2) * *res_hi, 0}, Rat(1), *f_lo, c_lo)) return false;
    }
  }
  return true;
}

}  // namespace speclab
