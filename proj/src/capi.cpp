#include "speclab/speclab.h"

#include "speclab/clifford.hpp"
#include "speclab/entropy.hpp"
#include "speclab/harmonic.hpp"
#include "speclab/scalar_ops.hpp"
#include "speclab/spectral.hpp"

#include <json.hpp>

#include <cstring>
#include <sstream>
#include <string>

struct speclab_output {
  std::string text;
  bool passed = true;
};

struct speclab_poly {
  speclab::SpherePoly p;
};

namespace {

using namespace speclab;
using json = nlohmann::ordered_json;

thread_local std::string g_last_error;

// Cost guards: refuse requests whose exact work grows past what finishes in minutes.
constexpr std::size_t kMaxScalarBasis = 3000;
constexpr int kMaxScalarCap = 14;
constexpr std::size_t kMaxSpinorSpace = 160;
constexpr int kMaxCount = 5000;
constexpr int kMaxJ = 5000;
constexpr int kMaxOrder = 200;
constexpr int kMaxCutoff = 60;

speclab_status status_of(Error::Kind k) {
  switch (k) {
    case Error::Kind::InvalidArgument: return SPECLAB_E_INVALID_ARGUMENT;
    case Error::Kind::DimensionMismatch: return SPECLAB_E_DIMENSION_MISMATCH;
    case Error::Kind::IndexOutOfRange: return SPECLAB_E_INDEX_OUT_OF_RANGE;
    case Error::Kind::NotEigenfunction: return SPECLAB_E_NOT_EIGENFUNCTION;
    case Error::Kind::NegativeDiscriminant: return SPECLAB_E_NEGATIVE_DISCRIMINANT;
    case Error::Kind::NotInField: return SPECLAB_E_NOT_IN_FIELD;
    case Error::Kind::OnSpectrum: return SPECLAB_E_ON_SPECTRUM;
    case Error::Kind::BelowBound: return SPECLAB_E_BELOW_BOUND;
    case Error::Kind::Parse: return SPECLAB_E_PARSE;
    case Error::Kind::CostGuard: return SPECLAB_E_COST_GUARD;
    case Error::Kind::Internal: return SPECLAB_E_INTERNAL;
  }
  return SPECLAB_E_INTERNAL;
}

template <class F>
speclab_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SPECLAB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SPECLAB_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPECLAB_E_INTERNAL;
  }
}

void emit(speclab_output** out, std::string text, bool passed = true) {
  *out = new speclab_output{std::move(text), passed};
}

std::string str(const char* s) { return s ? std::string(s) : std::string(); }

void check_format(speclab_format f) {
  if (f != SPECLAB_FORMAT_JSON && f != SPECLAB_FORMAT_CSV && f != SPECLAB_FORMAT_TEXT)
    throw Error(Error::Kind::InvalidArgument, "unknown output format");
}

void check_n(int n) {
  if (n < 2) throw Error(Error::Kind::InvalidArgument, "n must be at least 2");
  if (n > 64) throw Error(Error::Kind::CostGuard, "n above 64 is refused");
}

std::string render(const VerificationReport& r, speclab_format f) {
  switch (f) {
    case SPECLAB_FORMAT_CSV: return r.to_csv();
    case SPECLAB_FORMAT_TEXT: return r.to_text();
    default: return r.to_json();
  }
}

std::string render(const SpectrumTable& t, speclab_format f) {
  switch (f) {
    case SPECLAB_FORMAT_CSV: return t.to_csv();
    case SPECLAB_FORMAT_TEXT: return t.to_text();
    default: return t.to_json();
  }
}

struct LevelRow {
  int j;
  Rat value;
  std::size_t multiplicity;
};

std::string render_levels(const std::string& kind, const std::string& op, int n, const std::vector<LevelRow>& rows,
                          speclab_format f) {
  std::ostringstream os;
  if (f == SPECLAB_FORMAT_CSV) {
    os << "j,eigenvalue,multiplicity\n";
    for (const auto& r : rows) os << r.j << ',' << to_string(r.value) << ',' << r.multiplicity << '\n';
    return os.str();
  }
  if (f == SPECLAB_FORMAT_TEXT) {
    os << kind << " spectrum (" << op << ", n=" << n << ")\n";
    for (const auto& r : rows) os << "  j=" << r.j << "\t" << to_string(r.value) << "\tmultiplicity " << r.multiplicity << '\n';
    return os.str();
  }
  json doc;
  doc["command"] = "spectrum";
  doc["kind"] = kind;
  doc["operator"] = op;
  doc["n"] = n;
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["j"] = r.j;
    row["eigenvalue"] = to_string(r.value);
    row["multiplicity"] = r.multiplicity;
    arr.push_back(std::move(row));
  }
  doc["values"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::size_t predicted_spinor_space(int n, int N) {
  std::size_t s = 0;
  for (int j = 0; j <= N; ++j) s += 2 * dirac_multiplicity(n, j);
  return s;
}

void guard_scalar(int n, int cap) {
  if (cap < 0) throw Error(Error::Kind::InvalidArgument, "cap must be nonnegative");
  if (cap > kMaxScalarCap || sphere_basis_size(n, cap) > kMaxScalarBasis)
    throw Error(Error::Kind::CostGuard, "scalar sweep with n=" + std::to_string(n) + ", cap=" + std::to_string(cap) +
                                            " exceeds the cost guard (basis size <= " + std::to_string(kMaxScalarBasis) +
                                            ", cap <= " + std::to_string(kMaxScalarCap) + ")");
}

void guard_spinor(int n, int N) {
  if (N < 0) throw Error(Error::Kind::InvalidArgument, "N must be nonnegative");
  if (n > 8 || predicted_spinor_space(n, N) > kMaxSpinorSpace)
    throw Error(Error::Kind::CostGuard, "spinor truncation with n=" + std::to_string(n) + ", N=" + std::to_string(N) +
                                            " exceeds the cost guard (dim V_N <= " + std::to_string(kMaxSpinorSpace) + ")");
}

void guard_entropy(int order, int cutoff) {
  if (order > kMaxOrder || cutoff > kMaxCutoff)
    throw Error(Error::Kind::CostGuard, "entropy run exceeds the cost guard (order <= " + std::to_string(kMaxOrder) +
                                            ", cutoff <= " + std::to_string(kMaxCutoff) + ")");
}

SpectralFamily family_of(const std::string& s) {
  if (s == "scalar") return SpectralFamily::ScalarZ;
  if (s == "scalar-B") return SpectralFamily::ScalarB;
  if (s == "residue") return SpectralFamily::ScalarZResidue;
  if (s == "mu-prime") return SpectralFamily::MuPrime;
  if (s == "diff-product") return SpectralFamily::DiffProduct;
  if (s == "A1") return SpectralFamily::A1;
  if (s == "dirac") return SpectralFamily::DiracAlpha;
  if (s == "dirac-odd") return SpectralFamily::DiracOddPoly;
  if (s == "dirac-half") return SpectralFamily::DiracHalf;
  if (s == "cubic") return SpectralFamily::Cubic;
  throw Error(Error::Kind::InvalidArgument, "unknown intertwinor family '" + s + "'");
}

bool is_dirac_family(SpectralFamily f) {
  return f == SpectralFamily::DiracAlpha || f == SpectralFamily::DiracOddPoly || f == SpectralFamily::DiracHalf ||
         f == SpectralFamily::Cubic;
}

std::string render_refutation_scalar(int n, const Rat& lambda, speclab_format f) {
  const auto level = spectrum_level(n, lambda);
  std::ostringstream os;
  if (level) {
    if (f == SPECLAB_FORMAT_TEXT) return "on spectrum, j=" + std::to_string(*level) + "\n";
    if (f == SPECLAB_FORMAT_CSV) return "verdict,level\non_spectrum," + std::to_string(*level) + "\n";
    json doc;
    doc["command"] = "refute";
    doc["operator"] = "scalar";
    doc["n"] = n;
    doc["candidate"] = to_string(lambda);
    doc["verdict"] = "on_spectrum";
    doc["level"] = *level;
    return doc.dump(2) + "\n";
  }
  const auto chain = refute_candidate(n, lambda);
  std::vector<std::string> values;
  for (const auto& v : chain.values) values.push_back(v.to_string());
  if (f == SPECLAB_FORMAT_TEXT) {
    os << "chain [";
    for (std::size_t k = 0; k < values.size(); ++k) os << (k ? ", " : "") << values[k];
    os << "], " << values.back() << " < " << to_string(chain.violated_bound) << ": violation\n";
    return os.str();
  }
  if (f == SPECLAB_FORMAT_CSV) {
    os << "step,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) os << k << ',' << values[k] << '\n';
    return os.str();
  }
  json doc;
  doc["command"] = "refute";
  doc["operator"] = "scalar";
  doc["n"] = n;
  doc["candidate"] = to_string(lambda);
  doc["verdict"] = "refuted";
  doc["chain"] = values;
  doc["steps"] = chain.steps();
  doc["violated_bound"] = to_string(chain.violated_bound);
  return doc.dump(2) + "\n";
}

std::string render_refutation_dirac(int n, const Rat& lambda, speclab_format f) {
  const Rat j = abs(lambda) - make_rat(n, 2);
  std::ostringstream os;
  if (is_integer(j) && sgn(j) >= 0) {
    const long level = j.get_num().get_si();
    if (f == SPECLAB_FORMAT_TEXT) return "on spectrum, j=" + std::to_string(level) + "\n";
    if (f == SPECLAB_FORMAT_CSV) return "verdict,level\non_spectrum," + std::to_string(level) + "\n";
    json doc;
    doc["command"] = "refute";
    doc["operator"] = "dirac";
    doc["n"] = n;
    doc["candidate"] = to_string(lambda);
    doc["verdict"] = "on_spectrum";
    doc["level"] = level;
    return doc.dump(2) + "\n";
  }
  const auto chain = dirac_refute(n, lambda);
  std::vector<std::string> values;
  for (const auto& v : chain.values) values.push_back(to_string(v));
  if (f == SPECLAB_FORMAT_TEXT) {
    os << "chain [";
    for (std::size_t k = 0; k < values.size(); ++k) os << (k ? ", " : "") << values[k];
    os << "], (" << values.back() << ")^2 < " << to_string(chain.bound) << ": violation\n";
    return os.str();
  }
  if (f == SPECLAB_FORMAT_CSV) {
    os << "step,value,branch\n";
    for (std::size_t k = 0; k < values.size(); ++k) os << k << ',' << values[k] << ',' << (k ? chain.branches[k - 1] : "") << '\n';
    return os.str();
  }
  json doc;
  doc["command"] = "refute";
  doc["operator"] = "dirac";
  doc["n"] = n;
  doc["candidate"] = to_string(lambda);
  doc["verdict"] = "refuted";
  doc["chain"] = values;
  doc["branches"] = chain.branches;
  doc["steps"] = chain.steps();
  doc["bound"] = to_string(chain.bound);
  return doc.dump(2) + "\n";
}

std::string render(const EntropyReport& r, speclab_format f) {
  switch (f) {
    case SPECLAB_FORMAT_CSV: return r.to_csv();
    case SPECLAB_FORMAT_TEXT: return r.to_text();
    default: return r.to_json();
  }
}

int index_suffix(const std::string& op, std::size_t prefix, int n) {
  const std::string digits = op.substr(prefix);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Error::Kind::InvalidArgument, "operator '" + op + "' needs a coordinate index");
  const int i = std::stoi(digits);
  if (i > n) throw Error(Error::Kind::IndexOutOfRange, "coordinate index out of range");
  return i;
}

}  // namespace

extern "C" {

const char* speclab_version(void) { return "1.0.0"; }

const char* speclab_last_error(void) { return g_last_error.c_str(); }

const char* speclab_status_name(speclab_status s) {
  switch (s) {
    case SPECLAB_OK: return "ok";
    case SPECLAB_E_INVALID_ARGUMENT: return "invalid_argument";
    case SPECLAB_E_DIMENSION_MISMATCH: return "dimension_mismatch";
    case SPECLAB_E_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case SPECLAB_E_NOT_EIGENFUNCTION: return "not_eigenfunction";
    case SPECLAB_E_NEGATIVE_DISCRIMINANT: return "negative_discriminant";
    case SPECLAB_E_NOT_IN_FIELD: return "not_in_field";
    case SPECLAB_E_ON_SPECTRUM: return "on_spectrum";
    case SPECLAB_E_BELOW_BOUND: return "below_bound";
    case SPECLAB_E_PARSE: return "parse_error";
    case SPECLAB_E_COST_GUARD: return "cost_guard";
    case SPECLAB_E_INTERNAL: return "internal";
    case SPECLAB_E_NULL_POINTER: return "null_pointer";
  }
  return "unknown";
}

const char* speclab_output_text(const speclab_output* out) { return out ? out->text.c_str() : ""; }
size_t speclab_output_size(const speclab_output* out) { return out ? out->text.size() : 0; }
int speclab_output_passed(const speclab_output* out) { return out && out->passed ? 1 : 0; }
void speclab_output_free(speclab_output* out) { delete out; }

speclab_status speclab_spectrum(const char* kind, int n, int count, const char* op, speclab_format fmt,
                                speclab_output** out) {
  if (!out) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    check_format(fmt);
    check_n(n);
    if (count < 1) throw Error(Error::Kind::InvalidArgument, "count must be at least 1");
    if (count > kMaxCount) throw Error(Error::Kind::CostGuard, "count above " + std::to_string(kMaxCount) + " is refused");
    const std::string k = str(kind), o = op ? str(op) : "conformal";
    std::vector<LevelRow> rows;
    if (k == "scalar") {
      if (o != "conformal" && o != "laplacian") throw Error(Error::Kind::InvalidArgument, "unknown scalar operator '" + o + "'");
      const Rat shift = o == "laplacian" ? conformal_shift(n) : Rat(0);
      for (const auto& e : generate_spectrum(n, count))
        rows.push_back({e.j, e.lambda - shift, harmonic_dimension(n, e.j)});
    } else if (k == "dirac") {
      if (op && o != "dirac" && o != "conformal") throw Error(Error::Kind::InvalidArgument, "dirac spectrum has no operator '" + o + "'");
      const auto vals = generate_dirac_spectrum(n, count);
      for (std::size_t i = 0; i < vals.size(); ++i) {
        const int j = static_cast<int>(i / 2);
        rows.push_back({j, vals[i], dirac_multiplicity(n, j)});
      }
    } else {
      throw Error(Error::Kind::InvalidArgument, "spectrum kind must be scalar or dirac");
    }
    emit(out, render_levels(k, k == "scalar" ? o : "dirac", n, rows, fmt));
  });
}

speclab_status speclab_truncation(int n, int N, int matrices, speclab_format fmt, speclab_output** out) {
  if (!out) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    check_format(fmt);
    check_n(n);
    guard_spinor(n, N);
    const auto model = truncation_matrices(n, N);
    if (matrices) {
      emit(out, model.to_json());
      return;
    }
    const auto spec = truncation_spectrum(model);
    std::string text;
    if (fmt == SPECLAB_FORMAT_CSV) {
      text = spec.to_csv();
    } else if (fmt == SPECLAB_FORMAT_TEXT) {
      std::ostringstream os;
      os << "Dirac truncation n=" << n << " N=" << N << " dim=" << spec.dimension << "\n";
      for (const auto& e : spec.entries)
        os << "  " << to_string(e.eigenvalue) << "\tmultiplicity " << e.multiplicity << (e.certified ? "\tcertified" : "\tuncertified") << '\n';
      text = os.str();
    } else {
      text = spec.to_json();
    }
    emit(out, text, spec.complete() && spec.all_on_lattice());
  });
}

speclab_status speclab_intertwinor(const char* family, int n, const char* param, int jmax, speclab_format fmt,
                                   speclab_output** out) {
  if (!out) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    check_format(fmt);
    const SpectralFamily fam = family_of(str(family));
    if (jmax < 0) throw Error(Error::Kind::InvalidArgument, "jmax must be nonnegative");
    if (jmax > kMaxJ) throw Error(Error::Kind::CostGuard, "jmax above " + std::to_string(kMaxJ) + " is refused");
    const bool needs_param = fam == SpectralFamily::ScalarZ || fam == SpectralFamily::ScalarB ||
                             fam == SpectralFamily::ScalarZResidue || fam == SpectralFamily::DiffProduct ||
                             fam == SpectralFamily::DiracAlpha || fam == SpectralFamily::DiracOddPoly;
    if (needs_param && (!param || !*param)) throw Error(Error::Kind::InvalidArgument, str(family) + " needs a parameter");
    const Rat p = param && *param ? parse_rat(param) : Rat(0);
    SpectrumTable t;
    if (is_dirac_family(fam)) {
      std::vector<Rat> levels;
      if (n == 0) {
        if (fam == SpectralFamily::DiracAlpha) throw Error(Error::Kind::InvalidArgument, "dirac family needs --n");
        for (int l = 1; l <= jmax; ++l) {
          levels.push_back(Rat(l));
          levels.push_back(Rat(-l));
        }
      } else {
        check_n(n);
        levels = dirac_levels(n, jmax);
      }
      t = dirac_table(fam, n, p, levels);
    } else {
      check_n(n);
      t = scalar_table(fam, n, p, jmax);
    }
    emit(out, render(t, fmt));
  });
}

speclab_status speclab_verify(const char* scope, int n, int cap, int N, int jobs, speclab_format fmt,
                              speclab_output** out) {
  if (!out) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    check_format(fmt);
    const std::string s = str(scope);
    const bool scalar = s == "scalar" || s == "all", spinor = s == "spinor" || s == "all";
    const bool entropy = s == "entropy" || s == "all";
    if (!scalar && !spinor && !entropy) throw Error(Error::Kind::InvalidArgument, "scope must be scalar, spinor, entropy or all");
    if (scalar || spinor) check_n(n);
    if (scalar) guard_scalar(n, cap);
    if (spinor) guard_spinor(n, N);
    VerificationReport rep;
    rep.suite = s;
    if (scalar) rep.append(verify_scalar_identities(n, cap, {jobs, nullptr}));
    if (spinor) rep.append(verify_spinor_identities(n, N, {jobs, nullptr}));
    if (entropy) rep.append(run_entropy_suite({80, 25, jobs}).summary());
    emit(out, render(rep, fmt), rep.all_pass());
  });
}

speclab_status speclab_refute(const char* op, int n, const char* lambda, speclab_format fmt, speclab_output** out) {
  if (!out) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    check_format(fmt);
    check_n(n);
    if (!lambda) throw Error(Error::Kind::InvalidArgument, "missing candidate");
    const Rat l = parse_rat(lambda);
    const std::string o = op ? str(op) : "scalar";
    if (o == "scalar")
      emit(out, render_refutation_scalar(n, l, fmt));
    else if (o == "dirac")
      emit(out, render_refutation_dirac(n, l, fmt));
    else
      throw Error(Error::Kind::InvalidArgument, "refute operator must be scalar or dirac");
  });
}

speclab_status speclab_entropy(int order, int cutoff, int jobs, speclab_format fmt, speclab_output** out) {
  if (!out) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    check_format(fmt);
    guard_entropy(order, cutoff);
    const auto rep = run_entropy_suite({order, cutoff, jobs});
    emit(out, render(rep, fmt), rep.all_pass());
  });
}

speclab_status speclab_poly_parse(int n, const char* text, speclab_poly** out) {
  if (!out || !text) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    check_n(n);
    *out = new speclab_poly{SpherePoly(parse_poly(n + 1, text))};
  });
}

void speclab_poly_free(speclab_poly* p) { delete p; }

speclab_status speclab_poly_apply(const speclab_poly* p, const char* op, speclab_poly** out) {
  if (!out || !p || !op) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] {
    const std::string o = op;
    const int n = p->p.dim();
    SpherePoly r;
    if (o == "laplacian")
      r = laplacian(p->p);
    else if (o == "conformal_D")
      r = conformal_D(p->p);
    else if (o.rfind('T', 0) == 0)
      r = T(index_suffix(o, 1, n), p->p);
    else if (o.rfind('U', 0) == 0)
      r = U(index_suffix(o, 1, n), p->p);
    else if (o.rfind('x', 0) == 0)
      r = p->p.times_coordinate(index_suffix(o, 1, n));
    else
      throw Error(Error::Kind::InvalidArgument, "unknown operator '" + o + "'");
    *out = new speclab_poly{std::move(r)};
  });
}

speclab_status speclab_poly_integrate(const speclab_poly* p, speclab_output** out) {
  if (!out || !p) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] { emit(out, to_string(integrate(p->p))); });
}

speclab_status speclab_poly_to_string(const speclab_poly* p, speclab_output** out) {
  if (!out || !p) return SPECLAB_E_NULL_POINTER;
  *out = nullptr;
  return guarded([&] { emit(out, to_string(p->p)); });
}

int speclab_poly_equal(const speclab_poly* a, const speclab_poly* b) {
  if (!a || !b) return 0;
  return a->p == b->p ? 1 : 0;
}

}  // extern "C"
