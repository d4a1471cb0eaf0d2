#include "speclab/speclab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Config {
  int n = 3;
  std::string format = "json";
  std::string output;
  int jobs = 1;
};

speclab_format format_of(const std::string& s) {
  if (s == "csv") return SPECLAB_FORMAT_CSV;
  if (s == "text") return SPECLAB_FORMAT_TEXT;
  return SPECLAB_FORMAT_JSON;
}

int finish(speclab_status st, speclab_output* out, const Config& cfg) {
  if (st != SPECLAB_OK) {
    std::cerr << "speclab: " << speclab_status_name(st) << ": " << speclab_last_error() << "\n";
    return st == SPECLAB_E_INTERNAL ? kFail : kUsage;
  }
  const bool passed = speclab_output_passed(out) != 0;
  if (cfg.output.empty()) {
    std::fwrite(speclab_output_text(out), 1, speclab_output_size(out), stdout);
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) {
      speclab_output_free(out);
      std::cerr << "speclab: cannot write " << cfg.output << "\n";
      return kUsage;
    }
    f.write(speclab_output_text(out), static_cast<std::streamsize>(speclab_output_size(out)));
  }
  speclab_output_free(out);
  return passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra, intertwinors and identity checks on the round sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  auto* n_opt = app.add_option("--n", cfg.n, "sphere dimension (default 3)");
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", cfg.output, "write the report here instead of stdout");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the conformal Laplacian, Dirac operator, or a Dirac truncation");
  std::string kind;
  int count = 10, N = 2;
  std::string op;
  bool matrices = false;
  spectrum->add_option("kind", kind, "scalar, dirac or truncation")->required()->check(CLI::IsMember({"scalar", "dirac", "truncation"}));
  spectrum->add_option("--count", count, "number of levels (default 10)");
  spectrum->add_option("--operator", op, "conformal (default) or laplacian");
  spectrum->add_option("--N", N, "truncation degree (default 2)");
  spectrum->add_flag("--matrices", matrices, "dump the truncation matrices as JSON");

  auto* intertwinor = app.add_subcommand("intertwinor", "spectral function of an intertwinor family");
  std::string family, param;
  int jmax = 10;
  intertwinor->add_option("family", family,
                          "scalar, scalar-B, residue, mu-prime, diff-product, A1, dirac, dirac-odd, dirac-half, cubic")
      ->required();
  auto* r_opt = intertwinor->add_option("--r", param, "order parameter r (p/q or decimal)");
  auto* k_opt = intertwinor->add_option("--k", param, "Dirac parameter k");
  auto* j0_opt = intertwinor->add_option("--j0", param, "residue level j0");
  r_opt->excludes(k_opt)->excludes(j0_opt);
  k_opt->excludes(j0_opt);
  auto* jmax_opt = intertwinor->add_option("--jmax", jmax, "last level (default 10)");
  auto* lmax_opt = intertwinor->add_option("--lambda-max", jmax, "largest |λ| for Dirac families without --n");
  jmax_opt->excludes(lmax_opt);

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  std::string scope;
  int cap = 4, vN = 2;
  verify->add_option("scope", scope, "scalar, spinor, entropy or all")->required()->check(CLI::IsMember({"scalar", "spinor", "entropy", "all"}));
  verify->add_option("--cap", cap, "scalar degree cap (default 4)");
  verify->add_option("--N", vN, "spinor truncation degree (default 2)");

  auto* refute = app.add_subcommand("refute", "refutation certificate for a candidate eigenvalue");
  std::string lambda, rop = "scalar";
  refute->add_option("--lambda", lambda, "candidate (p/q or decimal)")->required();
  refute->add_option("--operator", rop, "scalar (default) or dirac")->check(CLI::IsMember({"scalar", "dirac"}));

  auto* entropy = app.add_subcommand("entropy", "entropy and Beckner inequality battery on S^2");
  int order = 80, cutoff = 25;
  entropy->add_option("--order", order, "quadrature exactness degree (default 80)");
  entropy->add_option("--cutoff", cutoff, "spectral cutoff J (default 25)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const speclab_format fmt = format_of(cfg.format);
  speclab_output* out = nullptr;
  speclab_status st = SPECLAB_OK;
  if (spectrum->parsed()) {
    if (kind == "truncation")
      st = speclab_truncation(cfg.n, N, matrices ? 1 : 0, fmt, &out);
    else
      st = speclab_spectrum(kind.c_str(), cfg.n, count, op.empty() ? nullptr : op.c_str(), fmt, &out);
  } else if (intertwinor->parsed()) {
    const bool dirac = family.rfind("dirac", 0) == 0 || family == "cubic";
    const int n = dirac && n_opt->count() == 0 ? 0 : cfg.n;
    st = speclab_intertwinor(family.c_str(), n, param.empty() ? nullptr : param.c_str(), jmax, fmt, &out);
  } else if (verify->parsed()) {
    st = speclab_verify(scope.c_str(), cfg.n, cap, vN, cfg.jobs, fmt, &out);
  } else if (refute->parsed()) {
    st = speclab_refute(rop.c_str(), cfg.n, lambda.c_str(), fmt, &out);
  } else if (entropy->parsed()) {
    st = speclab_entropy(order, cutoff, cfg.jobs, fmt, &out);
  }
  return finish(st, out, cfg);
}
