// polyfock: command-line front end.
//
//   polyfock basis     --m M --p P (--at a+bi | --grid GRID) [--form sum|laguerre|1f1|all]
//   polyfock transform --m M (--signal NAME | --input FILE) --grid GRID [--output FILE]
//   polyfock coherent  --m M --z a+bi --xi min:max:count [--compare-series]
//   polyfock kernel    --m M --z a+bi --w a+bi
//   polyfock verify    [--max-m N] [--max-p N] [--tol-scale S] [--only GLOB] [--report FILE]
//
// Exit codes: 0 success, 1 failed verification or numerical failure, 2 usage/input error.

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli_support.hpp"
#include "polyfock/coherent.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/fockbasis.hpp"
#include "polyfock/orthopoly.hpp"
#include "polyfock/signal.hpp"
#include "polyfock/transform.hpp"
#include "polyfock/verify.hpp"

namespace {

using namespace polyfock;
using cli::format_complex;
using cli::format_double;
using cplx = std::complex<double>;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct BasisArgs {
  int m = 0;
  int p = 0;
  std::string at;
  std::string grid;
  std::string form = "sum";
};

struct TransformArgs {
  int m = 0;
  std::string input;
  std::string signal;
  std::string grid;
  std::string output;
  int line_order = quadrature::kDefaultLineOrder;
};

struct CoherentArgs {
  int m = 0;
  std::string z;
  std::string xi;
  bool compare = false;
  int max_terms = coherent::SeriesControl{}.max_terms;
  std::string output;
};

struct KernelArgs {
  int m = 0;
  std::string z;
  std::string w;
};

struct VerifyArgs {
  std::optional<int> max_m;
  std::optional<int> max_p;
  double tol_scale = 1.0;
  std::string only = "*";
  std::string report;
  bool no_timing = false;
  bool list = false;
};

// Writes to the named file, or stdout for "" / "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw cli::UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void finish() {
    out().flush();
    if (!out()) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
};

std::vector<std::pair<std::string, fockbasis::Form>> selected_forms(const std::string& form) {
  using fockbasis::Form;
  if (form == "sum") return {{"sum", Form::FiniteSum}};
  if (form == "laguerre") return {{"laguerre", Form::LaguerreForm}};
  if (form == "1f1") return {{"1f1", Form::Hyp1F1Form}};
  return {{"sum", Form::FiniteSum}, {"laguerre", Form::LaguerreForm}, {"1f1", Form::Hyp1F1Form}};
}

double max_pairwise(const std::vector<cplx>& v) {
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d = std::max(d, std::abs(v[i] - v[j]));
  return d;
}

int run_basis(const BasisArgs& a) {
  if (a.at.empty() == a.grid.empty()) throw cli::UsageError("basis: give exactly one of --at or --grid");
  const auto forms = selected_forms(a.form);
  const fockbasis::BasisIndex idx{a.m, a.p};
  if (!a.at.empty()) {
    const cplx z = cli::parse_complex(a.at);
    std::vector<cplx> vals;
    for (const auto& [name, f] : forms) vals.push_back(fockbasis::h_eval(idx, z, f));
    if (forms.size() == 1) {
      std::cout << format_complex(vals[0]) << '\n';
    } else {
      for (std::size_t i = 0; i < forms.size(); ++i) std::cout << forms[i].first << ' ' << format_complex(vals[i]) << '\n';
      std::cout << "max_deviation " << format_double(max_pairwise(vals)) << '\n';
    }
    return 0;
  }
  const auto grid = cli::parse_grid(a.grid);
  std::cout << "re_z,im_z";
  for (const auto& [name, f] : forms) std::cout << ",re_" << name << ",im_" << name;
  if (forms.size() > 1) std::cout << ",max_deviation";
  std::cout << '\n';
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx z = grid.point(k);
    std::vector<cplx> vals;
    for (const auto& [name, f] : forms) vals.push_back(fockbasis::h_eval(idx, z, f));
    std::cout << format_double(z.real()) << ',' << format_double(z.imag());
    for (const cplx v : vals) std::cout << ',' << format_double(v.real()) << ',' << format_double(v.imag());
    if (forms.size() > 1) std::cout << ',' << format_double(max_pairwise(vals));
    std::cout << '\n';
  }
  return 0;
}

int run_transform(const TransformArgs& a) {
  if (a.input.empty() == a.signal.empty()) throw cli::UsageError("transform: give exactly one of --input or --signal");
  signal::Signal f;
  if (!a.signal.empty()) {
    f = signal::parse_named_signal(a.signal).fn;
  } else {
    f = signal::SampledSignal::read_csv(std::filesystem::path(a.input));
    std::cerr << "note: sampled input is interpolated (Floater-Hormann, d = 3) at the quadrature nodes and taken as 0 "
                 "outside its range; values carry interpolation error\n";
  }
  const auto grid = cli::parse_grid(a.grid);
  const transform::ExtendedBargmann t({a.m, a.line_order});
  const auto values = t.forward_grid(f, grid);

  Sink sink(a.output);
  auto& os = sink.out();
  os << "re_z,im_z,re_F,im_F,status\n";
  for (const auto& pv : values) {
    os << format_double(pv.z.real()) << ',' << format_double(pv.z.imag()) << ',' << format_double(pv.value.real())
       << ',' << format_double(pv.value.imag()) << ',' << transform::to_string(pv.status) << '\n';
  }
  sink.finish();
  return 0;
}

int run_coherent(const CoherentArgs& a) {
  const coherent::CoherentLabel label{cli::parse_complex(a.z), a.m};
  const auto xis = cli::parse_range(a.xi);
  coherent::SeriesControl ctrl;
  ctrl.max_terms = a.max_terms;
  ctrl.validate();

  Sink sink(a.output);
  auto& os = sink.out();
  os << "xi,re,im" << (a.compare ? ",series_re,series_im,delta" : "") << '\n';
  bool all_converged = true;
  for (const double xi : xis) {
    const cplx v = coherent::theta_closed(label, xi);
    os << format_double(xi) << ',' << format_double(v.real()) << ',' << format_double(v.imag());
    if (a.compare) {
      const auto s = coherent::theta_series(label, xi, ctrl);
      all_converged = all_converged && s.converged;
      os << ',' << format_double(s.value.real()) << ',' << format_double(s.value.imag()) << ','
         << format_double(std::abs(s.value - v));
    }
    os << '\n';
  }
  sink.finish();
  if (!all_converged) std::cerr << "warning: series budget of " << ctrl.max_terms << " terms exhausted at some xi\n";
  return 0;
}

int run_kernel(const KernelArgs& a) {
  const cplx z = cli::parse_complex(a.z);
  const cplx w = cli::parse_complex(a.w);
  std::cout << format_complex(fockbasis::kernel(a.m, z, w)) << '\n';
  return 0;
}

int run_verify(const VerifyArgs& a) {
  if (a.list) {
    for (const auto& n : verify::check_names()) std::cout << n << '\n';
    return 0;
  }
  verify::Options opts;
  if (a.max_m) opts.max_m = *a.max_m;
  if (a.max_p) opts.max_p = *a.max_p;
  opts.tol_scale = a.tol_scale;
  opts.only = a.only;
  opts.timing = !a.no_timing;
  try {
    opts.validate();
  } catch (const DomainError& e) {
    throw cli::UsageError(e.what());
  }
  const auto rep = verify::run_suite(opts);

  // human summary goes to stderr when the JSON report takes stdout
  const bool json_on_stdout = a.report == "-";
  std::ostream& log = json_on_stdout ? std::cerr : std::cout;
  for (const auto& c : rep.checks) {
    log << (c.status == verify::Status::Passed   ? "PASS "
            : c.status == verify::Status::Failed ? "FAIL "
                                                 : "---- ")
        << c.name;
    if (c.status != verify::Status::Excluded) {
      log << "  max_error=" << format_double(c.max_error) << "  tol=" << format_double(c.tolerance);
    }
    if (!c.note.empty()) log << "  (" << c.note << ')';
    log << '\n';
  }
  log << (rep.passed() ? "overall: PASS" : "overall: FAIL") << '\n';

  if (!a.report.empty()) {
    Sink sink(a.report);
    sink.out() << rep.to_json().dump(2) << '\n';
    sink.finish();
  }
  return rep.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Bargmann transforms, true-poly-Fock bases and their verification"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (overrides POLYFOCK_THREADS)")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", std::string(verify::kVersion));

  BasisArgs ba;
  auto* basis = app.add_subcommand("basis", "Evaluate h_{m,p}");
  basis->add_option("--m", ba.m, "First index")->required()->check(CLI::Range(0, fockbasis::kIndexCap));
  basis->add_option("--p", ba.p, "Second index (the level)")->required()->check(CLI::Range(0, fockbasis::kIndexCap));
  basis->add_option("--at", ba.at, "Point a+bi");
  basis->add_option("--grid", ba.grid, "re:min:max:count,im:min:max:count");
  basis->add_option("--form", ba.form, "Representation")->check(CLI::IsMember({"sum", "laguerre", "1f1", "all"}));

  TransformArgs ta;
  auto* tr = app.add_subcommand("transform", "Apply B_m to a signal on a phase-space grid");
  tr->add_option("--m", ta.m, "Level")->required()->check(CLI::Range(0, orthopoly::kDegreeCap));
  tr->add_option("--input", ta.input, "CSV signal with header xi,re,im");
  tr->add_option("--signal", ta.signal, "Named signal: hermite:q or gaussian:mu,sigma");
  tr->add_option("--grid", ta.grid, "re:min:max:count,im:min:max:count")->required();
  tr->add_option("--output", ta.output, "Output CSV (default stdout)");
  tr->add_option("--line-order", ta.line_order, "Gauss-Hermite order")
      ->check(CLI::Range(1, quadrature::kMaxHermiteNodes));

  CoherentArgs ca;
  auto* co = app.add_subcommand("coherent", "Tabulate the coherent state theta_{z,m}");
  co->add_option("--m", ca.m, "Level")->required()->check(CLI::Range(0, orthopoly::kDegreeCap));
  co->add_option("--z", ca.z, "Label a+bi")->required();
  co->add_option("--xi", ca.xi, "min:max:count")->required();
  co->add_flag("--compare-series", ca.compare, "Also sum the basis series and report the deviation");
  co->add_option("--max-terms", ca.max_terms, "Series budget")
      ->check(CLI::Range(1, coherent::SeriesControl::kMaxTerms));
  co->add_option("--output", ca.output, "Output CSV (default stdout)");

  KernelArgs ka;
  auto* ke = app.add_subcommand("kernel", "Evaluate the reproducing kernel K_m(z, w)");
  ke->add_option("--m", ka.m, "Level")->required()->check(CLI::Range(0, orthopoly::kDegreeCap));
  ke->add_option("--z", ka.z, "a+bi")->required();
  ke->add_option("--w", ka.w, "a+bi")->required();

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Run the identity checks");
  ve->add_option("--max-m", va.max_m, "Cap on level-type indices")->check(CLI::NonNegativeNumber);
  ve->add_option("--max-p", va.max_p, "Cap on intra-level indices")->check(CLI::NonNegativeNumber);
  ve->add_option("--tol-scale", va.tol_scale, "Multiply every tolerance")->check(CLI::PositiveNumber);
  ve->add_option("--only", va.only, "Glob on check names");
  ve->add_option("--report", va.report, "Write the JSON report here ('-' for stdout)");
  ve->add_flag("--no-timing", va.no_timing, "Write runtime_ms as null (byte-stable output)");
  ve->add_flag("--list", va.list, "List check names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const int n = cli::resolve_threads(threads, std::getenv("POLYFOCK_THREADS"));
    if (n > 0) omp_set_num_threads(n);

    if (*basis) return run_basis(ba);
    if (*tr) return run_transform(ta);
    if (*co) return run_coherent(ca);
    if (*ke) return run_kernel(ka);
    if (*ve) return run_verify(va);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
