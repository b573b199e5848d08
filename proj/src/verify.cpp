#include "polyfock/verify.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "polyfock/bipoly.hpp"
#include "polyfock/coherent.hpp"
#include "polyfock/errors.hpp"
#include "polyfock/fockbasis.hpp"
#include "polyfock/orthopoly.hpp"
#include "polyfock/quadrature.hpp"
#include "polyfock/signal.hpp"
#include "polyfock/transform.hpp"

namespace polyfock::verify {
namespace {

using cplx = std::complex<double>;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kSeed = 0x5eed'f0c5;

// What a check body reports back; status and timing are filled in by the runner.
struct Outcome {
  json parameters = json::object();
  double max_error = 0.0;
  double tolerance = 0.0;
  bool exact = false;  // pass iff max_error == 0
  bool empty = false;  // parameter range was capped away
  std::string note;
};

using CheckFn = std::function<Outcome(const Options&)>;

struct Entry {
  std::string name;
  CheckFn fn;
};

int cap(int builtin, int user) { return std::min(builtin, user); }

// Uniform points in the closed disk of radius r.
std::vector<cplx> disk_points(std::mt19937_64& rng, int count, double r) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double rad = r * std::sqrt(u(rng));
    out.push_back(std::polar(rad, 2.0 * std::numbers::pi * u(rng)));
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + i * (hi - lo) / (n - 1);
  return out;
}

// Relative deviation. Near a zero the denominator is floored at abs_floor / tol,
// so "passes" there means an absolute deviation below abs_floor.
double rel_dev(cplx a, cplx b, double abs_floor, double tol) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), abs_floor / tol});
}

Outcome check_orthonormality(const Options& o) {
  Outcome out;
  const int pmax = cap(30, o.max_p);
  const auto rule = quadrature::gauss_hermite(quadrature::kDefaultLineOrder);
  const auto n = static_cast<std::size_t>(rule.size());
  std::vector<std::vector<cplx>> psi(static_cast<std::size_t>(pmax) + 1, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = orthopoly::hermite_functions(pmax, rule.nodes()[i]);
    for (int p = 0; p <= pmax; ++p) psi[static_cast<std::size_t>(p)][i] = row[static_cast<std::size_t>(p)];
  }
  for (int p = 0; p <= pmax; ++p) {
    for (int q = 0; q <= p; ++q) {
      const cplx g = quadrature::line_inner(psi[static_cast<std::size_t>(p)], psi[static_cast<std::size_t>(q)], rule);
      out.max_error = std::max(out.max_error, std::abs(g - (p == q ? 1.0 : 0.0)));
    }
  }
  out.parameters = {{"p_max", pmax}, {"line_nodes", rule.size()}};
  out.tolerance = 1e-10;
  return out;
}

Outcome check_three_form_agreement(const Options& o) {
  Outcome out;
  const int mmax = cap(12, o.max_m);
  const int pmax = cap(12, o.max_p);
  std::mt19937_64 rng(kSeed);
  const auto zs = disk_points(rng, 200, 4.0);
  using fockbasis::Form;
  for (int m = 0; m <= mmax; ++m) {
    for (int p = 0; p <= pmax; ++p) {
      for (const cplx z : zs) {
        const cplx s = fockbasis::h_eval({m, p}, z, Form::FiniteSum);
        const cplx l = fockbasis::h_eval({m, p}, z, Form::LaguerreForm);
        const cplx f = fockbasis::h_eval({m, p}, z, Form::Hyp1F1Form);
        out.max_error = std::max({out.max_error, rel_dev(s, l, 1e-12, 1e-10), rel_dev(s, f, 1e-12, 1e-10), rel_dev(l, f, 1e-12, 1e-10)});
      }
    }
  }
  out.parameters = {{"m_max", mmax}, {"p_max", pmax}, {"points", zs.size()}, {"radius", 4.0}};
  out.tolerance = 1e-10;
  return out;
}

Outcome check_exact_agreement(const Options& o) {
  Outcome out;
  const int mmax = cap(12, o.max_m);
  const int pmax = cap(12, o.max_p);
  std::mt19937_64 rng(kSeed + 1);
  const auto zs = disk_points(rng, 20, 4.0);
  for (int m = 0; m <= mmax; ++m) {
    for (int p = 0; p <= pmax; ++p) {
      const auto poly = bipoly::ito_polynomial(m, p);
      for (const cplx z : zs) {
        out.max_error = std::max(out.max_error, rel_dev(fockbasis::h_eval({m, p}, z), bipoly::eval(poly, z), 1e-14, 1e-12));
      }
    }
  }
  out.parameters = {{"m_max", mmax}, {"p_max", pmax}, {"points", zs.size()}};
  out.tolerance = 1e-12;
  return out;
}

Outcome check_eigencheck(const Options& o) {
  Outcome out;
  const int mmax = cap(15, o.max_m);
  const int pmax = cap(15, o.max_p);
  int bad = 0;
  for (int m = 0; m <= mmax; ++m) {
    for (int p = 0; p <= pmax; ++p) {
      const auto rep = bipoly::eigencheck(bipoly::ito_polynomial(m, p));
      if (!rep.is_eigenvector || rep.eigenvalue != p || !rep.residual.is_zero()) ++bad;
    }
  }
  out.parameters = {{"m_max", mmax}, {"p_max", pmax}, {"expected_eigenvalue", "p"}};
  out.max_error = bad;
  out.exact = true;
  out.note = "count of (m, p) with nonzero residual or eigenvalue != p";
  return out;
}

// Planar Gram matrix of h_{a,b}, a <= amax, b <= bmax.
Outcome check_norms(const Options& o) {
  Outcome out;
  const int mmax = cap(8, o.max_m);
  const int pmax = cap(8, o.max_p);
  const auto rule = quadrature::PlanarRule::for_max_index(std::max(mmax, pmax),
                                                          quadrature::kDefaultRadialOrder);
  std::vector<fockbasis::BasisIndex> idx;
  for (int m = 0; m <= mmax; ++m)
    for (int p = 0; p <= pmax; ++p) idx.push_back({m, p});
  std::vector<std::vector<cplx>> vals(idx.size(), std::vector<cplx>(rule.size()));
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const cplx z = rule.node(k);
    for (std::size_t i = 0; i < idx.size(); ++i) vals[i][k] = fockbasis::h_eval(idx[i], z);
  }
  double norm_err = 0.0;
  double orth_err = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double rho_i = fockbasis::basis_norm_sq(idx[i]);
    for (std::size_t j = 0; j <= i; ++j) {
      const cplx g = quadrature::planar_inner(vals[i], vals[j], rule);
      if (i == j) {
        norm_err = std::max(norm_err, std::abs(g - rho_i) / rho_i);
      } else {
        orth_err = std::max(orth_err, std::abs(g) / std::sqrt(rho_i * fockbasis::basis_norm_sq(idx[j])));
      }
    }
  }
  out.parameters = {{"m_max", mmax},
                    {"p_max", pmax},
                    {"radial_nodes", rule.radial().size()},
                    {"angular_nodes", rule.angular_count()},
                    {"norm_rel_error", norm_err},
                    {"orthogonality_scaled", orth_err}};
  out.max_error = std::max(norm_err, orth_err);
  out.tolerance = 1e-8;
  return out;
}

constexpr int kKernelAngular = 160;

Outcome check_reproducing_kernel(const Options& o) {
  Outcome out;
  const int mmax = cap(4, o.max_m);
  const int pmax = cap(6, o.max_p);
  const quadrature::PlanarRule rule(quadrature::gauss_laguerre(quadrature::kDefaultRadialOrder), kKernelAngular);
  std::mt19937_64 rng(kSeed + 2);
  const auto zs = disk_points(rng, 12, 1.5);
  for (int m = 0; m <= mmax; ++m) {
    // K_m(z_j, w_k) is shared by every phi of this level.
    std::vector<std::vector<cplx>> kern(zs.size(), std::vector<cplx>(rule.size()));
    for (std::size_t j = 0; j < zs.size(); ++j)
      for (std::size_t k = 0; k < rule.size(); ++k) kern[j][k] = fockbasis::kernel(m, zs[j], rule.node(k));
    for (int p = 0; p <= pmax; ++p) {
      std::vector<cplx> phi(rule.size());
      for (std::size_t k = 0; k < rule.size(); ++k) phi[k] = fockbasis::h_eval({p, m}, rule.node(k));
      for (std::size_t j = 0; j < zs.size(); ++j) {
        // int K(z, w) phi(w) dmu(w) = <phi, K(., z)>
        std::vector<cplx> kz(rule.size());
        for (std::size_t k = 0; k < rule.size(); ++k) kz[k] = std::conj(kern[j][k]);
        const cplx approx = quadrature::planar_inner(phi, kz, rule);
        out.max_error = std::max(out.max_error, rel_dev(approx, fockbasis::h_eval({p, m}, zs[j]), 1e-12, 1e-6));
      }
    }
  }
  out.parameters = {{"m_max", mmax},
                    {"p_max", pmax},
                    {"points", zs.size()},
                    {"radius", 1.5},
                    {"radial_nodes", rule.radial().size()},
                    {"angular_nodes", rule.angular_count()}};
  out.tolerance = 1e-6;
  return out;
}

Outcome check_theta_series_vs_closed(const Options& o) {
  Outcome out;
  const int mmax = cap(8, o.max_m);
  std::mt19937_64 rng(kSeed + 3);
  auto zs = disk_points(rng, 12, 2.0);
  for (const cplx edge : {cplx{0.0, 0.0}, cplx{2.0, 0.0}, cplx{0.0, -2.0}, std::polar(2.0, 2.3)}) zs.push_back(edge);
  const auto xis = linspace(-4.0, 4.0, 33);
  const coherent::SeriesControl ctrl{};
  int unconverged = 0;
  int most_terms = 0;
  for (int m = 0; m <= mmax; ++m) {
    for (const cplx z : zs) {
      for (const double xi : xis) {
        const auto s = coherent::theta_series({z, m}, xi, ctrl);
        if (!s.converged) ++unconverged;
        most_terms = std::max(most_terms, s.terms_used);
        out.max_error = std::max(out.max_error, std::abs(s.value - coherent::theta_closed({z, m}, xi)));
      }
    }
  }
  out.parameters = {{"m_max", mmax},     {"points", zs.size()},       {"radius", 2.0},
                    {"xi_max", 4.0},     {"xi_count", xis.size()},    {"max_terms", ctrl.max_terms},
                    {"most_terms_used", most_terms}, {"unconverged", unconverged}};
  out.tolerance = 1e-8;
  if (unconverged > 0) {
    out.max_error = std::numeric_limits<double>::infinity();
    out.note = "series budget exhausted";
  }
  return out;
}

Outcome check_theta_norm(const Options& o) {
  Outcome out;
  const int mmax = cap(8, o.max_m);
  std::mt19937_64 rng(kSeed + 4);
  auto zs = disk_points(rng, 16, 2.0);
  zs.push_back({2.0, 0.0});
  zs.push_back({-2.0, 0.0});
  const auto rule = quadrature::gauss_hermite(quadrature::kDefaultLineOrder);
  for (int m = 0; m <= mmax; ++m) {
    for (const cplx z : zs) {
      const auto theta = [&](double xi) { return coherent::theta_closed({z, m}, xi); };
      const double nrm = std::sqrt(quadrature::line_inner(theta, theta, rule).real());
      out.max_error = std::max(out.max_error, std::abs(nrm - 1.0));
    }
  }
  out.parameters = {{"m_max", mmax}, {"points", zs.size()}, {"radius", 2.0}, {"line_nodes", rule.size()}};
  out.tolerance = 1e-10;
  return out;
}

Outcome check_addition_formula(const Options& o) {
  Outcome out;
  const int nmax = cap(6, o.max_m);
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<int> pick_n(0, nmax);
  std::uniform_int_distribution<int> pick_beta(0, 2);
  std::uniform_real_distribution<double> ab(-1.5, 1.5);
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  constexpr double kBetas[] = {1.0, 2.0, 4.0};
  const coherent::SeriesControl ctrl{};
  int unconverged = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = pick_n(rng);
    const double beta = kBetas[pick_beta(rng)];
    const double a = ab(rng);
    const double b = ab(rng);
    const double xi = xs(rng);
    const auto sides = coherent::addition_formula_sides(n, a, b, beta, xi, ctrl);
    if (!sides.converged) ++unconverged;
    out.max_error = std::max(out.max_error, std::abs(sides.lhs - sides.rhs));
  }
  out.parameters = {{"n_max", nmax}, {"samples", 100}, {"ab_max", 1.5}, {"betas", {1, 2, 4}},
                    {"xi_max", 3.0}, {"unconverged", unconverged}};
  out.tolerance = 1e-8;
  if (unconverged > 0) {
    out.max_error = std::numeric_limits<double>::infinity();
    out.note = "series budget exhausted";
  }
  return out;
}

Outcome check_finite_sum(const Options& o) {
  Outcome out;
  const int mmax = cap(8, o.max_m);
  out.parameters = {{"m_min", 1}, {"m_max", mmax}};
  out.tolerance = 1e-9;
  if (mmax < 1) {
    out.empty = true;
    out.note = "needs m >= 1";
    return out;
  }
  std::mt19937_64 rng(kSeed + 6);
  auto zs = disk_points(rng, 10, 2.0);
  zs.push_back({0.0, 0.0});
  const double xis[] = {-2.0, -0.5, 0.4, 1.7};
  for (int m = 1; m <= mmax; ++m)
    for (const cplx z : zs)
      for (const double xi : xis) out.max_error = std::max(out.max_error, coherent::finite_sum_residual(m, z, xi));
  out.parameters["points"] = zs.size();
  out.parameters["radius"] = 2.0;
  return out;
}

Outcome check_gram_isometry(const Options& o) {
  Outcome out;
  const int mmax = cap(6, o.max_m);
  const int qmax = cap(10, o.max_p);
  double herm = 0.0;
  for (int m = 0; m <= mmax; ++m) {
    const transform::ExtendedBargmann t({m});
    const auto g = t.gram_matrix(transform::isometry_rule(m, qmax), qmax);
    for (int q = 0; q <= qmax; ++q) {
      for (int r = 0; r <= qmax; ++r) {
        out.max_error = std::max(out.max_error, std::abs(g(q, r) - (q == r ? 1.0 : 0.0)));
        herm = std::max(herm, std::abs(g(q, r) - std::conj(g(r, q))));
      }
    }
  }
  out.parameters = {{"m_max", mmax},
                    {"q_max", qmax},
                    {"line_nodes", quadrature::kDefaultLineOrder},
                    {"radial_nodes_at_m_max", transform::isometry_radial_order(mmax, qmax)},
                    {"hermitian_defect", herm}};
  out.tolerance = 1e-7;
  return out;
}

Outcome check_classical_reduction(const Options& o) {
  Outcome out;
  const int qmax = cap(8, o.max_p);
  std::mt19937_64 rng(kSeed + 7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto zs = disk_points(rng, 25, 2.0);
  const transform::ExtendedBargmann t({0});
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<cplx> coef(static_cast<std::size_t>(qmax) + 1);
    for (auto& c : coef) c = {gauss(rng), gauss(rng)};
    const signal::Signal f = [coef](double xi) {
      const auto psi = orthopoly::hermite_functions(static_cast<int>(coef.size()) - 1, xi);
      cplx s{};
      for (std::size_t q = 0; q < coef.size(); ++q) s += coef[q] * psi[q];
      return s;
    };
    for (const cplx z : zs) {
      const cplx a = t.forward(f, z).value;
      const cplx b = transform::classical_bargmann(f, z, t.line_rule());
      out.max_error = std::max(out.max_error, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  }
  out.parameters = {{"q_max", qmax}, {"trials", 8}, {"points", zs.size()}, {"radius", 2.0}};
  out.tolerance = 1e-13;
  return out;
}

Outcome check_round_trip(const Options& o) {
  Outcome out;
  const int mmax = cap(4, o.max_m);
  const int span = cap(8, o.max_p);
  const int qmax = std::max(span, cap(10, o.max_p));
  std::mt19937_64 rng(kSeed + 8);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int m = 0; m <= mmax; ++m) {
    const transform::ExtendedBargmann t({m});
    const auto rule = transform::isometry_rule(m, qmax);
    std::vector<std::vector<cplx>> images;
    for (int q = 0; q <= span; ++q) {
      images.push_back(t.forward_on_rule(signal::hermite_signal(q), rule));
      const auto c = t.reconstruct(images.back(), rule, qmax);
      for (int r = 0; r <= qmax; ++r)
        out.max_error = std::max(out.max_error, std::abs(c[static_cast<std::size_t>(r)] - (q == r ? 1.0 : 0.0)));
    }
    // a generic element of the span, transformed as one signal
    std::vector<cplx> coef(static_cast<std::size_t>(span) + 1);
    for (auto& c : coef) c = {gauss(rng), gauss(rng)};
    const signal::Signal f = [coef](double xi) {
      const auto psi = orthopoly::hermite_functions(static_cast<int>(coef.size()) - 1, xi);
      cplx s{};
      for (std::size_t q = 0; q < coef.size(); ++q) s += coef[q] * psi[q];
      return s;
    };
    const auto c = t.reconstruct(t.forward_on_rule(f, rule), rule, qmax);
    for (int r = 0; r <= qmax; ++r) {
      const cplx want = r <= span ? coef[static_cast<std::size_t>(r)] : cplx{};
      out.max_error = std::max(out.max_error, std::abs(c[static_cast<std::size_t>(r)] - want));
    }
  }
  out.parameters = {{"m_max", mmax}, {"span_max", span}, {"q_max", qmax}, {"line_nodes", quadrature::kDefaultLineOrder}};
  out.tolerance = 1e-7;
  return out;
}

// B_m[psi_q] has no component along level m' != m.
Outcome check_level_separation(const Options& o) {
  Outcome out;
  const int mmax = cap(4, o.max_m);
  const int qmax = cap(6, o.max_p);
  out.parameters = {{"m_max", mmax}, {"q_max", qmax}};
  out.tolerance = 1e-7;
  if (mmax < 1) {
    out.empty = true;
    out.note = "needs two levels";
    return out;
  }
  for (int m = 0; m <= mmax; ++m) {
    const transform::ExtendedBargmann t({m});
    for (int mp = 0; mp <= mmax; ++mp) {
      if (mp == m) continue;
      const transform::ExtendedBargmann other({mp});
      const auto rule = transform::isometry_rule(std::max(m, mp), qmax);
      for (int q = 0; q <= qmax; ++q) {
        const auto c = other.reconstruct(t.forward_on_rule(signal::hermite_signal(q), rule), rule, qmax);
        for (const cplx v : c) out.max_error = std::max(out.max_error, std::abs(v));
      }
    }
  }
  return out;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"orthonormality", check_orthonormality},
      {"three_form_agreement", check_three_form_agreement},
      {"exact_agreement", check_exact_agreement},
      {"eigencheck", check_eigencheck},
      {"norms", check_norms},
      {"reproducing_kernel", check_reproducing_kernel},
      {"theta_series_vs_closed", check_theta_series_vs_closed},
      {"theta_norm", check_theta_norm},
      {"addition_formula", check_addition_formula},
      {"finite_sum", check_finite_sum},
      {"gram_isometry", check_gram_isometry},
      {"classical_reduction", check_classical_reduction},
      {"round_trip", check_round_trip},
      {"level_separation", check_level_separation},
  };
  return entries;
}

CheckResult run_entry(const Entry& e, const Options& o) {
  CheckResult r;
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out = e.fn(o);
  const auto t1 = std::chrono::steady_clock::now();
  r.parameters = std::move(out.parameters);
  r.max_error = out.max_error;
  r.tolerance = out.exact ? 0.0 : out.tolerance * o.tol_scale;
  r.note = std::move(out.note);
  if (out.empty) {
    r.status = Status::Excluded;
  } else if (out.exact) {
    r.status = out.max_error == 0.0 ? Status::Passed : Status::Failed;
  } else {
    // NaN compares false and therefore fails
    r.status = out.max_error < r.tolerance ? Status::Passed : Status::Failed;
  }
  if (o.timing) r.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

}  // namespace

void Options::validate() const {
  if (max_m < 0) throw DomainError("verify: max_m must be non-negative");
  if (max_p < 0) throw DomainError("verify: max_p must be non-negative");
  if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) throw DomainError("verify: tol_scale must be positive");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Passed:
      return "passed";
    case Status::Failed:
      return "failed";
    case Status::Excluded:
      return "excluded";
  }
  return "unknown";
}

bool Report::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Failed; });
}

json Report::to_json() const {
  json out;
  out["version"] = std::string(kVersion);
  out["conventions"] = {
      {"measure", "dmu = pi^-1 exp(-|z|^2) dlambda; ||h_{m,p}||^2 = m! p!"},
      {"index_convention", "h_{m,p} = sum_j (-1)^j m!p!/(j!(m-j)!(p-j)!) z^(m-j) zbar^(p-j); level = second index"},
      {"phase_correction", "Laguerre and 1F1 forms use exp(+i(m-p) arg z)"},
      {"hermite_shift", "H_m(xi - sqrt(2) Re z)"},
  };
  json arr = json::array();
  for (const auto& c : checks) {
    json j;
    j["name"] = c.name;
    j["parameters"] = c.parameters;
    const bool ran = c.status != Status::Excluded;
    // JSON has no infinity; null also marks checks that never ran
    j["max_error"] = ran && std::isfinite(c.max_error) ? json(c.max_error) : json(nullptr);
    j["tolerance"] = ran ? json(c.tolerance) : json(nullptr);
    j["passed"] = c.passed();
    j["status"] = std::string(to_string(c.status));
    j["runtime_ms"] = c.runtime_ms ? json(*c.runtime_ms) : json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  out["passed"] = passed();
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.name);
    return v;
  }();
  return names;
}

CheckResult run_check(std::string_view name, const Options& opts) {
  opts.validate();
  for (const auto& e : registry()) {
    if (e.name == name) return run_entry(e, opts);
  }
  throw DomainError("verify: unknown check '" + std::string(name) + "'");
}

Report run_suite(const Options& opts) {
  opts.validate();
  Report rep;
  for (const auto& e : registry()) {
    if (fnmatch(opts.only.c_str(), e.name.c_str(), 0) != 0) {
      CheckResult r;
      r.name = e.name;
      r.status = Status::Excluded;
      r.note = "not selected";
      rep.checks.push_back(std::move(r));
      continue;
    }
    rep.checks.push_back(run_entry(e, opts));
  }
  return rep;
}

}  // namespace polyfock::verify
