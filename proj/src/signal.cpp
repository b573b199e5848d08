#include "polyfock/signal.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "polyfock/errors.hpp"
#include "polyfock/orthopoly.hpp"

namespace polyfock::signal {
namespace {

constexpr int kBlendDegree = 3;

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw DomainError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Floater-Hormann weights for abscissae xs and blend degree d.
std::vector<double> floater_hormann_weights(const std::vector<Sample>& s, int d) {
  const int n = static_cast<int>(s.size()) - 1;
  std::vector<double> w(s.size(), 0.0);
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (int i = std::max(0, k - d); i <= std::min(k, n - d); ++i) {
      double prod = 1.0;
      for (int j = i; j <= i + d; ++j) {
        if (j != k) prod /= std::abs(s[static_cast<std::size_t>(k)].xi - s[static_cast<std::size_t>(j)].xi);
      }
      acc += prod;
    }
    w[static_cast<std::size_t>(k)] = ((k - d) % 2 == 0) ? acc : -acc;
  }
  return w;
}

}  // namespace

SampledSignal::SampledSignal(std::vector<Sample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw DomainError("SampledSignal: need at least 2 samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.xi) || !std::isfinite(s.value.real()) || !std::isfinite(s.value.imag())) {
      throw DomainError("SampledSignal: non-finite value in row " + std::to_string(i));
    }
    if (i > 0 && !(s.xi > samples_[i - 1].xi)) {
      throw DomainError("SampledSignal: xi not strictly increasing at row " + std::to_string(i));
    }
  }
  const int d = std::min(kBlendDegree, static_cast<int>(samples_.size()) - 1);
  weights_ = floater_hormann_weights(samples_, d);
}

SampledSignal SampledSignal::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("signal CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "xi,re,im") throw DomainError("signal CSV: expected header 'xi,re,im', got '" + line + "'");
  std::vector<Sample> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw DomainError("signal CSV: line " + std::to_string(lineno) + " does not have 3 fields");
    }
    rows.push_back({parse_double(fields[0], "xi"),
                    {parse_double(fields[1], "re"), parse_double(fields[2], "im")}});
  }
  return SampledSignal(std::move(rows));
}

SampledSignal SampledSignal::read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open signal file '" + path.string() + "'");
  return read_csv(in);
}

std::complex<double> SampledSignal::operator()(double xi) const {
  if (xi < samples_.front().xi || xi > samples_.back().xi) return {0.0, 0.0};
  std::complex<double> num{0.0, 0.0};
  double den = 0.0;
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    const double diff = xi - samples_[k].xi;
    if (diff == 0.0) return samples_[k].value;
    const double c = weights_[k] / diff;
    num += c * samples_[k].value;
    den += c;
  }
  return num / den;
}

Signal hermite_signal(int q) {
  if (q < 0 || q > orthopoly::kDegreeCap) throw DomainError("hermite_signal: bad index");
  return [q](double xi) { return std::complex<double>(orthopoly::hermite_function(q, xi), 0.0); };
}

Signal gaussian_signal(double mu, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("gaussian_signal: sigma must be positive");
  const double norm = std::pow(std::numbers::pi * sigma * sigma, -0.25);
  return [=](double xi) {
    const double u = (xi - mu) / sigma;
    return std::complex<double>(norm * std::exp(-0.5 * u * u), 0.0);
  };
}

NamedSignal parse_named_signal(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("signal '" + std::string(text) + "': missing ':'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  if (kind == "hermite") {
    const double q = parse_double(args, "hermite index");
    if (q != std::floor(q) || q < 0) throw DomainError("hermite index must be a non-negative integer");
    return {hermite_signal(static_cast<int>(q)), std::string(text)};
  }
  if (kind == "gaussian") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) throw DomainError("gaussian signal needs 'mu,sigma'");
    return {gaussian_signal(parse_double(parts[0], "mu"), parse_double(parts[1], "sigma")), std::string(text)};
  }
  throw DomainError("unknown signal kind '" + std::string(kind) + "'");
}

}  // namespace polyfock::signal
