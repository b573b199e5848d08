#pragma once

// Signals f on the real line: named analytic test signals and sampled
// signals read from `xi,re,im` CSV files.

#include <complex>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polyfock::signal {

using Signal = std::function<std::complex<double>(double)>;

struct Sample {
  double xi = 0.0;
  std::complex<double> value;
};

/// Finite samples of f with strictly increasing abscissae. Evaluation between
/// samples uses Floater-Hormann barycentric rational interpolation (blend
/// degree 3); outside the sampled range the signal is taken to be zero.
class SampledSignal {
 public:
  explicit SampledSignal(std::vector<Sample> samples);

  static SampledSignal read_csv(std::istream& in);
  static SampledSignal read_csv(const std::filesystem::path& path);

  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::complex<double> operator()(double xi) const;

 private:
  std::vector<Sample> samples_;
  std::vector<double> weights_;
};

/// psi_q, the q-th Hermite function.
Signal hermite_signal(int q);

/// Unit-norm Gaussian (pi sigma^2)^{-1/4} exp(-(xi-mu)^2 / (2 sigma^2)).
Signal gaussian_signal(double mu, double sigma);

struct NamedSignal {
  Signal fn;
  std::string label;
};

/// Parses "hermite:<q>" or "gaussian:<mu>,<sigma>". Throws DomainError.
NamedSignal parse_named_signal(std::string_view text);

}  // namespace polyfock::signal
