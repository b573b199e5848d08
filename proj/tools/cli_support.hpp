#pragma once

// Parsing and formatting helpers shared by the polyfock CLI and its tests.

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyfock/transform.hpp"

namespace polyfock::cli {

/// Bad command-line value; the CLI maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `a+bi` or `a-bi`; both parts mandatory, e.g. `1+0i`, `-0.5-2e-3i`.
std::complex<double> parse_complex(std::string_view text);

/// `re:min:max:count,im:min:max:count` (axes in either order).
transform::PhaseSpaceGrid parse_grid(std::string_view text);

/// `min:max:count`, inclusive, evenly spaced.
std::vector<double> parse_range(std::string_view text);

/// Shortest string that round-trips (at most 17 significant digits); -0 prints as 0.
std::string format_double(double v);

/// Real part alone when the imaginary part is exactly zero, else `a+bi` / `a-bi`.
std::string format_complex(std::complex<double> z);

/// Thread count from --threads (if > 0), else POLYFOCK_THREADS, else 0 (runtime default).
int resolve_threads(int flag_value, const char* env_value);

}  // namespace polyfock::cli
