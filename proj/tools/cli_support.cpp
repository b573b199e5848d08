#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace polyfock::cli {
namespace {

// from_chars does not take a leading '+'.
const char* read_double(const char* first, const char* last, double& out, std::string_view whole) {
  const char* p = first;
  if (p != last && *p == '+') ++p;
  if (p != last && *p == '+') throw UsageError("malformed number in '" + std::string(whole) + "'");
  const auto res = std::from_chars(p, last, out);
  if (res.ec != std::errc{}) throw UsageError("malformed number in '" + std::string(whole) + "'");
  return res.ptr;
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const char* end = read_double(text.data(), text.data() + text.size(), v, text);
  if (end != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError("expected a finite number, got '" + std::string(text) + "'");
  }
  return v;
}

int parse_count(std::string_view text) {
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || v < 1) {
    throw UsageError("expected a positive integer count, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  if (text.size() < 4 || text.back() != 'i') {
    throw UsageError("complex literal must look like a+bi, got '" + std::string(text) + "'");
  }
  const char* first = text.data();
  const char* last = text.data() + text.size() - 1;  // drop the 'i'
  double re = 0.0;
  const char* p = read_double(first, last, re, text);
  if (p == last || (*p != '+' && *p != '-')) {
    throw UsageError("complex literal must look like a+bi, got '" + std::string(text) + "'");
  }
  const bool negative = *p == '-';
  ++p;
  if (p == last || *p == '+' || *p == '-') throw UsageError("malformed imaginary part in '" + std::string(text) + "'");
  double im = 0.0;
  const auto res = std::from_chars(p, last, im);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw UsageError("malformed imaginary part in '" + std::string(text) + "'");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) throw UsageError("non-finite complex literal '" + std::string(text) + "'");
  return {re, negative ? -im : im};
}

std::vector<double> parse_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("range must be min:max:count, got '" + std::string(text) + "'");
  const double lo = parse_number(parts[0]);
  const double hi = parse_number(parts[1]);
  const int n = parse_count(parts[2]);
  if (n > 1 && !(hi > lo)) throw UsageError("range max must exceed min when count > 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + i * (hi - lo) / (n - 1);
  return out;
}

transform::PhaseSpaceGrid parse_grid(std::string_view text) {
  const auto axes = split(text, ',');
  if (axes.size() != 2) throw UsageError("grid must be re:min:max:count,im:min:max:count");
  transform::PhaseSpaceGrid g;
  bool seen_re = false;
  bool seen_im = false;
  for (const auto axis : axes) {
    const auto parts = split(axis, ':');
    if (parts.size() != 4) throw UsageError("grid axis must be name:min:max:count, got '" + std::string(axis) + "'");
    const double lo = parse_number(parts[1]);
    const double hi = parse_number(parts[2]);
    const int n = parse_count(parts[3]);
    if (parts[0] == "re" && !seen_re) {
      g.re_min = lo;
      g.re_max = hi;
      g.re_count = n;
      seen_re = true;
    } else if (parts[0] == "im" && !seen_im) {
      g.im_min = lo;
      g.im_max = hi;
      g.im_count = n;
      seen_im = true;
    } else {
      throw UsageError("grid axes must be one 're' and one 'im', got '" + std::string(parts[0]) + "'");
    }
  }
  try {
    g.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return g;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  const double im = z.imag();
  out += std::signbit(im) ? '-' : '+';
  out += format_double(std::abs(im));
  out += 'i';
  return out;
}

int resolve_threads(int flag_value, const char* env_value) {
  if (flag_value > 0) return flag_value;
  if (env_value == nullptr || *env_value == '\0') return 0;
  int v = 0;
  const std::string_view s(env_value);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 1) {
    throw UsageError("POLYFOCK_THREADS must be a positive integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace polyfock::cli
