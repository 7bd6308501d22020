#pragma once

// Strict parsing of user-supplied parameters, shared by the CLI and the service.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qhgr/schubert_ring.hpp"

namespace qhgr {

/// Malformed input for a named parameter.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string parameter, const std::string& what)
      : std::invalid_argument(what), parameter_(std::move(parameter)) {}
  const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

/// Well-formed input whose value is mathematically out of range (e.g. alpha < 0).
class InvalidValue : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// The sample points t = 0.5+i, 1+2i, 1.5+3i used for the published spectral pictures.
inline const std::vector<std::complex<double>>& figure_path() {
  static const std::vector<std::complex<double>> path{{0.5, 1.0}, {1.0, 2.0}, {1.5, 3.0}};
  return path;
}

inline double parse_real(std::string_view text, const std::string& parameter) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(x))
    throw ParameterError(parameter, "expected a finite real number, got '" + std::string(text) + "'");
  return x;
}

inline std::int64_t parse_integer(std::string_view text, const std::string& parameter) {
  std::int64_t x = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, x);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw ParameterError(parameter, "expected an integer, got '" + std::string(text) + "'");
  return x;
}

/// Accepts "re,im", or "a", "bi", "a+bi", "a-bi" (i alone means 1i).
inline std::complex<double> parse_complex(std::string_view text, const std::string& parameter) {
  if (auto comma = text.find(','); comma != std::string_view::npos) {
    return {parse_real(text.substr(0, comma), parameter), parse_real(text.substr(comma + 1), parameter)};
  }
  if (text.empty() || text.back() != 'i') return {parse_real(text, parameter), 0.0};
  std::string_view body = text.substr(0, text.size() - 1);
  auto imag_of = [&](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, parameter);
  };
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    char prev = body[k - 1];
    if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') {
      return {parse_real(body.substr(0, k), parameter), imag_of(body.substr(k))};
    }
  }
  return {0.0, imag_of(body)};
}

/// Points separated by ';', or the keyword "figure".
inline std::vector<std::complex<double>> parse_path(std::string_view text, const std::string& parameter) {
  if (text == "figure") return figure_path();
  std::vector<std::complex<double>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(parse_complex(text.substr(start, end - start), parameter));
    start = end + 1;
  }
  return out;
}

inline YoungDiagram22 parse_cycle(std::string_view text, const std::string& parameter) {
  auto d = YoungDiagram22::parse(std::string(text));
  if (!d) throw ParameterError(parameter, "expected a Young diagram 'a,b' with 2>=a>=b>=0, got '" + std::string(text) + "'");
  return *d;
}

}  // namespace qhgr
