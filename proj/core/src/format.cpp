#include "selfmap/format.hpp"

#include <charconv>
#include <cstdio>

namespace selfmap {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(std::abs(z.imag())) + "i";
  if (z.real() == 0.0) return (z.imag() < 0.0 ? "-" : "") + im;
  return format_double(z.real()) + (z.imag() < 0.0 ? "-" : "+") + im;
}

namespace {

bool parse_number(std::string_view s, double& out) {
  if (s.empty()) return false;
  // from_chars does not accept a leading '+'
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

// Parses an imaginary part ending in 'i'; bare "i"/"+i"/"-i" mean +-1.
bool parse_imag(std::string_view s, double& out) {
  if (s.empty() || s.back() != 'i') return false;
  s.remove_suffix(1);
  if (s.empty() || s == "+") {
    out = 1.0;
    return true;
  }
  if (s == "-") {
    out = -1.0;
    return true;
  }
  return parse_number(s, out);
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t') cleaned.push_back(c);
  }
  std::string_view s = cleaned;
  if (s.empty()) return std::nullopt;

  // Split at the first interior sign that does not follow an exponent marker.
  size_t split = std::string_view::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  double re = 0.0, im = 0.0;
  if (split != std::string_view::npos) {
    if (!parse_number(s.substr(0, split), re)) return std::nullopt;
    if (!parse_imag(s.substr(split), im)) return std::nullopt;
    return Complex{re, im};
  }
  if (s.back() == 'i') {
    if (!parse_imag(s, im)) return std::nullopt;
    return Complex{0.0, im};
  }
  if (!parse_number(s, re)) return std::nullopt;
  return Complex{re, 0.0};
}

}  // namespace selfmap
