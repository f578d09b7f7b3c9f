#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "selfmap/eval_result.hpp"

namespace selfmap {

// Locale-independent, round-trip-safe rendering (17 significant digits).
std::string format_double(double v);

// "a+bi" with vanishing parts elided: 0.5, 0.6i, 1-2i, ...
std::string format_complex(Complex z);

// Parses the literal grammar accepted on the command line: `a`, `bi`, `i`,
// `a+bi`, `a-bi`, with optional signs and exponents (`1e-3+2.5e2i`).
std::optional<Complex> parse_complex(std::string_view text);

}  // namespace selfmap
