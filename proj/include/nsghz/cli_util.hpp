// Small argument parsers for the command-line tool, kept header-only so the
// unit tests can exercise them directly.

#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsghz/qudit_core.hpp"

namespace nsghz::cli {

inline double parse_double_strict(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (tok.empty() || end != begin + tok.size()) {
    throw std::invalid_argument("expected a number, got '" + tok + "'");
  }
  return v;
}

inline long parse_long_strict(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (tok.empty() || end != begin + tok.size()) {
    throw std::invalid_argument("expected an integer, got '" + tok + "'");
  }
  return v;
}

// "start:stop:count" inclusive grid, or a single value.  "0:1:21" gives
// 0, 0.05, ..., 1.  count must be >= 1; count 1 gives just `start`.
inline std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {parse_double_strict(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw std::invalid_argument("grid must be 'start:stop:count', got '" +
                                text + "'");
  }
  const double start = parse_double_strict(text.substr(0, c1));
  const double stop = parse_double_strict(text.substr(c1 + 1, c2 - c1 - 1));
  const long count = parse_long_strict(text.substr(c2 + 1));
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  for (long i = 0; i < count; ++i) {
    out.push_back(start + (stop - start) * static_cast<double>(i) /
                              static_cast<double>(count - 1));
  }
  return out;
}

// "lo..hi" inclusive, or a single integer.
inline std::vector<int> parse_int_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    return {static_cast<int>(parse_long_strict(text))};
  }
  const long lo = parse_long_strict(text.substr(0, dots));
  const long hi = parse_long_strict(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("range '" + text + "' is empty");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
  return out;
}

// One complex number: "1.5", "2i", "-i", "0.5+0.5i", "-0.25-0.1i",
// exponent forms included ("1e-3+2.5e-2i").
inline Cx parse_complex(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty complex literal");
  // Split before the last top-level sign (one not directly after e/E and not
  // leading) — everything after it is the second addend.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if ((tok[i] == '+' || tok[i] == '-') && tok[i - 1] != 'e' &&
        tok[i - 1] != 'E') {
      split = i;
    }
  }
  auto parse_part = [](std::string part) -> Cx {
    if (!part.empty() && part.back() == 'i') {
      part.pop_back();
      if (part.empty() || part == "+") return {0.0, 1.0};
      if (part == "-") return {0.0, -1.0};
      return {0.0, parse_double_strict(part)};
    }
    return {parse_double_strict(part), 0.0};
  };
  if (split == std::string::npos) return parse_part(tok);
  const Cx a = parse_part(tok.substr(0, split));
  const Cx b = parse_part(tok.substr(split));
  if ((a.imag() != 0.0 && b.imag() != 0.0) ||
      (a.imag() == 0.0 && b.imag() == 0.0 && b.real() != 0.0)) {
    throw std::invalid_argument("malformed complex literal '" + tok + "'");
  }
  return a + b;
}

// Comma-separated complex vector.
inline std::vector<Cx> parse_complex_list(const std::string& text) {
  std::vector<Cx> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    out.push_back(parse_complex(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// NSGHZ_CAP value: positive integer amplitude count.
inline std::size_t parse_cap(const std::string& text) {
  const long v = parse_long_strict(text);
  if (v < 2) throw std::invalid_argument("amplitude cap must be >= 2");
  return static_cast<std::size_t>(v);
}

}  // namespace nsghz::cli
