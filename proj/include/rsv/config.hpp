#pragma once

// Flat key = value configuration. '#' starts a comment; blank lines are ignored.
//
//   caps = 5,5
//   seed = 0
//   oracle_cap = 12
//   satake_num_range = 7
//   satake_den_max = 5
//   workers = 1
//   symbolic_max_vars = 7
//   Q = 2            # or q = 4 (must be a rational square)

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "rsv/errors.hpp"
#include "rsv/rational.hpp"
#include "rsv/schur.hpp"
#include "rsv/unramified.hpp"

namespace rsv {

class ConfigParseError : public ConfigurationError {
 public:
  ConfigParseError(int line, const std::string& what)
      : ConfigurationError("config line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Config {
  SeriesCaps caps{5, 5};
  std::uint64_t seed = 0;
  int oracle_cap = kDefaultOracleCap;
  SatakeRange satake{};
  int workers = 1;
  std::size_t symbolic_max_vars = kDefaultSymbolicMaxVars;
  Rational Q{2};
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline long parse_long(std::string_view v, const char* what) {
  std::string s(v);
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("malformed integer for ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument(std::string("malformed integer for ") + what + ": '" + s + "'");
  return out;
}

}  // namespace detail

/// "A,B" with both caps nonnegative.
inline SeriesCaps parse_caps(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("caps must be 'A,B', got '" + std::string(text) + "'");
  const long a = detail::parse_long(detail::trim(text.substr(0, comma)), "caps");
  const long b = detail::parse_long(detail::trim(text.substr(comma + 1)), "caps");
  if (a < 0 || b < 0) throw ConfigurationError("caps must be nonnegative, got " + std::string(text));
  return {static_cast<int>(a), static_cast<int>(b)};
}

/// Applies one key/value pair to cfg; throws std::invalid_argument / ConfigurationError on bad values.
inline void apply_config_value(Config& cfg, std::string_view key, std::string_view value) {
  auto positive = [&](long v) {
    if (v < 1) throw ConfigurationError(std::string(key) + " must be positive");
    return v;
  };
  if (key == "caps") {
    cfg.caps = parse_caps(value);
  } else if (key == "seed") {
    const long s = detail::parse_long(value, "seed");
    if (s < 0) throw ConfigurationError("seed must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (key == "oracle_cap") {
    cfg.oracle_cap = static_cast<int>(positive(detail::parse_long(value, "oracle_cap")));
  } else if (key == "satake_num_range") {
    cfg.satake.num_range = static_cast<int>(positive(detail::parse_long(value, "satake_num_range")));
  } else if (key == "satake_den_max") {
    cfg.satake.den_max = static_cast<int>(positive(detail::parse_long(value, "satake_den_max")));
  } else if (key == "workers") {
    cfg.workers = static_cast<int>(positive(detail::parse_long(value, "workers")));
  } else if (key == "symbolic_max_vars") {
    cfg.symbolic_max_vars = static_cast<std::size_t>(positive(detail::parse_long(value, "symbolic_max_vars")));
  } else if (key == "Q") {
    const Rational q = Rational::parse(value);
    if (q.sign() <= 0) throw ConfigurationError("Q must be positive");
    cfg.Q = q;
  } else if (key == "q") {
    cfg.Q = rational_sqrt(Rational::parse(value));
  } else {
    throw ConfigurationError("unknown key '" + std::string(key) + "'");
  }
}

inline Config parse_config(std::istream& in) {
  Config cfg;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigParseError(line_no, "expected 'key = value'");
    const std::string_view key = detail::trim(line.substr(0, eq));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigParseError(line_no, "empty key");
    try {
      apply_config_value(cfg, key, value);
    } catch (const std::exception& e) {
      throw ConfigParseError(line_no, e.what());
    }
  }
  return cfg;
}

/// Reads a config file; an absent file yields the built-in defaults.
inline Config load_config(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return Config{};
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open config file " + path.string());
  return parse_config(in);
}

}  // namespace rsv
