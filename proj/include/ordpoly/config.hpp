#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordpoly/multipoly.hpp"

namespace ordpoly {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An ordering-parameter value: the formal symbol, or an exact number.
struct SValue {
  bool symbolic = false;
  GaussianRational value;  // ignored when symbolic

  MultiPoly as_poly() const {
    return symbolic ? MultiPoly::variable(Sym::s) : MultiPoly(value);
  }
  std::string spelled() const {
    return symbolic ? "sym" : value.render();
  }
};

/// Parses "sym", "p/q", "p/q*i", "i", "-i", or plain integers.
inline SValue parse_s_value(const std::string& text) {
  if (text == "sym") return {true, GaussianRational(0)};
  std::string t = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    negative = t[pos] == '-';
    ++pos;
  }
  bool imaginary = false;
  std::string digits = t.substr(pos);
  if (digits == "i") {
    return {false, GaussianRational(Rational(0), negative ? Rational(-1) : Rational(1))};
  }
  if (digits.size() > 2 && digits.substr(digits.size() - 2) == "*i") {
    imaginary = true;
    digits = digits.substr(0, digits.size() - 2);
  }
  long long num = 0, den = 1;
  std::size_t slash = digits.find('/');
  try {
    if (slash == std::string::npos) {
      num = std::stoll(digits);
    } else {
      num = std::stoll(digits.substr(0, slash));
      den = std::stoll(digits.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw ConfigError("cannot parse s-value '" + text + "'");
  }
  if (den == 0) throw ConfigError("zero denominator in s-value '" + text + "'");
  Rational r(num, den);
  if (negative) r = -r;
  return {false, imaginary ? GaussianRational(Rational(0), r) : GaussianRational(r)};
}

inline Rational parse_rational(const std::string& text) {
  SValue v = parse_s_value(text);
  if (v.symbolic || !v.value.is_real())
    throw ConfigError("expected a real rational, got '" + text + "'");
  return v.value.re();
}

struct RunConfig {
  int n_max = 8;
  std::vector<SValue> s_values{{true, GaussianRational(0)},
                               {false, GaussianRational(Rational(-3))}};
  std::vector<double> phi_values{1.5707963267948966, 1.0471975511965976};  // pi/2, pi/3
  std::vector<double> v_values{0.0, 1.0, 2.0};
  Rational hbar{1};
  double tol = 1e-10;
  std::string out_dir = ".";
  int jobs = 1;
  std::vector<std::string> suites;

  void validate() const {
    if (n_max < 0) throw ConfigError("n_max must be nonnegative");
    if (!(tol > 0)) throw ConfigError("tolerance must be positive");
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
    if (!(hbar > 0)) throw ConfigError("hbar binding must be positive");
    for (double phi : phi_values)
      if (!(phi > 0.0 && phi < 3.14159265358979323846))
        throw ConfigError("phi values must lie in (0, pi)");
  }

  nlohmann::ordered_json echo() const {
    nlohmann::ordered_json j;
    j["n_max"] = n_max;
    std::vector<std::string> sv;
    for (const auto& s : s_values) sv.push_back(s.spelled());
    j["s"] = sv;
    j["phi"] = phi_values;
    j["v"] = v_values;
    j["hbar"] = render_rational(hbar);
    j["tol"] = tol;
    j["jobs"] = jobs;
    j["suites"] = suites;
    return j;
  }
};

namespace detail {
inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    // trim
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}
}  // namespace detail

/// Applies one "key = value" setting; keys mirror the CLI flags.
inline void apply_config_entry(RunConfig& cfg, const std::string& key,
                               const std::string& value) {
  try {
    if (key == "n_max") cfg.n_max = std::stoi(value);
    else if (key == "s") {
      cfg.s_values.clear();
      for (const auto& item : detail::split_list(value)) cfg.s_values.push_back(parse_s_value(item));
    } else if (key == "phi") {
      cfg.phi_values.clear();
      for (const auto& item : detail::split_list(value)) cfg.phi_values.push_back(std::stod(item));
    } else if (key == "v") {
      cfg.v_values.clear();
      for (const auto& item : detail::split_list(value)) cfg.v_values.push_back(std::stod(item));
    } else if (key == "hbar") cfg.hbar = parse_rational(value);
    else if (key == "tol") cfg.tol = std::stod(value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "jobs") cfg.jobs = std::stoi(value);
    else if (key == "suite" || key == "suites") cfg.suites = detail::split_list(value);
    else throw ConfigError("unknown config key '" + key + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("bad value '" + value + "' for config key '" + key + "'");
  }
}

/// Single human-readable key-value document: one "key = value" per line,
/// blank lines and '#' comments ignored.
inline RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string v) {
      std::size_t s = v.find_first_not_of(" \t");
      std::size_t e = v.find_last_not_of(" \t");
      return s == std::string::npos ? std::string() : v.substr(s, e - s + 1);
    };
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace ordpoly
