#include "vlasov/config.hpp"

#include "vlasov/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace vlasov {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double parse_real(std::string_view v, int line, const char* key) {
  const std::string s(v);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty() || !std::isfinite(x))
    fail(line, std::string("cannot parse value '") + s + "' for key '" + key + "'");
  return x;
}

long parse_int(std::string_view v, int line, const char* key) {
  long x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size())
    fail(line, std::string("cannot parse value '") + std::string(v) + "' for key '" + key + "'");
  return x;
}

bool parse_bool(std::string_view v, int line, const char* key) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  fail(line, std::string("cannot parse boolean '") + std::string(v) + "' for key '" + key + "'");
}

}  // namespace

const char* backend_name(AdvectionBackend backend) {
  return backend == AdvectionBackend::sldg ? "sldg" : "spline";
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;

    const std::size_t eq = raw.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const std::string key{trim(raw.substr(0, eq))};
    const std::string_view value = trim(raw.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");

    if (key == "scenario") {
      const auto names = scenario_names();
      if (std::find(names.begin(), names.end(), value) == names.end())
        fail(line_no, "unknown scenario '" + std::string(value) + "'");
      cfg.scenario = std::string(value);
    } else if (key == "order") {
      cfg.order = static_cast<int>(parse_int(value, line_no, "order"));
      if (cfg.order < 1 || cfg.order > 10) fail(line_no, "order must be in [1,10]");
    } else if (key == "dof_per_dim") {
      cfg.dof_per_dim = static_cast<int>(parse_int(value, line_no, "dof_per_dim"));
      if (cfg.dof_per_dim < 1) fail(line_no, "dof_per_dim must be positive");
    } else if (key == "tau") {
      cfg.tau = parse_real(value, line_no, "tau");
      if (!(cfg.tau > 0.0)) fail(line_no, "tau must be positive");
    } else if (key == "t_end") {
      cfg.t_end = parse_real(value, line_no, "t_end");
      if (!(cfg.t_end > 0.0)) fail(line_no, "t_end must be positive");
    } else if (key == "backend") {
      if (value == "sldg")
        cfg.backend = AdvectionBackend::sldg;
      else if (value == "spline")
        cfg.backend = AdvectionBackend::spline;
      else
        fail(line_no, "backend must be 'sldg' or 'spline'");
    } else if (key == "limiter") {
      cfg.limiter = parse_bool(value, line_no, "limiter");
    } else if (key == "v_max") {
      cfg.v_max = parse_real(value, line_no, "v_max");
      if (!(cfg.v_max > 0.0)) fail(line_no, "v_max must be positive");
      cfg.v_max_set = true;
    } else if (key == "snapshot_times") {
      cfg.snapshot_times.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        if (!item.empty()) {
          const double t = parse_real(item, line_no, "snapshot_times");
          if (t < 0.0) fail(line_no, "snapshot times must be nonnegative");
          cfg.snapshot_times.push_back(t);
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else if (key == "output_dir") {
      cfg.output_dir = std::string(value);
    } else if (key == "snapshot_nodal") {
      cfg.snapshot_nodal = parse_bool(value, line_no, "snapshot_nodal");
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (cfg.dof_per_dim < cfg.order)
    throw ConfigError("config: dof_per_dim (" + std::to_string(cfg.dof_per_dim) + ") must be >= order (" +
                      std::to_string(cfg.order) + ")");
  if (cfg.n_cells() < 2)
    throw ConfigError("config: dof_per_dim / order = " + std::to_string(cfg.n_cells()) +
                      " cells; need at least 2 per dimension");
  if (cfg.backend == AdvectionBackend::spline && cfg.order != 1)
    throw ConfigError("config: the spline backend interpolates uniformly spaced point samples and requires order = 1");
  return cfg;
}

}  // namespace vlasov
