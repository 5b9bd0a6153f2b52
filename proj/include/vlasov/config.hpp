#pragma once

#include "vlasov/integrator.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vlasov {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resolved run configuration. dof accounting: n_cells = floor(dof_per_dim /
// order) per dimension; the actual dof (n_cells * order) is echoed in
// run_meta.txt when order does not divide dof_per_dim.
struct RunConfig {
  std::string scenario = "landau_weak";
  int order = 3;  // = k + 1
  int dof_per_dim = 64;
  double tau = 0.1;
  double t_end = 50.0;
  AdvectionBackend backend = AdvectionBackend::sldg;
  bool limiter = false;
  double v_max = 6.0;
  bool v_max_set = false;  // true when the config file named v_max explicitly
  std::vector<double> snapshot_times;
  std::string output_dir = ".";
  bool snapshot_nodal = false;

  int n_cells() const { return dof_per_dim / order; }
  int actual_dof() const { return n_cells() * order; }
};

// Line-oriented "key = value" text with '#' comments; unknown keys and
// malformed values are rejected with the key and line number.
RunConfig parse_config(std::string_view text);

const char* backend_name(AdvectionBackend backend);

}  // namespace vlasov
