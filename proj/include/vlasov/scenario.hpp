#pragma once

#include "vlasov/distribution.hpp"

#include <string>
#include <vector>

namespace vlasov {

// Initial-value problem from the catalog: f0 has unit mean density over one
// spatial period, the velocity profile has unit thermal width.
struct Scenario {
  std::string name;
  std::string description;
  double domain_length = 0.0;
  double v_max = 6.0;  // catalog default; a config file may override
  double v_thermal = 1.0;
  bool field_solve = true;
  PhaseSpaceFunction f0;
};

Scenario make_scenario(const std::string& name);
std::vector<std::string> scenario_names();

// Samples f0 at the tensor Gauss points and rescales once so the discrete
// mass equals the domain length exactly (unit mean density on the grid);
// this is what makes the periodic Poisson problem discretely compatible.
DistributionFunction sample_scenario(const Scenario& scenario, const PhaseSpaceGrid& grid);

}  // namespace vlasov
