#pragma once

#include "vlasov/distribution.hpp"
#include "vlasov/fields.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace vlasov {

// One timestamped row of all tracked conserved/monitored quantities.
struct InvariantRecord {
  double t = 0.0;
  double mass = 0.0;
  double momentum = 0.0;
  double kinetic_energy = 0.0;
  double electric_energy = 0.0;
  double total_energy = 0.0;
  double l1_norm = 0.0;
  double l2_norm = 0.0;
  double entropy = 0.0;
  double min_value = 0.0;
  double negative_mass = 0.0;  // integral of min(f, 0)
};

// All reductions use compensated summation in a fixed storage order, so two
// runs of the same configuration agree bitwise. The kinetic-energy integrand
// v^2 f has degree k+2 per cell and is integrated with a k+2 point rule via
// modal re-expansion; everything else lives at the k+1 Gauss nodes.
InvariantRecord compute_invariants(const DistributionFunction& f, const FieldState& field, double t);

// Relative drift of each quantity against the first record,
// (q(t) - q(0)) / max(|q(0)|, eps); momentum, whose initial value may be
// zero, is normalized by mass(0) * v_thermal instead.
struct RelativeErrorSeries {
  std::vector<double> t;
  std::vector<double> mass, momentum, kinetic_energy, electric_energy, total_energy;
  std::vector<double> l1_norm, l2_norm, entropy;
};

RelativeErrorSeries relative_error_series(std::span<const InvariantRecord> records, double v_thermal = 1.0);

struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitWindow {
  double t_begin = 0.0;
  double t_end = 0.0;
};

// Least-squares slope of ln(peak envelope) over the window. Peaks are local
// maxima of the log-series (3-point test); with >= 4 of them the fit runs on
// the peaks, a series with no interior extrema is its own envelope and is fit
// directly, and anything in between is too short to be trusted. For electric
// energy the returned rate is 2*gamma of the field amplitude.
double fit_exponential_rate(std::span<const double> times, std::span<const double> values, FitWindow window);

}  // namespace vlasov
