#pragma once

#include <span>
#include <vector>

namespace vlasov {

// C2 periodic cubic spline through n uniformly spaced samples. Second
// derivatives are stored scaled by the spacing squared (m2_i = h^2 s''_i),
// so evaluation works in sample-index units and never needs h.
struct SplineLine {
  int n = 0;
  std::vector<double> samples;
  std::vector<double> m2;

  // value at index position q (periodic, q in sample units)
  double eval(double q) const;
};

SplineLine build_periodic_spline(std::span<const double> samples);

// Constant-coefficient cyclic tridiagonal solve: (sub, diag, sup) bands plus
// the periodic corner entries (sub in the top-right, sup in the bottom-left).
// rhs is overwritten with the solution.
void solve_cyclic_tridiagonal(double sub, double diag, double sup, std::span<double> rhs);

// In-place semi-Lagrangian shift: samples_i <- spline(x_i - delta) on a
// periodic uniform grid with the given spacing. The sample sum is invariant
// (the spline moments sum to zero).
void apply_spline_translation(std::span<double> samples, double delta, double spacing);

}  // namespace vlasov
