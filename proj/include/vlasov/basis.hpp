#pragma once

#include <vector>

namespace vlasov {

// Gauss-Legendre rule on the reference interval [-1,1]; exact for
// polynomials of degree <= 2n-1. Valid for 1 <= n <= 16.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_legendre_rule(int n);

// Legendre polynomial P_j normalized so that P_j(1) = 1.
double legendre_value(int degree, double x);

// Values of P_0..P_{max_degree} at x, written to out[0..max_degree].
void legendre_values(int max_degree, double x, double* out);

// Per-dimension dG machinery of degree k: the k+1 Gauss nodes/weights and
// the nodal<->modal transform pair (row-major). padded() is the block stride
// the simd line kernels use.
struct DgBasis {
  int degree = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> nodal_to_modal;  // (k+1)^2 row-major
  std::vector<double> modal_to_nodal;  // (k+1)^2 row-major, entry[i][j] = P_j(node_i)

  int p() const { return degree + 1; }
  int padded() const { return ((degree + 1 + 3) / 4) * 4; }
};

DgBasis build_basis(int degree);

}  // namespace vlasov
