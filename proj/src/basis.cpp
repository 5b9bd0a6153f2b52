#include "vlasov/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace vlasov {

double legendre_value(int degree, double x) {
  if (degree == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int j = 1; j < degree; ++j) {
    double next = ((2 * j + 1) * x * p - j * pm1) / (j + 1);
    pm1 = p;
    p = next;
  }
  return p;
}

void legendre_values(int max_degree, double x, double* out) {
  out[0] = 1.0;
  if (max_degree == 0) return;
  out[1] = x;
  for (int j = 1; j < max_degree; ++j)
    out[j + 1] = ((2 * j + 1) * x * out[j] - j * out[j - 1]) / (j + 1);
}

QuadratureRule gauss_legendre_rule(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("gauss_legendre_rule: n must be in [1,16]");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  // Newton on P_n from the Chebyshev-like initial guess; guesses run from
  // the largest root down, so store in ascending order.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double pjm1 = 1.0, pj = x;
      for (int j = 1; j < n; ++j) {
        double next = ((2 * j + 1) * x * pj - j * pjm1) / (j + 1);
        pjm1 = pj;
        pj = next;
      }
      dp = n * (x * pj - pjm1) / (x * x - 1.0);
      double dx = pj / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // symmetrize to kill the last rounding bit
  for (int i = 0; i < n / 2; ++i) {
    double a = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -a;
    rule.nodes[n - 1 - i] = a;
    double w = 0.5 * (rule.weights[i] + rule.weights[n - 1 - i]);
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

DgBasis build_basis(int degree) {
  if (degree < 0 || degree > 9) throw std::invalid_argument("build_basis: degree must be in [0,9]");
  DgBasis basis;
  basis.degree = degree;
  const int p = degree + 1;
  auto rule = gauss_legendre_rule(p);
  basis.nodes = rule.nodes;
  basis.weights = rule.weights;

  basis.modal_to_nodal.assign(p * p, 0.0);
  basis.nodal_to_modal.assign(p * p, 0.0);
  std::vector<double> leg(p);
  for (int i = 0; i < p; ++i) {
    legendre_values(degree, basis.nodes[i], leg.data());
    for (int j = 0; j < p; ++j) {
      basis.modal_to_nodal[i * p + j] = leg[j];
      // discrete orthogonality: the k+1 point rule is exact for P_a P_b,
      // so the inverse transform needs no matrix inversion
      basis.nodal_to_modal[j * p + i] = 0.5 * (2 * j + 1) * basis.weights[i] * leg[j];
    }
  }

  return basis;
}

}  // namespace vlasov
