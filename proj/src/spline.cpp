#include "vlasov/spline.hpp"

#include "vlasov/simd/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace vlasov {

void solve_cyclic_tridiagonal(double sub, double diag, double sup, std::span<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  if (n < 3) throw std::invalid_argument("solve_cyclic_tridiagonal: need at least 3 unknowns");
  // Sherman-Morrison: write the cyclic matrix as T + u v^T with
  // u = (gamma, 0, ..., sup)^T, v = (1, 0, ..., sub/gamma)^T and T the plain
  // tridiagonal matrix with modified first/last diagonal entries.
  const double gamma = -diag;
  std::vector<double> b(n, diag);
  b[0] = diag - gamma;
  b[n - 1] = diag - sub * sup / gamma;

  auto thomas = [&](std::span<double> d) {
    std::vector<double> c(n);
    c[0] = sup / b[0];
    d[0] /= b[0];
    for (int i = 1; i < n; ++i) {
      const double m = b[i] - sub * c[i - 1];
      c[i] = sup / m;
      d[i] = (d[i] - sub * d[i - 1]) / m;
    }
    for (int i = n - 2; i >= 0; --i) d[i] -= c[i] * d[i + 1];
  };

  std::vector<double> z(n, 0.0);
  z[0] = gamma;
  z[n - 1] = sup;
  thomas(rhs);
  thomas(z);
  const double vy = rhs[0] + (sub / gamma) * rhs[n - 1];
  const double vz = z[0] + (sub / gamma) * z[n - 1];
  const double factor = vy / (1.0 + vz);
  for (int i = 0; i < n; ++i) rhs[i] -= factor * z[i];
}

SplineLine build_periodic_spline(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 4) throw std::invalid_argument("build_periodic_spline: need at least 4 samples");
  SplineLine s;
  s.n = n;
  s.samples.assign(samples.begin(), samples.end());
  s.m2.resize(n);
  for (int i = 0; i < n; ++i) {
    const double ym = samples[(i + n - 1) % n];
    const double yp = samples[(i + 1) % n];
    s.m2[i] = 6.0 * (yp - 2.0 * samples[i] + ym);
  }
  solve_cyclic_tridiagonal(1.0, 4.0, 1.0, s.m2);
  return s;
}

double SplineLine::eval(double q) const {
  double u = q - n * std::floor(q / n);
  int j = static_cast<int>(u);
  if (j >= n) j = 0;
  const double t = u - j;
  const int j1 = (j + 1 == n) ? 0 : j + 1;
  const double s = 1.0 - t;
  return s * samples[j] + t * samples[j1] + (s * s * s - s) * m2[j] / 6.0 + (t * t * t - t) * m2[j1] / 6.0;
}

void apply_spline_translation(std::span<double> samples, double delta, double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw std::invalid_argument("apply_spline_translation: spacing must be positive");
  if (!std::isfinite(delta)) throw std::invalid_argument("apply_spline_translation: shift must be finite");
  const int n = static_cast<int>(samples.size());
  SplineLine sp = build_periodic_spline(samples);

  // Every output sits at the same fractional position:
  // x_i - delta = (i + J + theta) h with J = floor(-delta/h).
  const double sigma = -delta / spacing;
  const double jf = std::floor(sigma);
  double theta = sigma - jf;
  long long J = static_cast<long long>(jf);
  if (theta >= 1.0) {
    theta = 0.0;
    ++J;
  }
  const int offset = static_cast<int>(((J % n) + n) % n);
  const double s = 1.0 - theta;
  const double w[4] = {s, theta, (s * s * s - s) / 6.0, (theta * theta * theta - theta) / 6.0};
  simd::active().shifted_combine4(sp.samples.data(), sp.m2.data(), samples.data(), n, offset, w);
}

}  // namespace vlasov
