#include "vlasov/diagnostics.hpp"

#include <cmath>

namespace vlasov {

namespace {

constexpr double kEntropyFloor = 1e-30;

// Kahan-compensated accumulator; keeps 4D reductions at O(eps) independent of
// the number of terms.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

}  // namespace

InvariantRecord compute_invariants(const DistributionFunction& f, const FieldState& field, double t) {
  const PhaseSpaceGrid& g = f.grid;
  const int p = g.p();
  const double hx2 = 0.5 * g.x.cell_width();
  const double hv2 = 0.5 * g.v.cell_width();

  KahanSum mass, momentum, kinetic, l1, l2sq, entropy, neg;
  double min_value = f.values.empty() ? 0.0 : f.values[0];

  // k+2 point rule for v^2 f, applied to the modal re-expansion along v
  const auto fine = gauss_legendre_rule(p + 1);
  std::vector<double> legq(static_cast<std::size_t>(p + 1) * p);
  for (int q = 0; q <= p; ++q) legendre_values(p - 1, fine.nodes[q], &legq[static_cast<std::size_t>(q) * p]);
  std::vector<double> cmod(p);

  for (int ix = 0; ix < g.x.n_cells; ++ix)
    for (int iv = 0; iv < g.v.n_cells; ++iv)
      for (int a = 0; a < p; ++a) {
        const double wx = hx2 * g.basis.weights[a];
        for (int b = 0; b < p; ++b) {
          const double w = wx * hv2 * g.basis.weights[b];
          const double val = f.at(ix, iv, a, b);
          const double v = g.v.node_coord(iv, b, g.basis);
          mass.add(w * val);
          momentum.add(w * v * val);
          l1.add(w * std::abs(val));
          l2sq.add(w * val * val);
          if (val > kEntropyFloor) entropy.add(-w * val * std::log(val));
          if (val < 0.0) neg.add(w * val);
          if (val < min_value) min_value = val;
        }
        // kinetic energy on the finer rule
        for (int m = 0; m < p; ++m) {
          double c = 0.0;
          for (int b = 0; b < p; ++b) c += g.basis.nodal_to_modal[m * p + b] * f.at(ix, iv, a, b);
          cmod[m] = c;
        }
        for (int q = 0; q <= p; ++q) {
          double fv = 0.0;
          for (int m = 0; m < p; ++m) fv += cmod[m] * legq[static_cast<std::size_t>(q) * p + m];
          const double v = g.v.origin + (iv + 0.5 * (1.0 + fine.nodes[q])) * g.v.cell_width();
          kinetic.add(0.5 * wx * hv2 * fine.weights[q] * v * v * fv);
        }
      }

  InvariantRecord rec;
  rec.t = t;
  rec.mass = mass.value();
  rec.momentum = momentum.value();
  rec.kinetic_energy = kinetic.value();
  rec.electric_energy = electric_energy(field, g.x);
  rec.total_energy = rec.kinetic_energy + rec.electric_energy;
  rec.l1_norm = l1.value();
  rec.l2_norm = std::sqrt(std::max(0.0, l2sq.value()));
  rec.entropy = entropy.value();
  rec.min_value = min_value;
  rec.negative_mass = neg.value();
  return rec;
}

RelativeErrorSeries relative_error_series(std::span<const InvariantRecord> records, double v_thermal) {
  if (records.empty()) throw std::invalid_argument("relative_error_series: no records");
  const InvariantRecord& r0 = records.front();
  constexpr double eps_scale = 1e-30;
  auto denom = [&](double q0) { return std::max(std::abs(q0), eps_scale); };
  const double mom_denom = std::max(std::abs(r0.momentum), std::abs(r0.mass) * v_thermal);

  RelativeErrorSeries s;
  for (const auto& r : records) {
    s.t.push_back(r.t);
    s.mass.push_back((r.mass - r0.mass) / denom(r0.mass));
    s.momentum.push_back((r.momentum - r0.momentum) / std::max(mom_denom, eps_scale));
    s.kinetic_energy.push_back((r.kinetic_energy - r0.kinetic_energy) / denom(r0.kinetic_energy));
    s.electric_energy.push_back((r.electric_energy - r0.electric_energy) / denom(r0.electric_energy));
    s.total_energy.push_back((r.total_energy - r0.total_energy) / denom(r0.total_energy));
    s.l1_norm.push_back((r.l1_norm - r0.l1_norm) / denom(r0.l1_norm));
    s.l2_norm.push_back((r.l2_norm - r0.l2_norm) / denom(r0.l2_norm));
    s.entropy.push_back((r.entropy - r0.entropy) / denom(r0.entropy));
  }
  return s;
}

double fit_exponential_rate(std::span<const double> times, std::span<const double> values, FitWindow window) {
  if (times.size() != values.size()) throw std::invalid_argument("fit_exponential_rate: size mismatch");
  std::vector<double> t, logv;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < window.t_begin || times[i] > window.t_end) continue;
    if (!(values[i] > 0.0)) throw InsufficientDataError("fit_exponential_rate: non-positive value inside the window");
    t.push_back(times[i]);
    logv.push_back(std::log(values[i]));
  }
  const std::size_t n = t.size();
  if (n < 2) throw InsufficientDataError("fit_exponential_rate: fewer than two samples in the window");

  std::vector<std::size_t> peaks;
  std::size_t troughs = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool up = logv[i] >= logv[i - 1] && logv[i] >= logv[i + 1] &&
                    (logv[i] > logv[i - 1] || logv[i] > logv[i + 1]);
    const bool down = logv[i] <= logv[i - 1] && logv[i] <= logv[i + 1] &&
                      (logv[i] < logv[i - 1] || logv[i] < logv[i + 1]);
    if (up) peaks.push_back(i);
    if (down) ++troughs;
  }

  auto slope = [](std::span<const double> xs, std::span<const double> ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };

  if (peaks.size() >= 4) {
    std::vector<double> pt, pv;
    for (std::size_t i : peaks) {
      pt.push_back(t[i]);
      pv.push_back(logv[i]);
    }
    return slope(pt, pv);
  }
  if (peaks.empty() && troughs == 0) return slope(t, logv);  // monotone or flat: envelope = series
  throw InsufficientDataError("fit_exponential_rate: too few envelope peaks in the window");
}

}  // namespace vlasov
