#include "vlasov/output.hpp"

#include <cstdarg>
#include <cstdio>
#include <stdexcept>

namespace vlasov {

namespace {

struct File {
  std::FILE* fp = nullptr;
  std::filesystem::path path;

  File(const std::filesystem::path& p) : path(p) {
    fp = std::fopen(p.string().c_str(), "wb");
    if (!fp) throw std::runtime_error("cannot open " + p.string() + " for writing");
  }
  ~File() {
    if (fp) std::fclose(fp);
  }
  void close() {
    if (fp && std::fclose(fp) != 0) {
      fp = nullptr;
      throw std::runtime_error("write failure on " + path.string());
    }
    fp = nullptr;
  }
};

void put(File& f, const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  const int rc = std::vfprintf(f.fp, fmt, ap);
  va_end(ap);
  if (rc < 0) throw std::runtime_error("write failure on " + f.path.string());
}

std::string format_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

}  // namespace

std::vector<std::filesystem::path> write_outputs(const std::vector<InvariantRecord>& records,
                                                 const std::vector<Snapshot>& snapshots,
                                                 const RunConfig& config, const RunInfo& info,
                                                 const std::filesystem::path& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec && !std::filesystem::is_directory(output_dir))
    throw std::runtime_error("cannot create output directory " + output_dir.string());

  std::vector<std::filesystem::path> written;

  {
    File f(output_dir / "diagnostics.csv");
    put(f, "t,mass,momentum,kinetic_energy,electric_energy,total_energy,l1,l2,entropy,min_value,negative_mass\n");
    for (const auto& r : records)
      put(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.mass, r.momentum,
          r.kinetic_energy, r.electric_energy, r.total_energy, r.l1_norm, r.l2_norm, r.entropy, r.min_value,
          r.negative_mass);
    f.close();
    written.push_back(f.path);
  }

  for (const auto& snap : snapshots) {
    File f(output_dir / ("snapshot_t" + format_time(snap.time) + ".csv"));
    for (int iv = 0; iv < snap.n_v; ++iv) {
      for (int ix = 0; ix < snap.n_x; ++ix)
        put(f, ix ? ",%.17g" : "%.17g", snap.cell_averages[static_cast<std::size_t>(iv) * snap.n_x + ix]);
      put(f, "\n");
    }
    f.close();
    written.push_back(f.path);

    if (!snap.nodal.empty()) {
      File g(output_dir / ("snapshot_t" + format_time(snap.time) + "_nodal.csv"));
      // one line per (v_cell, v_node) row, columns run over (x_cell, x_node)
      const int p = config.order;
      for (int iv = 0; iv < snap.n_v; ++iv)
        for (int b = 0; b < p; ++b) {
          bool first = true;
          for (int ix = 0; ix < snap.n_x; ++ix)
            for (int a = 0; a < p; ++a) {
              const std::size_t i = ((static_cast<std::size_t>(ix) * snap.n_v + iv) * p + a) * p + b;
              put(g, first ? "%.17g" : ",%.17g", snap.nodal[i]);
              first = false;
            }
          put(g, "\n");
        }
      g.close();
      written.push_back(g.path);
    }
  }

  {
    File f(output_dir / "run_meta.txt");
    put(f, "scenario = %s\n", config.scenario.c_str());
    put(f, "order = %d\n", config.order);
    put(f, "dof_per_dim = %d\n", config.dof_per_dim);
    put(f, "tau = %.17g\n", config.tau);
    put(f, "t_end = %.17g\n", config.t_end);
    put(f, "backend = %s\n", backend_name(config.backend));
    put(f, "limiter = %s\n", config.limiter ? "true" : "false");
    put(f, "v_max = %.17g\n", info.v_max_resolved);
    put(f, "snapshot_times =");
    for (std::size_t i = 0; i < config.snapshot_times.size(); ++i)
      put(f, i ? ", %.17g" : " %.17g", config.snapshot_times[i]);
    put(f, "\n");
    put(f, "output_dir = %s\n", config.output_dir.c_str());
    put(f, "snapshot_nodal = %s\n", config.snapshot_nodal ? "true" : "false");
    put(f, "n_cells = %d\n", config.n_cells());
    put(f, "actual_dof = %d\n", config.actual_dof());
    put(f, "domain_length = %.17g\n", info.domain_length);
    put(f, "simd = %s\n", info.simd_backend.c_str());
    put(f, "limited_cells = %lld\n", info.limited_cells);
    put(f, "clamped_cells = %lld\n", info.clamped_cells);
    f.close();
    written.push_back(f.path);
  }

  return written;
}

}  // namespace vlasov
