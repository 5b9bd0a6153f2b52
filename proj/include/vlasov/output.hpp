#pragma once

#include "vlasov/config.hpp"
#include "vlasov/integrator.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace vlasov {

// Extra run facts echoed into run_meta.txt next to the config fields.
struct RunInfo {
  double v_max_resolved = 0.0;
  double domain_length = 0.0;
  std::string simd_backend;
  long long limited_cells = 0;
  long long clamped_cells = 0;
};

// Writes diagnostics.csv (17 significant digits, one row per record), one
// snapshot_t<time>.csv per snapshot (cell averages, one v-row per line) and
// run_meta.txt. Returns the created paths; I/O failures surface the path.
std::vector<std::filesystem::path> write_outputs(const std::vector<InvariantRecord>& records,
                                                 const std::vector<Snapshot>& snapshots,
                                                 const RunConfig& config, const RunInfo& info,
                                                 const std::filesystem::path& output_dir);

}  // namespace vlasov
