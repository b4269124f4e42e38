#pragma once

#include <compare>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "optsel/csv.hpp"
#include "optsel/util.hpp"

namespace optsel {

/// Identity of one dataset row. Two instances of the same kernel that differ
/// only in dataset_variant are distinct instances.
struct KernelKey {
  std::string kernel_id;
  std::string dataset_variant;

  auto operator<=>(const KernelKey&) const = default;

  std::string str() const { return kernel_id + "/" + dataset_variant; }
};

/// Tags both where counters were profiled and where timings were measured.
struct ArchTag {
  std::string name;
  std::string description;
};

struct KernelInstance {
  KernelKey key;
  std::string suite;
  /// Standalone compilable C translation unit; empty in replay-only corpora.
  std::filesystem::path source_path;
};

/// Reads a corpus manifest (columns: kernel_id, suite, dataset_variant,
/// source_path). Relative source paths resolve against the manifest's
/// directory. Row order is preserved. Any malformed row or duplicate
/// (kernel_id, dataset_variant) rejects the whole manifest.
inline std::vector<KernelInstance> load_corpus(const std::filesystem::path& manifest_path) {
  if (!std::filesystem::exists(manifest_path)) {
    throw ConfigError("corpus manifest not found: " + manifest_path.string());
  }
  const std::string source = manifest_path.filename().string();
  Table table = read_delimited(manifest_path);
  int id_col = table.require_column("kernel_id", source);
  int suite_col = table.require_column("suite", source);
  int variant_col = table.require_column("dataset_variant", source);
  int path_col = table.require_column("source_path", source);

  const std::filesystem::path base = manifest_path.parent_path();
  std::vector<KernelInstance> instances;
  std::set<KernelKey> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = source + ":" + std::to_string(table.row_lines[r]);
    KernelInstance inst;
    inst.key.kernel_id = row[id_col];
    inst.key.dataset_variant = row[variant_col];
    inst.suite = row[suite_col];
    if (inst.key.kernel_id.empty()) throw DataError(where + ": empty kernel_id");
    if (!seen.insert(inst.key).second) {
      throw DataError(where + ": duplicate kernel instance " + inst.key.str());
    }
    if (!row[path_col].empty()) {
      std::filesystem::path p = row[path_col];
      inst.source_path = p.is_absolute() ? p : base / p;
    }
    instances.push_back(std::move(inst));
  }
  return instances;
}

}  // namespace optsel
