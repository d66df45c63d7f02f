#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace orbifold::cli {

struct JobSpec {
  std::string command;
  std::string group;
  int bound = 10;
  std::optional<int> qbound;
  std::string weight;
  std::string format = "json";
  std::optional<std::filesystem::path> cache_dir;
  int shards = 1;
  std::optional<std::filesystem::path> out;
  std::filesystem::path data_dir;
  std::string name;
  bool signed_series = false;
  std::string rule2 = "ray";
};

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Parses `args` (without the program name), runs the job, writes the report to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Compiled-in location of the shipped golden files.
std::filesystem::path default_data_dir();

/// FNV-1a 64-bit hash, used for the golden-file checksum line.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace orbifold::cli
