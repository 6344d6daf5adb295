#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rooted_iso/json_io.hpp"

namespace rooted_iso {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBound = 2;
inline constexpr int kExitInput = 3;

/// One batch run: the group, an optional conjugating group, and limits.
/// The seed is recorded in outputs; all census paths are deterministic.
struct RunConfig {
  GroupSpec spec;
  std::optional<GroupSpec> gamma;
  std::size_t max_level = 0;
  std::uint64_t bound = kDefaultEnumerationBound;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out_dir;
};

// `default_bound` applies when the document has no explicit "bound" (the
// CLI passes ROOTED_ISO_BOUND here when set).
RunConfig run_config_from_json(const json &j,
                               std::uint64_t default_bound =
                                   kDefaultEnumerationBound);
RunConfig load_run_config(const std::string &path,
                          std::uint64_t default_bound =
                              kDefaultEnumerationBound);

int cmd_census(const RunConfig &config, std::ostream &out);
int cmd_conjugate(const std::string &file_g, const std::string &file_h,
                  const std::optional<std::string> &witness_path,
                  std::ostream &out);
int cmd_orbit_tree(const std::string &file_g,
                   const std::optional<std::string> &json_path,
                   const std::optional<std::string> &dot_path,
                   std::ostream &out);
int cmd_enumerate(const RunConfig &config, std::ostream &out);
int cmd_probe(const RunConfig &config, std::ostream &out);

} // namespace rooted_iso
