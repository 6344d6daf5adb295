#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rooted_iso/cli_commands.hpp"

namespace {

using rooted_iso::RunConfig;

struct CommonFlags {
  std::string config_path;
  std::optional<std::size_t> level;
  std::optional<std::uint64_t> bound;
  std::optional<int> threads;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App *cmd, CommonFlags &flags, bool config_required) {
  auto *opt = cmd->add_option("--config", flags.config_path,
                              "run configuration (JSON)");
  if (config_required)
    opt->required();
  cmd->add_option("--level", flags.level, "census/enumeration level");
  cmd->add_option("--bound", flags.bound, "enumeration bound");
  cmd->add_option("--threads", flags.threads, "worker cap");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--seed", flags.seed, "seed recorded in outputs");
}

// Precedence: command line > config file > ROOTED_ISO_BOUND > default.
RunConfig resolve(const CommonFlags &flags) {
  std::uint64_t default_bound = rooted_iso::kDefaultEnumerationBound;
  if (const char *env = std::getenv("ROOTED_ISO_BOUND")) {
    char *end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw rooted_iso::InputError("ROOTED_ISO_BOUND must be a positive integer");
    default_bound = v;
  }
  RunConfig config =
      rooted_iso::load_run_config(flags.config_path, default_bound);
  if (flags.level)
    config.max_level = *flags.level;
  if (flags.bound)
    config.bound = *flags.bound;
  if (flags.threads)
    config.threads = *flags.threads;
  if (flags.out_dir)
    config.out_dir = *flags.out_dir;
  if (flags.seed)
    config.seed = *flags.seed;
  if (config.max_level > config.spec.vs.max_depth())
    throw rooted_iso::InputError("level exceeds the spec's tree depth");
  return config;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact censuses and conjugacy tests for rooted-tree isometries"};
  app.require_subcommand(1);

  CommonFlags census_flags, enum_flags, probe_flags;

  auto *census = app.add_subcommand(
      "census", "level-wise conjugacy-class counts with rational fit");
  add_common(census, census_flags, true);

  auto *conjugate = app.add_subcommand(
      "conjugate", "decide conjugacy of two portraits; optional witness");
  std::string file_g, file_h;
  std::optional<std::string> witness_path;
  conjugate->add_option("file_g", file_g, "portrait JSON")->required();
  conjugate->add_option("file_h", file_h, "portrait JSON")->required();
  conjugate->add_option("--witness", witness_path,
                        "write a verified conjugator here on SAME");

  auto *orbit = app.add_subcommand("orbit-tree",
                                   "orbit tree of a portrait (JSON / DOT)");
  std::string orbit_file;
  std::optional<std::string> orbit_json, orbit_dot;
  orbit->add_option("file_g", orbit_file, "portrait JSON")->required();
  orbit->add_option("--json", orbit_json, "write orbit tree JSON here");
  orbit->add_option("--dot", orbit_dot, "write DOT rendering here");

  auto *enumerate =
      app.add_subcommand("enumerate", "enumerate the level group");
  add_common(enumerate, enum_flags, true);

  auto *probe =
      app.add_subcommand("probe", "growth report for the class-count series");
  add_common(probe, probe_flags, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (census->parsed())
      return rooted_iso::cmd_census(resolve(census_flags), std::cout);
    if (conjugate->parsed())
      return rooted_iso::cmd_conjugate(file_g, file_h, witness_path,
                                       std::cout);
    if (orbit->parsed())
      return rooted_iso::cmd_orbit_tree(orbit_file, orbit_json, orbit_dot,
                                        std::cout);
    if (enumerate->parsed())
      return rooted_iso::cmd_enumerate(resolve(enum_flags), std::cout);
    if (probe->parsed())
      return rooted_iso::cmd_probe(resolve(probe_flags), std::cout);
  } catch (const rooted_iso::CapacityError &e) {
    std::cout << "error: " << e.what() << "\n";
    return rooted_iso::kExitBound;
  } catch (const std::exception &e) {
    std::cout << "error: " << e.what() << "\n";
    return rooted_iso::kExitInput;
  }
  return rooted_iso::kExitInput;
}
