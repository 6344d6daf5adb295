#include "rooted_iso/cli_commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace rooted_iso {

namespace {

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string &path, const std::string &text) {
  std::filesystem::path p(path);
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << text;
}

template <typename F> int run_guarded(std::ostream &out, F &&f) {
  try {
    f();
    return kExitOk;
  } catch (const CapacityError &e) {
    out << "error: " << e.what();
    if (e.partial_size > 0)
      out << " (partial size " << e.partial_size << ")";
    out << "\n";
    return kExitBound;
  } catch (const InputError &e) {
    out << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception &e) {
    out << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

std::string out_path(const RunConfig &config, const std::string &name) {
  if (config.out_dir.empty())
    return name;
  return (std::filesystem::path(config.out_dir) / name).string();
}

} // namespace

RunConfig run_config_from_json(const json &j, std::uint64_t default_bound) {
  RunConfig config;
  config.bound = default_bound;
  try {
    config.spec = group_spec_from_json(j.at("spec"));
    if (j.contains("gamma") && !j.at("gamma").is_null())
      config.gamma = group_spec_from_json(j.at("gamma"));
    config.max_level = j.at("max_level").get<std::size_t>();
    if (j.contains("bound"))
      config.bound = j.at("bound").get<std::uint64_t>();
    if (j.contains("seed"))
      config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads"))
      config.threads = j.at("threads").get<int>();
    if (j.contains("out"))
      config.out_dir = j.at("out").get<std::string>();
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed run config: ") + e.what());
  }
  if (config.max_level > config.spec.vs.max_depth())
    throw InputError("max_level exceeds the spec's tree depth");
  if (config.threads < 1)
    throw InputError("threads must be >= 1");
  return config;
}

RunConfig load_run_config(const std::string &path,
                          std::uint64_t default_bound) {
  return run_config_from_json(read_json_file(path), default_bound);
}

int cmd_census(const RunConfig &config, std::ostream &out) {
  return run_guarded(out, [&] {
    CensusOptions opts{config.bound, config.threads};
    CensusResult result =
        config.gamma
            ? census_gamma(config.spec, *config.gamma, config.max_level, opts)
            : census_iso(config.spec, config.max_level, opts);
    GrowthReport growth = classify_growth(result.counts);

    json j = census_to_json(result);
    j["spec"] = group_spec_to_json(config.spec);
    if (config.gamma)
      j["gamma"] = group_spec_to_json(*config.gamma);
    j["seed"] = config.seed;
    j["smallness"] = growth_report_to_json(growth);

    write_text_file(out_path(config, "census.csv"), census_to_csv(result));
    write_text_file(out_path(config, "census.json"), j.dump(2) + "\n");

    out << "census mode=" << (config.gamma ? "gamma" : "iso") << " levels 0.."
        << config.max_level << "\n";
    for (std::size_t n = 0; n < result.counts.size(); ++n)
      out << "  c_" << n << " = " << result.counts[n] << "\n";
    if (result.fitted) {
      out << "  fit: numerator";
      for (std::int64_t c : result.fitted->numerator)
        out << " " << c;
      out << ", denominator";
      for (std::int64_t c : result.fitted->denominator)
        out << " " << c;
      out << "\n";
    } else {
      out << "  fit: none\n";
    }
    out << "  " << growth.summary << "\n";
  });
}

int cmd_conjugate(const std::string &file_g, const std::string &file_h,
                  const std::optional<std::string> &witness_path,
                  std::ostream &out) {
  return run_guarded(out, [&] {
    Portrait g = portrait_from_json(read_json_file(file_g));
    Portrait h = portrait_from_json(read_json_file(file_h));
    std::optional<Portrait> witness = find_conjugator(g, h);
    if (!witness) {
      out << "DIFFERENT\n";
      return;
    }
    if (conjugate(g, *witness) != h)
      throw InputError("internal witness verification failed");
    out << "SAME\n";
    if (witness_path)
      write_text_file(*witness_path,
                      portrait_to_json(*witness).dump(2) + "\n");
  });
}

int cmd_orbit_tree(const std::string &file_g,
                   const std::optional<std::string> &json_path,
                   const std::optional<std::string> &dot_path,
                   std::ostream &out) {
  return run_guarded(out, [&] {
    Portrait g = portrait_from_json(read_json_file(file_g));
    OrbitTree t = orbit_tree(g);
    json j = orbit_tree_to_json(t);
    j["canonical_code"] = canonical_code(t).hex();
    if (json_path)
      write_text_file(*json_path, j.dump(2) + "\n");
    else
      out << j.dump(2) << "\n";
    if (dot_path)
      write_text_file(*dot_path, orbit_tree_to_dot(t));
  });
}

int cmd_enumerate(const RunConfig &config, std::ostream &out) {
  return run_guarded(out, [&] {
    LevelGroup lg = enumerate(config.spec, config.max_level, config.bound);
    out << "level " << config.max_level << " group order " << lg.size()
        << "\n";
    if (!config.out_dir.empty()) {
      json elems = json::array();
      for (const Portrait &g : lg.elements)
        elems.push_back(portrait_to_json(g));
      json j{{"depth", lg.depth},
             {"order", lg.size()},
             {"provenance", lg.provenance},
             {"elements", std::move(elems)}};
      write_text_file(out_path(config, "elements.json"), j.dump(2) + "\n");
    }
  });
}

int cmd_probe(const RunConfig &config, std::ostream &out) {
  return run_guarded(out, [&] {
    CensusOptions opts{config.bound, config.threads};
    GrowthReport report = smallness_probe(config.spec, config.max_level, opts);
    if (!config.out_dir.empty())
      write_text_file(out_path(config, "probe.json"),
                      growth_report_to_json(report).dump(2) + "\n");
    out << "series:";
    for (std::uint64_t c : report.counts)
      out << " " << c;
    out << "\nratios:";
    for (const std::string &r : report.ratios)
      out << " " << r;
    out << "\n" << report.summary << "\n";
  });
}

} // namespace rooted_iso
