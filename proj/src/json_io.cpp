#include "rooted_iso/json_io.hpp"

#include <sstream>

namespace rooted_iso {

namespace {

// Wraps nlohmann exceptions so malformed documents surface as InputError.
template <typename F> auto parse_guard(F &&f) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed JSON document: ") + e.what());
  }
}

std::vector<Letter> letters_from_json(const json &arr) {
  std::vector<Letter> out;
  for (const auto &x : arr) {
    std::uint64_t v = x.get<std::uint64_t>();
    if (v > 255)
      throw InputError("letter out of byte range");
    out.push_back(static_cast<Letter>(v));
  }
  return out;
}

} // namespace

json valency_to_json(const ValencySeq &vs) { return json(vs.entries()); }

ValencySeq valency_from_json(const json &j) {
  return parse_guard([&] {
    if (!j.is_array())
      throw InputError("valency sequence must be a JSON array");
    return ValencySeq(j.get<std::vector<std::uint32_t>>());
  });
}

json portrait_to_json(const Portrait &g) {
  json perms = json::object();
  ValencySeq vs = g.tree();
  for (std::size_t k = 0; k < g.depth(); ++k) {
    std::uint64_t L = g.layer_size(k);
    for (std::uint64_t r = 0; r < L; ++r) {
      Vertex v = vertex_from_rank(vs, k, r);
      perms[to_string(v)] = json(g.perm_at(k, r).images());
    }
  }
  return json{{"valency", g.branching()},
              {"depth", g.depth()},
              {"perms", std::move(perms)}};
}

Portrait portrait_from_json(const json &j) {
  return parse_guard([&] {
    ValencySeq vs = valency_from_json(j.at("valency"));
    std::size_t depth = j.at("depth").get<std::size_t>();
    if (depth != vs.max_depth())
      throw InputError("portrait depth does not match valency length");
    const json &perms = j.at("perms");
    if (!perms.is_object())
      throw InputError("portrait perms must be an object");
    PortraitBuilder b(vs, depth);
    std::size_t expected = 0;
    for (std::size_t k = 0; k < depth; ++k)
      expected += vs.layer_size(k);
    if (perms.size() != expected)
      throw InputError("portrait perm count does not match tree");
    for (const auto &[key, value] : perms.items()) {
      Vertex v = vertex_from_string(key, vs);
      if (v.depth() >= depth)
        throw InputError("perm key at or beyond portrait depth");
      b.set(v.depth(), vertex_rank(vs, v), Perm(letters_from_json(value)));
    }
    return std::move(b).build();
  });
}

json orbit_tree_to_json(const OrbitTree &t) {
  json nodes = json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const OrbitTree::Node &n = t.nodes[i];
    json node{{"id", i}, {"level", n.level}, {"label", n.label}};
    if (n.parent < 0)
      node["parent"] = nullptr;
    else
      node["parent"] = n.parent;
    nodes.push_back(std::move(node));
  }
  return json{{"depth", t.depth}, {"nodes", std::move(nodes)}};
}

std::string orbit_tree_to_dot(const OrbitTree &t) {
  std::ostringstream out;
  out << "digraph orbit_tree {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << t.nodes[i].label << "\"];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (t.nodes[i].parent >= 0)
      out << "  n" << t.nodes[i].parent << " -> n" << i << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

json cayley_to_json(const CayleyTable &t) {
  json rows = json::array();
  for (std::uint32_t i = 0; i < t.order(); ++i) {
    json row = json::array();
    for (std::uint32_t j = 0; j < t.order(); ++j)
      row.push_back(t.mul(static_cast<std::uint8_t>(i),
                          static_cast<std::uint8_t>(j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CayleyTable cayley_from_json(const json &j) {
  if (!j.is_array() || j.empty())
    throw InputError("Cayley table must be a non-empty array of rows");
  std::uint32_t order = static_cast<std::uint32_t>(j.size());
  std::vector<std::uint8_t> entries;
  for (const auto &row : j) {
    if (!row.is_array() || row.size() != order)
      throw InputError("Cayley table rows must all have the group order");
    for (const auto &x : row) {
      std::uint64_t v = x.get<std::uint64_t>();
      if (v >= order)
        throw InputError("Cayley table entry out of range");
      entries.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return CayleyTable(order, std::move(entries));
}

} // namespace

json group_spec_to_json(const GroupSpec &spec) {
  json j{{"kind", to_string(spec.kind)}};
  switch (spec.kind) {
  case GroupKind::adding_machine:
    j["depth"] = std::get<AddingMachineParams>(spec.params).depth;
    break;
  case GroupKind::product_power: {
    const auto &p = std::get<ProductPowerParams>(spec.params);
    j["depth"] = p.depth;
    j["cayley"] = cayley_to_json(p.table);
    break;
  }
  case GroupKind::z2_power:
    j["depth"] = std::get<Z2PowerParams>(spec.params).depth;
    break;
  case GroupKind::iterated_wreath: {
    const auto &p = std::get<IteratedWreathParams>(spec.params);
    j["valency"] = valency_to_json(p.vs);
    json levels = json::array();
    for (const auto &gens : p.level_generators) {
      json level = json::array();
      for (const Perm &g : gens)
        level.push_back(json(g.images()));
      levels.push_back(std::move(level));
    }
    j["level_generators"] = std::move(levels);
    break;
  }
  case GroupKind::coset_tree: {
    const auto &p = std::get<CosetTreeParams>(spec.params);
    j["cayley"] = cayley_to_json(p.table);
    j["chain"] = json(p.chain);
    break;
  }
  case GroupKind::t_ad_matrix: {
    const auto &p = std::get<TAdParams>(spec.params);
    j["p"] = p.p;
    j["dim"] = p.dim;
    j["precision"] = p.precision;
    j["matrices"] = json(p.matrices);
    break;
  }
  case GroupKind::lattice_tree: {
    const auto &p = std::get<LatticeTreeParams>(spec.params);
    j["p"] = p.p;
    j["precision"] = p.precision;
    j["matrices"] = json(p.matrices);
    break;
  }
  }
  return j;
}

GroupSpec group_spec_from_json(const json &j) {
  return parse_guard([&] {
    GroupKind kind = group_kind_from_string(j.at("kind").get<std::string>());
    switch (kind) {
    case GroupKind::adding_machine:
      return adding_machine(j.at("depth").get<std::size_t>());
    case GroupKind::product_power:
      return product_power(cayley_from_json(j.at("cayley")),
                           j.at("depth").get<std::size_t>());
    case GroupKind::z2_power:
      return z2_power_binary(j.at("depth").get<std::size_t>());
    case GroupKind::iterated_wreath: {
      ValencySeq vs = valency_from_json(j.at("valency"));
      std::vector<std::vector<Perm>> level_gens;
      for (const auto &level : j.at("level_generators")) {
        std::vector<Perm> gens;
        for (const auto &images : level)
          gens.push_back(Perm(letters_from_json(images)));
        level_gens.push_back(std::move(gens));
      }
      return iterated_wreath(vs, std::move(level_gens));
    }
    case GroupKind::coset_tree: {
      std::vector<std::vector<std::uint8_t>> chain;
      for (const auto &sub : j.at("chain"))
        chain.push_back(letters_from_json(sub));
      return coset_tree(cayley_from_json(j.at("cayley")), std::move(chain));
    }
    case GroupKind::t_ad_matrix:
      return t_ad_matrix(
          j.at("p").get<std::uint64_t>(), j.at("dim").get<std::uint32_t>(),
          j.at("precision").get<std::uint32_t>(),
          j.at("matrices").get<std::vector<std::vector<std::uint64_t>>>());
    case GroupKind::lattice_tree:
      return lattice_tree(
          j.at("p").get<std::uint64_t>(),
          j.at("precision").get<std::uint32_t>(),
          j.at("matrices").get<std::vector<std::vector<std::uint64_t>>>());
    }
    throw InputError("unknown group kind");
  });
}

json rational_fit_to_json(const RationalFit &fit) {
  return json{{"numerator", fit.numerator}, {"denominator", fit.denominator}};
}

json census_to_json(const CensusResult &result) {
  json reps = json::array();
  for (const auto &level : result.representatives) {
    json level_json = json::array();
    for (const Portrait &g : level)
      level_json.push_back(portrait_to_json(g));
    reps.push_back(std::move(level_json));
  }
  json class_sizes = json::array();
  for (std::size_t n = 0; n < result.class_ids.size(); ++n) {
    std::vector<std::uint64_t> sizes(result.counts[n], 0);
    for (std::uint32_t id : result.class_ids[n])
      ++sizes[id];
    class_sizes.push_back(json(sizes));
  }
  json j{{"mode", result.mode == CensusMode::iso ? "iso" : "gamma"},
         {"series", result.counts},
         {"class_sizes", std::move(class_sizes)},
         {"representatives", std::move(reps)}};
  if (result.fitted)
    j["fitted"] = rational_fit_to_json(*result.fitted);
  else
    j["fitted"] = nullptr;
  return j;
}

std::string census_to_csv(const CensusResult &result) {
  std::ostringstream out;
  out << "level,c_n\n";
  for (std::size_t n = 0; n < result.counts.size(); ++n)
    out << n << "," << result.counts[n] << "\n";
  return out.str();
}

json growth_report_to_json(const GrowthReport &report) {
  return json{{"series", report.counts},
              {"ratios", report.ratios},
              {"verdict", to_string(report.verdict)},
              {"candidate_small", report.candidate_small},
              {"heuristic", true},
              {"summary", report.summary}};
}

} // namespace rooted_iso
