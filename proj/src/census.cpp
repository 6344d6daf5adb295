#include "rooted_iso/census.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace rooted_iso {

std::optional<std::uint32_t> LevelGroup::index_of(const Portrait &g) const {
  auto it = index.find(g);
  if (it == index.end())
    return std::nullopt;
  return it->second;
}

std::vector<Portrait> truncated_generators(const GroupSpec &spec,
                                           std::size_t level,
                                           std::uint64_t bound) {
  std::vector<Portrait> gens;
  std::unordered_set<Portrait, PortraitHash> seen;
  for (const IsoGenerator &gen : spec.generators) {
    Portrait g = evaluate(gen, level, bound);
    if (g.is_identity())
      continue;
    if (seen.insert(g).second)
      gens.push_back(std::move(g));
  }
  return gens;
}

LevelGroup enumerate(const GroupSpec &spec, std::size_t level,
                     std::uint64_t bound) {
  LevelGroup lg;
  lg.depth = level;
  lg.provenance = to_string(spec.kind);
  for (const IsoGenerator &gen : spec.generators)
    lg.provenance += " " + gen.name;

  std::vector<Portrait> gens = truncated_generators(spec, level, bound);
  Portrait id = Portrait::identity(spec.vs, level);
  lg.elements.push_back(id);
  lg.index.emplace(std::move(id), 0);
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t i = queue.front();
    queue.pop_front();
    for (const Portrait &g : gens) {
      Portrait next = compose(lg.elements[i], g);
      if (lg.index.count(next))
        continue;
      if (lg.elements.size() >= bound)
        throw CapacityError("group enumeration exceeds bound",
                            lg.elements.size());
      std::uint32_t id_next = static_cast<std::uint32_t>(lg.elements.size());
      lg.index.emplace(next, id_next);
      lg.elements.push_back(std::move(next));
      queue.push_back(id_next);
    }
  }
  return lg;
}

std::vector<std::string> orbit_codes(const std::vector<Portrait> &elements,
                                     int threads) {
  std::vector<std::string> codes(elements.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      codes[i] = canonical_code(orbit_tree(elements[i])).bytes;
  };
  if (threads <= 1 || elements.size() < 64) {
    work(0, elements.size());
  } else {
    std::size_t n_workers =
        std::min<std::size_t>(threads, std::thread::hardware_concurrency() > 0
                                           ? std::thread::hardware_concurrency()
                                           : 1);
    n_workers = std::max<std::size_t>(n_workers, 1);
    std::vector<std::thread> pool;
    std::size_t chunk = (elements.size() + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(elements.size(), begin + chunk);
      if (begin < end)
        pool.emplace_back(work, begin, end);
    }
    for (std::thread &t : pool)
      t.join();
  }
  return codes;
}

std::vector<std::uint32_t>
gamma_partition(const std::vector<Portrait> &elements,
                const std::vector<Portrait> &gamma_gens,
                std::uint64_t bound) {
  std::unordered_map<Portrait, std::uint32_t, PortraitHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<std::uint32_t>(i));

  constexpr std::uint32_t kUnassigned = UINT32_MAX;
  std::vector<std::uint32_t> class_of(elements.size(), kUnassigned);
  std::uint32_t next_class = 0;
  std::vector<Portrait> gamma_invs;
  gamma_invs.reserve(gamma_gens.size());
  for (const Portrait &a : gamma_gens)
    gamma_invs.push_back(inverse(a));

  for (std::size_t start = 0; start < elements.size(); ++start) {
    if (class_of[start] != kUnassigned)
      continue;
    std::uint32_t cls = next_class++;
    // conjugation orbit may pass through portraits outside the element set
    std::unordered_set<Portrait, PortraitHash> seen{elements[start]};
    std::deque<Portrait> queue{elements[start]};
    class_of[start] = cls;
    while (!queue.empty()) {
      Portrait g = std::move(queue.front());
      queue.pop_front();
      for (std::size_t a = 0; a < gamma_gens.size(); ++a) {
        Portrait h = compose(gamma_invs[a], compose(g, gamma_gens[a]));
        if (seen.count(h))
          continue;
        if (seen.size() >= bound)
          throw CapacityError("conjugation orbit exceeds bound", seen.size());
        auto it = index.find(h);
        if (it != index.end())
          class_of[it->second] = cls;
        seen.insert(h);
        queue.push_back(std::move(h));
      }
    }
  }
  return class_of;
}

namespace {

// Level-by-level element lists derived from one top-level enumeration:
// level n holds the distinct truncations in enumeration order, so every
// representative extends upward within the same family.
std::vector<std::vector<Portrait>> level_elements(const LevelGroup &top,
                                                  std::size_t max_level) {
  std::vector<std::vector<Portrait>> levels(max_level + 1);
  levels[max_level] = top.elements;
  for (std::size_t n = max_level; n-- > 0;) {
    std::unordered_set<Portrait, PortraitHash> seen;
    for (const Portrait &g : levels[n + 1]) {
      Portrait t = truncate(g, n);
      if (seen.insert(t).second)
        levels[n].push_back(std::move(t));
    }
  }
  return levels;
}

void attach_fit(CensusResult &result) {
  if (result.counts.size() >= 5)
    result.fitted = detect_rational(result.counts);
}

CensusResult census_common(const GroupSpec &spec, std::size_t max_level,
                           const CensusOptions &opts, CensusMode mode,
                           const GroupSpec *gamma) {
  if (max_level > spec.vs.max_depth())
    throw InputError("census level exceeds spec tree depth");
  LevelGroup top = enumerate(spec, max_level, opts.bound);
  std::vector<std::vector<Portrait>> levels = level_elements(top, max_level);

  CensusResult result;
  result.mode = mode;
  for (std::size_t n = 0; n <= max_level; ++n) {
    const std::vector<Portrait> &elems = levels[n];
    std::vector<std::uint32_t> ids;
    if (mode == CensusMode::iso) {
      std::vector<std::string> codes = orbit_codes(elems, opts.threads);
      std::unordered_map<std::string, std::uint32_t> first;
      ids.resize(elems.size());
      for (std::size_t i = 0; i < elems.size(); ++i) {
        auto [it, fresh] = first.emplace(
            codes[i], static_cast<std::uint32_t>(first.size()));
        ids[i] = it->second;
        (void)fresh;
      }
    } else {
      std::vector<Portrait> gamma_gens =
          truncated_generators(*gamma, n, opts.bound);
      ids = gamma_partition(elems, gamma_gens, opts.bound);
    }
    std::uint32_t n_classes =
        ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<Portrait> reps(n_classes);
    std::vector<bool> have(n_classes, false);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!have[ids[i]]) {
        have[ids[i]] = true;
        reps[ids[i]] = elems[i];
      }
    }
    result.counts.push_back(n_classes);
    result.representatives.push_back(std::move(reps));
    result.class_ids.push_back(std::move(ids));
  }
  attach_fit(result);
  return result;
}

} // namespace

CensusResult census_iso(const GroupSpec &spec, std::size_t max_level,
                        const CensusOptions &opts) {
  return census_common(spec, max_level, opts, CensusMode::iso, nullptr);
}

CensusResult census_gamma(const GroupSpec &spec, const GroupSpec &gamma,
                          std::size_t max_level, const CensusOptions &opts) {
  if (max_level > gamma.vs.max_depth())
    throw InputError("census level exceeds gamma tree depth");
  for (std::size_t k = 0; k < max_level; ++k)
    if (spec.vs.branching(k) != gamma.vs.branching(k))
      throw InputError("spec and gamma live on different trees");
  return census_common(spec, max_level, opts, CensusMode::gamma, &gamma);
}

std::vector<Portrait> level_stabilizer(const LevelGroup &lg, std::size_t k) {
  if (k > lg.depth)
    throw InputError("stabilizer level exceeds group depth");
  std::vector<Portrait> out;
  for (const Portrait &g : lg.elements)
    if (truncate(g, k).is_identity())
      out.push_back(g);
  return out;
}

std::vector<Portrait> rigid_stabilizer(const LevelGroup &lg, const Vertex &v) {
  // g fixes the complement of the subtree at v pointwise iff every vertex
  // outside that subtree carries the identity perm
  std::vector<Portrait> out;
  for (const Portrait &g : lg.elements) {
    ValencySeq vs = g.tree();
    if (!is_valid_vertex(vs, v) || v.depth() > g.depth())
      throw InputError("vertex outside the group's tree");
    bool rigid = true;
    for (std::size_t k = 0; k < g.depth() && rigid; ++k) {
      std::uint64_t L = g.layer_size(k);
      for (std::uint64_t r = 0; r < L; ++r) {
        if (g.perm_at(k, r).is_identity())
          continue;
        Vertex u = vertex_from_rank(vs, k, r);
        bool below_v = u.depth() >= v.depth() &&
                       std::equal(v.word.begin(), v.word.end(), u.word.begin());
        if (!below_v) {
          rigid = false;
          break;
        }
      }
    }
    if (rigid)
      out.push_back(g);
  }
  return out;
}

std::string to_string(GrowthVerdict v) {
  switch (v) {
  case GrowthVerdict::constant:
    return "constant";
  case GrowthVerdict::affine:
    return "affine";
  case GrowthVerdict::superexponential:
    return "superexponential";
  case GrowthVerdict::indeterminate:
    return "indeterminate";
  }
  return "indeterminate";
}

GrowthReport classify_growth(const std::vector<std::uint64_t> &counts) {
  using boost::multiprecision::cpp_rational;
  for (std::uint64_t c : counts)
    if (c == 0)
      throw InputError("class counts must be positive");
  GrowthReport report;
  report.counts = counts;
  for (std::size_t n = 0; n + 1 < counts.size(); ++n) {
    cpp_rational r(counts[n + 1], counts[n]);
    report.ratios.push_back(r.str());
  }
  std::size_t N = counts.empty() ? 0 : counts.size() - 1;
  bool constant = counts.size() >= 2 &&
                  std::all_of(counts.begin(), counts.end(),
                              [&](std::uint64_t c) { return c == counts[0]; });
  bool affine = false;
  if (N >= 2) {
    affine = true;
    std::int64_t d1 = static_cast<std::int64_t>(counts[2]) -
                      static_cast<std::int64_t>(counts[1]);
    for (std::size_t n = 1; n + 1 < counts.size(); ++n) {
      std::int64_t d = static_cast<std::int64_t>(counts[n + 1]) -
                       static_cast<std::int64_t>(counts[n]);
      if (d != d1) {
        affine = false;
        break;
      }
    }
  }
  bool superexp = false;
  if (N >= 2) {
    superexp = true;
    for (std::size_t n = 0; n + 1 < counts.size() && superexp; ++n)
      if (counts[n + 1] <= counts[n])
        superexp = false;
    for (std::size_t n = 0; n + 2 < counts.size() && superexp; ++n) {
      cpp_rational r1(counts[n + 1], counts[n]);
      cpp_rational r2(counts[n + 2], counts[n + 1]);
      if (r2 <= r1)
        superexp = false;
    }
    if (superexp && cpp_rational(counts[N], counts[N - 1]) < 2)
      superexp = false;
  }
  if (constant)
    report.verdict = GrowthVerdict::constant;
  else if (affine)
    report.verdict = GrowthVerdict::affine;
  else if (superexp)
    report.verdict = GrowthVerdict::superexponential;
  else
    report.verdict = GrowthVerdict::indeterminate;
  report.candidate_small = report.verdict == GrowthVerdict::constant ||
                           report.verdict == GrowthVerdict::affine;
  report.summary = "heuristic verdict from a finite prefix: " +
                   to_string(report.verdict) +
                   (report.candidate_small ? " growth (candidate-small)"
                                           : " growth (candidate-large)");
  if (report.verdict == GrowthVerdict::indeterminate)
    report.summary = "heuristic verdict from a finite prefix: indeterminate";
  return report;
}

GrowthReport smallness_probe(const GroupSpec &spec, std::size_t max_level,
                             const CensusOptions &opts) {
  CensusResult census = census_iso(spec, max_level, opts);
  return classify_growth(census.counts);
}

} // namespace rooted_iso
