#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rooted_iso/group_spec.hpp"
#include "rooted_iso/orbit_tree.hpp"
#include "rooted_iso/portrait.hpp"
#include "rooted_iso/recurrence.hpp"

namespace rooted_iso {

/// The finite group of level-n restrictions, fully enumerated.  Elements
/// appear in breadth-first closure order with the identity first.
struct LevelGroup {
  std::size_t depth = 0;
  std::vector<Portrait> elements;
  std::string provenance;
  std::unordered_map<Portrait, std::uint32_t, PortraitHash> index;

  std::uint64_t size() const { return elements.size(); }
  std::optional<std::uint32_t> index_of(const Portrait &g) const;
};

// Truncations of the spec's generators to depth `level`, deduplicated
// (identity dropped), in generator order.
std::vector<Portrait> truncated_generators(const GroupSpec &spec,
                                           std::size_t level,
                                           std::uint64_t bound =
                                               kDefaultEnumerationBound);

// Breadth-first closure of the truncated generators under composition.
LevelGroup enumerate(const GroupSpec &spec, std::size_t level,
                     std::uint64_t bound = kDefaultEnumerationBound);

enum class CensusMode { iso, gamma };

struct CensusOptions {
  std::uint64_t bound = kDefaultEnumerationBound;
  int threads = 1;
};

/// Level-wise class counts of a group's elements, together with one
/// representative per class.  In iso mode classes are canonical-code
/// classes (conjugacy in the full truncation group); in gamma mode they
/// are orbits of conjugation by the projected gamma group.  Level-n
/// elements are derived from one depth-N enumeration by truncation, so a
/// level-n representative always extends to level n+1 in the same list.
struct CensusResult {
  CensusMode mode = CensusMode::iso;
  std::vector<std::uint64_t> counts; // c_0 .. c_N
  std::vector<std::vector<Portrait>> representatives;
  std::vector<std::vector<std::uint32_t>> class_ids; // per level, per element
  std::optional<RationalFit> fitted; // populated when the series reaches c_4
};

CensusResult census_iso(const GroupSpec &spec, std::size_t max_level,
                        const CensusOptions &opts = {});

// Classes of spec's level groups under conjugation by gamma's level groups,
// computed by expanding conjugation orbits of the gamma generators.  Any
// enumerable gamma on the same tree is accepted.
CensusResult census_gamma(const GroupSpec &spec, const GroupSpec &gamma,
                          std::size_t max_level,
                          const CensusOptions &opts = {});

// Canonical-code bytes of each element's orbit tree; computed in parallel
// chunks when threads > 1 (results are position-stable either way).
std::vector<std::string> orbit_codes(const std::vector<Portrait> &elements,
                                     int threads = 1);

// Orbit partition of `elements` under conjugation by the group generated
// by gamma_gens; returns the class id of each element (ids numbered by
// first appearance).
std::vector<std::uint32_t>
gamma_partition(const std::vector<Portrait> &elements,
                const std::vector<Portrait> &gamma_gens,
                std::uint64_t bound = kDefaultEnumerationBound);

// Elements whose depth-k truncation is the identity (the kernel of
// truncation, equal to the pointwise stabilizer of the first k layers).
std::vector<Portrait> level_stabilizer(const LevelGroup &lg, std::size_t k);

// Elements fixing everything outside the subtree at v pointwise.
std::vector<Portrait> rigid_stabilizer(const LevelGroup &lg, const Vertex &v);

enum class GrowthVerdict { constant, affine, superexponential, indeterminate };

std::string to_string(GrowthVerdict v);

/// Heuristic growth report for the class-count series.  Finite data cannot
/// decide smallness; the verdict only grades the visible prefix.
struct GrowthReport {
  std::vector<std::uint64_t> counts;
  std::vector<std::string> ratios; // exact fractions c_{n+1}/c_n
  GrowthVerdict verdict = GrowthVerdict::indeterminate;
  bool candidate_small = false;
  std::string summary; // always labelled heuristic
};

GrowthReport smallness_probe(const GroupSpec &spec, std::size_t max_level,
                             const CensusOptions &opts = {});

// Growth classification of a bare series (exposed for reports and tests).
GrowthReport classify_growth(const std::vector<std::uint64_t> &counts);

} // namespace rooted_iso
