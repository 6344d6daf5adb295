#pragma once

#include <functional>
#include <string>

#include "rooted_iso/portrait.hpp"

namespace rooted_iso {

/// A lazily evaluated isometry of the (depth-D) tree: a deterministic rule
/// assigning a permutation to every internal vertex.  Rules must be pure;
/// any randomness enters only through explicitly seeded rule parameters, so
/// evaluations at different depths agree after truncation.
struct IsoGenerator {
  ValencySeq vs;
  std::string name;
  std::function<Perm(const Vertex &)> rule;
};

// Materializes the rule on every vertex of depth < d.
Portrait evaluate(const IsoGenerator &gen, std::size_t d,
                  std::uint64_t bound = kDefaultEnumerationBound);

} // namespace rooted_iso
