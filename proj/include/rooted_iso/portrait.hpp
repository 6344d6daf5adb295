#pragma once

#include <cstdint>
#include <vector>

#include "rooted_iso/perm.hpp"
#include "rooted_iso/valency.hpp"

namespace rooted_iso {

/// A depth-n tree isometry as its portrait: one permutation per vertex of
/// depth < n, acting on the edges below that vertex.  Identity permutations
/// are stored explicitly; level k holds L(k) perms in layer-rank order.
///
/// Composition is applied left to right throughout the library: in
/// compose(f, g) the isometry f acts first, so the portrait of h = fg is
/// h(v) = f(v) * g(f-image of v).  apply() is correspondingly a left action
/// on words with apply(compose(f, g), v) == apply(g, apply(f, v)).
class Portrait {
public:
  Portrait() = default;

  static Portrait identity(const ValencySeq &vs, std::size_t depth);

  // The branching sequence restricted to this portrait's depth.
  const std::vector<std::uint32_t> &branching() const { return branching_; }
  std::size_t depth() const { return branching_.size(); }

  std::uint64_t layer_size(std::size_t level) const;

  const Perm &perm_at(std::size_t level, std::uint64_t rank) const {
    return levels_[level][rank];
  }
  void set_perm(std::size_t level, std::uint64_t rank, Perm p);

  const Perm &perm_at(const Vertex &v) const;

  bool is_identity() const;

  // Tree of this portrait (for vertex/rank helpers).
  ValencySeq tree() const { return ValencySeq(branching_); }

  friend bool operator==(const Portrait &, const Portrait &) = default;

private:
  Portrait(std::vector<std::uint32_t> branching,
           std::vector<std::vector<Perm>> levels)
      : branching_(std::move(branching)), levels_(std::move(levels)) {}

  std::vector<std::uint32_t> branching_;   // m_1 .. m_depth
  std::vector<std::vector<Perm>> levels_;  // levels_[k][rank], k < depth

  friend Portrait compose(const Portrait &, const Portrait &);
  friend Portrait inverse(const Portrait &);
  friend Portrait truncate(const Portrait &, std::size_t);
  friend class PortraitBuilder;
};

/// Mutable staging area for constructing portraits level by level.
class PortraitBuilder {
public:
  PortraitBuilder(const ValencySeq &vs, std::size_t depth);

  void set(std::size_t level, std::uint64_t rank, Perm p);
  Portrait build() &&;

private:
  std::vector<std::uint32_t> branching_;
  std::vector<std::vector<Perm>> levels_;
};

std::uint64_t hash_value(const Portrait &g);

struct PortraitHash {
  std::size_t operator()(const Portrait &g) const {
    return static_cast<std::size_t>(hash_value(g));
  }
};

// Image of v under g, computed letter by letter along the path; requires
// depth(v) <= depth(g).
Vertex apply(const Portrait &g, const Vertex &v);

// Permutation induced by g on layer `level`, as image ranks.
std::vector<std::uint64_t> layer_action(const Portrait &g, std::size_t level);

Portrait compose(const Portrait &f, const Portrait &g);
Portrait inverse(const Portrait &g);

// Restriction to the first k levels (a group homomorphism).
Portrait truncate(const Portrait &g, std::size_t k);

Portrait power(const Portrait &g, std::uint64_t e);

// compose(inverse(a), compose(g, a)).
Portrait conjugate(const Portrait &g, const Portrait &a);

// Order of g in the depth-n truncation group: lcm of its cycle lengths on
// the deepest layer (which determine all shallower layers).
std::uint64_t order_at_level(const Portrait &g);

// Cycle lengths of g on one layer, unsorted, in order of cycle discovery
// by smallest member rank.
std::vector<std::uint64_t> cycle_lengths(const Portrait &g, std::size_t level);

// Every internal vertex carries a perm of the branching degree.
bool is_valid_portrait(const Portrait &g);

} // namespace rooted_iso
