#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rooted_iso/portrait.hpp"

namespace rooted_iso {

/// The quotient of the truncated tree by the cyclic group generated by one
/// isometry: one node per cycle, labelled with the cycle size.  Node 0 is
/// the root orbit; nodes are created layer by layer in order of smallest
/// member rank, so ids are deterministic.
struct OrbitTree {
  struct Node {
    std::uint64_t label = 0;  // orbit size
    std::size_t level = 0;
    int parent = -1;          // -1 for the root
    std::vector<int> children;
    std::uint64_t rep_rank = 0; // smallest member, as a layer rank
  };

  std::size_t depth = 0;
  std::vector<Node> nodes;
  // node id of each vertex, per layer (node_of[k][rank]); kept for
  // conjugator construction and invariant checks.
  std::vector<std::vector<int>> node_of;
};

/// Canonical form of a labelled rooted tree, as a byte string.  At fixed
/// depth the per-level valencies of the quotient are recoverable from the
/// tree shape together with the labels, so the code stores labels only.
struct CanonCode {
  std::string bytes;

  std::string hex() const;

  friend bool operator==(const CanonCode &, const CanonCode &) = default;
  friend auto operator<=>(const CanonCode &, const CanonCode &) = default;
};

// Computes the orbit tree of g by walking cycles on each layer; parent
// links are recovered through the layer-(k-1) node ids of member prefixes.
OrbitTree orbit_tree(const Portrait &g);

// Bottom-up canonical form: a node's code is its label (8-byte big endian)
// followed by the multiset of child codes sorted bytewise, wrapped in
// parentheses.  Equal codes iff the labelled trees are isomorphic by a
// label-preserving rooted-tree isomorphism.
CanonCode canonical_code(const OrbitTree &t);

// Per-node codes (aligned with t.nodes); [root] equals canonical_code.
std::vector<std::string> node_codes(const OrbitTree &t);

// Conjugacy test in the depth-n truncation group: orbit trees of conjugate
// isometries are isomorphic as labelled trees, and conversely.
bool conjugate_in_iso(const Portrait &g, const Portrait &h);

// Constructive counterpart: some a with compose(inverse(a), compose(g, a))
// equal to h, built by aligning the two orbit trees top-down.  Cycle-to-
// cycle ties are broken by canonical-code order, then leftmost-first.
// Returns nullopt when the codes differ.
std::optional<Portrait> find_conjugator(const Portrait &g, const Portrait &h);

} // namespace rooted_iso
