#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rooted_iso/errors.hpp"

namespace rooted_iso {

using Letter = std::uint8_t;

/// Branching sequence (m_1, ..., m_D) of a spherically homogeneous rooted
/// tree truncated at depth D: every vertex at depth k < D has m_{k+1}
/// children, labelled 0 .. m_{k+1}-1.  Immutable after construction.
class ValencySeq {
public:
  ValencySeq() = default;

  // Requires every m_i >= 1; letters are stored in a byte, so m_i <= 256.
  explicit ValencySeq(std::vector<std::uint32_t> m);

  std::size_t max_depth() const { return m_.size(); }

  // Children count of a vertex at depth `level` (0-based; level < D).
  std::uint32_t branching(std::size_t level) const;

  const std::vector<std::uint32_t> &entries() const { return m_; }

  // L(n) = m_1 * ... * m_n, guarded by `bound`.
  std::uint64_t layer_size(std::size_t n,
                           std::uint64_t bound = kDefaultEnumerationBound) const;

  // True when every m_i >= 2 (required for the group-action constructors).
  bool all_at_least_two() const;

  friend bool operator==(const ValencySeq &, const ValencySeq &) = default;

private:
  std::vector<std::uint32_t> m_;
};

/// A vertex of T_m̄ as the word of edge letters on the path from the root;
/// the empty word is the root.
struct Vertex {
  std::vector<Letter> word;

  std::size_t depth() const { return word.size(); }
  bool is_root() const { return word.empty(); }

  Vertex parent() const;
  Vertex child(Letter a) const;

  friend bool operator==(const Vertex &, const Vertex &) = default;
  friend auto operator<=>(const Vertex &, const Vertex &) = default;
};

// Word rendering for JSON keys and diagnostics: one character per letter,
// '0'-'9' then 'a'-'z'.  Letters beyond 35 have no character form.
std::string to_string(const Vertex &v);
Vertex vertex_from_string(const std::string &s, const ValencySeq &vs);

// Checks every letter against the alphabet of its level.
bool is_valid_vertex(const ValencySeq &vs, const Vertex &v);

// Lexicographic rank of v within its layer (mixed-radix value of the word).
std::uint64_t vertex_rank(const ValencySeq &vs, const Vertex &v);
Vertex vertex_from_rank(const ValencySeq &vs, std::size_t level,
                        std::uint64_t rank);

// All L(n) vertices of depth n in lexicographic order.
std::vector<Vertex> layer(const ValencySeq &vs, std::size_t n,
                          std::uint64_t bound = kDefaultEnumerationBound);

// Children v.0, v.1, ... in letter order; requires depth(v) < D.
std::vector<Vertex> children(const ValencySeq &vs, const Vertex &v);

} // namespace rooted_iso
