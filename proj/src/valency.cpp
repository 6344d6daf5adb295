#include "rooted_iso/valency.hpp"

#include <algorithm>

namespace rooted_iso {

namespace {

constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

} // namespace

ValencySeq::ValencySeq(std::vector<std::uint32_t> m) : m_(std::move(m)) {
  for (std::uint32_t mi : m_) {
    if (mi < 1)
      throw InputError("valency sequence entries must be >= 1");
    if (mi > 256)
      throw CapacityError("valency sequence entry exceeds 256 letters");
  }
}

std::uint32_t ValencySeq::branching(std::size_t level) const {
  if (level >= m_.size())
    throw InputError("branching requested beyond tree depth");
  return m_[level];
}

std::uint64_t ValencySeq::layer_size(std::size_t n, std::uint64_t bound) const {
  if (n > m_.size())
    throw InputError("layer beyond tree depth");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    // guard before multiplying so the product cannot wrap
    if (size > bound / m_[i])
      throw CapacityError("layer size exceeds enumeration bound", size);
    size *= m_[i];
  }
  return size;
}

bool ValencySeq::all_at_least_two() const {
  return std::all_of(m_.begin(), m_.end(),
                     [](std::uint32_t mi) { return mi >= 2; });
}

Vertex Vertex::parent() const {
  if (is_root())
    throw InputError("root has no parent");
  Vertex p{word};
  p.word.pop_back();
  return p;
}

Vertex Vertex::child(Letter a) const {
  Vertex c{word};
  c.word.push_back(a);
  return c;
}

std::string to_string(const Vertex &v) {
  std::string s;
  s.reserve(v.word.size());
  for (Letter a : v.word) {
    if (a >= 36)
      throw CapacityError("vertex letter has no character form");
    s.push_back(kDigits[a]);
  }
  return s;
}

Vertex vertex_from_string(const std::string &s, const ValencySeq &vs) {
  Vertex v;
  v.word.reserve(s.size());
  for (char c : s) {
    const char *pos = std::char_traits<char>::find(kDigits, 36, c);
    if (pos == nullptr)
      throw InputError("invalid letter character in vertex word");
    v.word.push_back(static_cast<Letter>(pos - kDigits));
  }
  if (!is_valid_vertex(vs, v))
    throw InputError("vertex word out of range for tree");
  return v;
}

bool is_valid_vertex(const ValencySeq &vs, const Vertex &v) {
  if (v.depth() > vs.max_depth())
    return false;
  for (std::size_t i = 0; i < v.word.size(); ++i) {
    if (v.word[i] >= vs.branching(i))
      return false;
  }
  return true;
}

std::uint64_t vertex_rank(const ValencySeq &vs, const Vertex &v) {
  if (!is_valid_vertex(vs, v))
    throw InputError("invalid vertex");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < v.word.size(); ++i)
    r = r * vs.branching(i) + v.word[i];
  return r;
}

Vertex vertex_from_rank(const ValencySeq &vs, std::size_t level,
                        std::uint64_t rank) {
  Vertex v;
  v.word.resize(level);
  for (std::size_t i = level; i-- > 0;) {
    std::uint32_t m = vs.branching(i);
    v.word[i] = static_cast<Letter>(rank % m);
    rank /= m;
  }
  if (rank != 0)
    throw InputError("rank out of range for layer");
  return v;
}

std::vector<Vertex> layer(const ValencySeq &vs, std::size_t n,
                          std::uint64_t bound) {
  std::uint64_t size = vs.layer_size(n, bound);
  std::vector<Vertex> out;
  out.reserve(size);
  Vertex v;
  v.word.assign(n, 0);
  for (std::uint64_t r = 0; r < size; ++r) {
    out.push_back(v);
    // next word in lexicographic order
    for (std::size_t i = n; i-- > 0;) {
      if (++v.word[i] < vs.branching(i))
        break;
      v.word[i] = 0;
    }
  }
  return out;
}

std::vector<Vertex> children(const ValencySeq &vs, const Vertex &v) {
  if (v.depth() >= vs.max_depth())
    throw InputError("vertex has no children at tree depth");
  if (!is_valid_vertex(vs, v))
    throw InputError("invalid vertex");
  std::uint32_t m = vs.branching(v.depth());
  std::vector<Vertex> out;
  out.reserve(m);
  for (std::uint32_t a = 0; a < m; ++a)
    out.push_back(v.child(static_cast<Letter>(a)));
  return out;
}

} // namespace rooted_iso
