#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "rooted_iso/errors.hpp"
#include "rooted_iso/valency.hpp"

namespace rooted_iso {

/// Permutation of one alphabet {0, ..., k-1}, stored as its image array.
class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<Letter> images) : images_(std::move(images)) {
    if (!is_bijection())
      throw InputError("perm image array is not a bijection");
  }

  static Perm identity(std::uint32_t degree) {
    Perm p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Letter{0});
    return p;
  }

  std::uint32_t degree() const {
    return static_cast<std::uint32_t>(images_.size());
  }

  Letter operator[](Letter a) const { return images_[a]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  const std::vector<Letter> &images() const { return images_; }

  friend bool operator==(const Perm &, const Perm &) = default;

private:
  bool is_bijection() const {
    std::vector<bool> seen(images_.size(), false);
    for (Letter a : images_) {
      if (a >= images_.size() || seen[a])
        return false;
      seen[a] = true;
    }
    return true;
  }

  std::vector<Letter> images_;
};

// Apply `a` first, then `b` (same order convention as portrait composition).
inline Perm compose(const Perm &a, const Perm &b) {
  if (a.degree() != b.degree())
    throw InputError("perm degree mismatch");
  std::vector<Letter> out(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i)
    out[i] = b[a[static_cast<Letter>(i)]];
  return Perm(std::move(out));
}

inline Perm inverse(const Perm &p) {
  std::vector<Letter> out(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    out[p[static_cast<Letter>(i)]] = static_cast<Letter>(i);
  return Perm(std::move(out));
}

// (0 1) padded with fixed points; degree >= 2.
inline Perm transposition01(std::uint32_t degree) {
  if (degree < 2)
    throw InputError("transposition needs at least two letters");
  Perm p = Perm::identity(degree);
  std::vector<Letter> images = p.images();
  images[0] = 1;
  images[1] = 0;
  return Perm(std::move(images));
}

// (0 1 ... k-1).
inline Perm cycle_all(std::uint32_t degree) {
  std::vector<Letter> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i)
    images[i] = static_cast<Letter>((i + 1) % degree);
  return Perm(std::move(images));
}

} // namespace rooted_iso
