#include "rooted_iso/portrait.hpp"

#include <numeric>

namespace rooted_iso {

namespace {

std::vector<std::uint32_t> branching_prefix(const ValencySeq &vs,
                                            std::size_t depth) {
  if (depth > vs.max_depth())
    throw InputError("portrait depth exceeds tree depth");
  return {vs.entries().begin(), vs.entries().begin() + depth};
}

void require_same_shape(const Portrait &f, const Portrait &g) {
  if (f.branching() != g.branching())
    throw InputError("portrait shape mismatch");
}

} // namespace

Portrait Portrait::identity(const ValencySeq &vs, std::size_t depth) {
  PortraitBuilder b(vs, depth);
  std::uint64_t L = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    Perm id = Perm::identity(vs.branching(k));
    for (std::uint64_t r = 0; r < L; ++r)
      b.set(k, r, id);
    L *= vs.branching(k);
  }
  return std::move(b).build();
}

std::uint64_t Portrait::layer_size(std::size_t level) const {
  std::uint64_t L = 1;
  for (std::size_t k = 0; k < level; ++k)
    L *= branching_[k];
  return L;
}

void Portrait::set_perm(std::size_t level, std::uint64_t rank, Perm p) {
  if (p.degree() != branching_[level])
    throw InputError("perm degree does not match branching");
  levels_[level][rank] = std::move(p);
}

const Perm &Portrait::perm_at(const Vertex &v) const {
  if (v.depth() >= depth())
    throw InputError("vertex at or beyond portrait depth");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < v.word.size(); ++i) {
    if (v.word[i] >= branching_[i])
      throw InputError("vertex letter out of range");
    r = r * branching_[i] + v.word[i];
  }
  return levels_[v.depth()][r];
}

bool Portrait::is_identity() const {
  for (const auto &level : levels_)
    for (const Perm &p : level)
      if (!p.is_identity())
        return false;
  return true;
}

PortraitBuilder::PortraitBuilder(const ValencySeq &vs, std::size_t depth)
    : branching_(branching_prefix(vs, depth)) {
  levels_.resize(depth);
  std::uint64_t L = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    vs.layer_size(k); // bound check
    levels_[k].resize(L);
    L *= branching_[k];
  }
}

void PortraitBuilder::set(std::size_t level, std::uint64_t rank, Perm p) {
  if (level >= levels_.size() || rank >= levels_[level].size())
    throw InputError("portrait slot out of range");
  if (p.degree() != branching_[level])
    throw InputError("perm degree does not match branching");
  levels_[level][rank] = std::move(p);
}

Portrait PortraitBuilder::build() && {
  for (std::size_t k = 0; k < levels_.size(); ++k)
    for (const Perm &p : levels_[k])
      if (p.degree() != branching_[k])
        throw InputError("portrait has an unset vertex perm");
  return Portrait(std::move(branching_), std::move(levels_));
}

std::uint64_t hash_value(const Portrait &g) {
  // FNV-1a over the branching sequence and all image bytes.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(g.depth());
  for (std::size_t k = 0; k < g.depth(); ++k) {
    mix(g.branching()[k]);
    std::uint64_t L = g.layer_size(k);
    for (std::uint64_t r = 0; r < L; ++r)
      for (Letter a : g.perm_at(k, r).images())
        mix(a);
  }
  return h;
}

Vertex apply(const Portrait &g, const Vertex &v) {
  if (v.depth() > g.depth())
    throw InputError("vertex deeper than portrait");
  Vertex out;
  out.word.reserve(v.depth());
  std::uint64_t prefix_rank = 0; // rank of the original prefix
  for (std::size_t i = 0; i < v.word.size(); ++i) {
    Letter a = v.word[i];
    if (a >= g.branching()[i])
      throw InputError("vertex letter out of range");
    out.word.push_back(g.perm_at(i, prefix_rank)[a]);
    prefix_rank = prefix_rank * g.branching()[i] + a;
  }
  return out;
}

std::vector<std::uint64_t> layer_action(const Portrait &g, std::size_t level) {
  if (level > g.depth())
    throw InputError("layer beyond portrait depth");
  std::vector<std::uint64_t> img{0};
  for (std::size_t k = 0; k < level; ++k) {
    std::uint32_t m = g.branching()[k];
    std::uint64_t L = g.layer_size(k);
    std::vector<std::uint64_t> next(L * m);
    for (std::uint64_t r = 0; r < L; ++r) {
      const Perm &p = g.perm_at(k, r);
      std::uint64_t base = img[r] * m;
      for (std::uint32_t a = 0; a < m; ++a)
        next[r * m + a] = base + p[static_cast<Letter>(a)];
    }
    img = std::move(next);
  }
  return img;
}

Portrait compose(const Portrait &f, const Portrait &g) {
  require_same_shape(f, g);
  ValencySeq vs = f.tree();
  PortraitBuilder out(vs, f.depth());
  std::vector<std::uint64_t> f_img{0}; // layer action of f at level k
  for (std::size_t k = 0; k < f.depth(); ++k) {
    std::uint32_t m = f.branching()[k];
    std::uint64_t L = f.layer_size(k);
    std::vector<std::uint64_t> next(L * m);
    for (std::uint64_t r = 0; r < L; ++r) {
      const Perm &fp = f.perm_at(k, r);
      const Perm &gp = g.perm_at(k, f_img[r]);
      out.set(k, r, compose(fp, gp));
      std::uint64_t base = f_img[r] * m;
      for (std::uint32_t a = 0; a < m; ++a)
        next[r * m + a] = base + fp[static_cast<Letter>(a)];
    }
    f_img = std::move(next);
  }
  return std::move(out).build();
}

Portrait inverse(const Portrait &g) {
  ValencySeq vs = g.tree();
  PortraitBuilder out(vs, g.depth());
  std::vector<std::uint64_t> img{0}; // layer action of g at level k
  for (std::size_t k = 0; k < g.depth(); ++k) {
    std::uint64_t L = g.layer_size(k);
    // inverse portrait: perm at v = (perm of g at the g-preimage of v)^-1
    std::vector<std::uint64_t> pre(L);
    for (std::uint64_t r = 0; r < L; ++r)
      pre[img[r]] = r;
    for (std::uint64_t r = 0; r < L; ++r)
      out.set(k, r, inverse(g.perm_at(k, pre[r])));
    std::uint32_t m = g.branching()[k];
    std::vector<std::uint64_t> next(L * m);
    for (std::uint64_t r = 0; r < L; ++r) {
      const Perm &p = g.perm_at(k, r);
      std::uint64_t base = img[r] * m;
      for (std::uint32_t a = 0; a < m; ++a)
        next[r * m + a] = base + p[static_cast<Letter>(a)];
    }
    img = std::move(next);
  }
  return std::move(out).build();
}

Portrait truncate(const Portrait &g, std::size_t k) {
  if (k > g.depth())
    throw InputError("truncation depth exceeds portrait depth");
  std::vector<std::uint32_t> branching(g.branching().begin(),
                                       g.branching().begin() + k);
  std::vector<std::vector<Perm>> levels(g.levels_.begin(),
                                        g.levels_.begin() + k);
  return Portrait(std::move(branching), std::move(levels));
}

Portrait power(const Portrait &g, std::uint64_t e) {
  Portrait acc = Portrait::identity(g.tree(), g.depth());
  Portrait base = g;
  while (e > 0) {
    if (e & 1)
      acc = compose(acc, base);
    e >>= 1;
    if (e > 0)
      base = compose(base, base);
  }
  return acc;
}

Portrait conjugate(const Portrait &g, const Portrait &a) {
  return compose(inverse(a), compose(g, a));
}

std::uint64_t order_at_level(const Portrait &g) {
  std::uint64_t ord = 1;
  for (std::uint64_t len : cycle_lengths(g, g.depth())) {
    std::uint64_t q = ord / std::gcd(ord, len);
    if (q > UINT64_MAX / len)
      throw CapacityError("element order overflows 64 bits");
    ord = q * len;
  }
  return ord;
}

std::vector<std::uint64_t> cycle_lengths(const Portrait &g,
                                         std::size_t level) {
  std::vector<std::uint64_t> sigma = layer_action(g, level);
  std::vector<bool> seen(sigma.size(), false);
  std::vector<std::uint64_t> lengths;
  for (std::uint64_t start = 0; start < sigma.size(); ++start) {
    if (seen[start])
      continue;
    std::uint64_t len = 0;
    for (std::uint64_t x = start; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

bool is_valid_portrait(const Portrait &g) {
  for (std::size_t k = 0; k < g.depth(); ++k) {
    std::uint64_t L = g.layer_size(k);
    for (std::uint64_t r = 0; r < L; ++r)
      if (g.perm_at(k, r).degree() != g.branching()[k])
        return false;
  }
  return true;
}

} // namespace rooted_iso
