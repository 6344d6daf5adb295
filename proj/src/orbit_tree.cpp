#include "rooted_iso/orbit_tree.hpp"

#include <algorithm>
#include <array>

namespace rooted_iso {

namespace {

void append_be64(std::string &out, std::uint64_t x) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<char>((x >> shift) & 0xff));
}

} // namespace

std::string CanonCode::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

OrbitTree orbit_tree(const Portrait &g) {
  OrbitTree t;
  t.depth = g.depth();
  t.nodes.push_back({1, 0, -1, {}, 0});
  t.node_of.resize(g.depth() + 1);
  t.node_of[0] = {0};
  for (std::size_t k = 1; k <= g.depth(); ++k) {
    std::vector<std::uint64_t> sigma = layer_action(g, k);
    std::uint32_t m = g.branching()[k - 1];
    std::vector<int> ids(sigma.size(), -1);
    for (std::uint64_t start = 0; start < sigma.size(); ++start) {
      if (ids[start] >= 0)
        continue;
      int id = static_cast<int>(t.nodes.size());
      std::uint64_t len = 0;
      for (std::uint64_t x = start; ids[x] < 0; x = sigma[x]) {
        ids[x] = id;
        ++len;
      }
      int parent = t.node_of[k - 1][start / m];
      t.nodes.push_back({len, k, parent, {}, start});
      t.nodes[parent].children.push_back(id);
    }
    t.node_of[k] = std::move(ids);
  }
  return t;
}

std::vector<std::string> node_codes(const OrbitTree &t) {
  // Children always have higher ids than parents, so one reverse sweep
  // computes codes bottom-up.
  std::vector<std::string> codes(t.nodes.size());
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const OrbitTree::Node &n = t.nodes[i];
    std::vector<const std::string *> child_codes;
    child_codes.reserve(n.children.size());
    for (int c : n.children)
      child_codes.push_back(&codes[c]);
    // bytewise order on child codes = order on (label, code) pairs, since
    // each code starts with its big-endian label
    std::sort(child_codes.begin(), child_codes.end(),
              [](const std::string *a, const std::string *b) { return *a < *b; });
    std::string code;
    append_be64(code, n.label);
    code.push_back('(');
    for (const std::string *c : child_codes)
      code += *c;
    code.push_back(')');
    codes[i] = std::move(code);
  }
  return codes;
}

CanonCode canonical_code(const OrbitTree &t) {
  return CanonCode{node_codes(t)[0]};
}

bool conjugate_in_iso(const Portrait &g, const Portrait &h) {
  if (g.branching() != h.branching())
    throw InputError("portrait shape mismatch");
  return canonical_code(orbit_tree(g)) == canonical_code(orbit_tree(h));
}

namespace {

// One matched pair of orbit nodes, with the vertex representatives the
// witness has already been committed on.
struct AlignTask {
  std::size_t level;
  std::uint64_t orbit_size;
  std::uint64_t g_rep; // rank at `level`
  std::uint64_t h_rep;
};

struct CycleInfo {
  Letter leader;             // smallest letter of the cycle
  std::uint64_t length;
  const std::string *code;   // orbit-subtree code of the child orbit
};

} // namespace

std::optional<Portrait> find_conjugator(const Portrait &g,
                                        const Portrait &h) {
  if (g.branching() != h.branching())
    throw InputError("portrait shape mismatch");
  OrbitTree tg = orbit_tree(g);
  OrbitTree th = orbit_tree(h);
  std::vector<std::string> cg = node_codes(tg);
  std::vector<std::string> ch = node_codes(th);
  if (cg[0] != ch[0])
    return std::nullopt;

  std::size_t n = g.depth();
  // witness layer actions, level by level
  std::vector<std::vector<std::uint64_t>> A(n + 1);
  A[0] = {0};
  for (std::size_t k = 1; k <= n; ++k)
    A[k].assign(g.layer_size(k - 1) * g.branching()[k - 1], 0);

  std::vector<std::vector<std::uint64_t>> sg(n + 1), sh(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    sg[k] = layer_action(g, k);
    sh[k] = layer_action(h, k);
  }

  std::vector<AlignTask> stack{{0, 1, 0, 0}};
  while (!stack.empty()) {
    AlignTask task = stack.back();
    stack.pop_back();
    if (task.level == n)
      continue;
    std::size_t k = task.level;
    std::uint32_t m = g.branching()[k];
    std::uint64_t L = task.orbit_size;

    // first-return permutations on the children of the two representatives
    auto first_return = [&](const std::vector<std::uint64_t> &sigma,
                            std::uint64_t parent_rank) {
      std::vector<Letter> ret(m);
      for (std::uint32_t a = 0; a < m; ++a) {
        std::uint64_t x = parent_rank * m + a;
        for (std::uint64_t i = 0; i < L; ++i)
          x = sigma[x];
        ret[a] = static_cast<Letter>(x - parent_rank * m);
      }
      return ret;
    };
    std::vector<Letter> sg_ret = first_return(sg[k + 1], task.g_rep);
    std::vector<Letter> sh_ret = first_return(sh[k + 1], task.h_rep);

    // cycles of the first-return perms, tagged with orbit-subtree codes
    auto collect = [&](const std::vector<Letter> &ret, const OrbitTree &t,
                       const std::vector<std::string> &codes,
                       std::uint64_t parent_rank) {
      std::vector<CycleInfo> cycles;
      std::vector<bool> seen(m, false);
      for (std::uint32_t a = 0; a < m; ++a) {
        if (seen[a])
          continue;
        std::uint64_t len = 0;
        for (Letter x = static_cast<Letter>(a); !seen[x]; x = ret[x]) {
          seen[x] = true;
          ++len;
        }
        int node = t.node_of[k + 1][parent_rank * m + a];
        cycles.push_back({static_cast<Letter>(a), len, &codes[node]});
      }
      std::sort(cycles.begin(), cycles.end(),
                [](const CycleInfo &x, const CycleInfo &y) {
                  if (*x.code != *y.code)
                    return *x.code < *y.code;
                  return x.leader < y.leader;
                });
      return cycles;
    };
    std::vector<CycleInfo> gc = collect(sg_ret, tg, cg, task.g_rep);
    std::vector<CycleInfo> hc = collect(sh_ret, th, ch, task.h_rep);
    // codes match at this node, so the sorted cycle code lists agree
    for (std::size_t i = 0; i < gc.size(); ++i) {
      std::uint64_t x = task.g_rep * m + gc[i].leader;
      std::uint64_t y = task.h_rep * m + hc[i].leader;
      std::uint64_t child_orbit = L * gc[i].length;
      // commit the witness on the whole child orbit: A(g^j x) = h^j y
      std::uint64_t xs = x, ys = y;
      for (std::uint64_t j = 0; j < child_orbit; ++j) {
        A[k + 1][xs] = ys;
        xs = sg[k + 1][xs];
        ys = sh[k + 1][ys];
      }
      stack.push_back({k + 1, child_orbit, x, y});
    }
  }

  // read the witness portrait off its layer actions
  ValencySeq vs = g.tree();
  PortraitBuilder builder(vs, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint32_t m = g.branching()[k];
    std::uint64_t L = g.layer_size(k);
    for (std::uint64_t r = 0; r < L; ++r) {
      std::vector<Letter> images(m);
      for (std::uint32_t a = 0; a < m; ++a)
        images[a] = static_cast<Letter>(A[k + 1][r * m + a] - A[k][r] * m);
      builder.set(k, r, Perm(std::move(images)));
    }
  }
  return std::move(builder).build();
}

} // namespace rooted_iso
