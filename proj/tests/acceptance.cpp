// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Run with no arguments for all criteria, or with a criterion number.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "oracles.hpp"
#include "rooted_iso/census.hpp"
#include "rooted_iso/generator.hpp"
#include "rooted_iso/group_spec.hpp"
#include "rooted_iso/json_io.hpp"
#include "rooted_iso/orbit_tree.hpp"
#include "rooted_iso/padic.hpp"

using namespace rooted_iso;
using namespace rooted_iso::testing;

namespace {

struct Checker {
  int failures = 0;
  std::ostringstream notes;

  void check(bool ok, const std::string &what) {
    if (!ok) {
      ++failures;
      notes << "      failed: " << what << "\n";
    }
  }
  template <typename T>
  void check_eq(const T &got, const T &want, const std::string &what) {
    if (!(got == want)) {
      ++failures;
      notes << "      failed: " << what << "\n";
    }
  }
};

std::string fmt_series(const std::vector<std::uint64_t> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::map<std::uint64_t, std::size_t> cycle_census(const Portrait &g,
                                                  std::size_t level) {
  std::map<std::uint64_t, std::size_t> census;
  for (std::uint64_t l : cycle_lengths(g, level))
    ++census[l];
  return census;
}

// ---------------------------------------------------------------- 1
// Orbit-tree canonical codes decide conjugacy exactly: the code partition
// equals the exhaustive-conjugation partition on the full finite isometry
// groups of the binary tree (depths 1-3) and of the (3,2) tree (depth 2);
// binary class counts are 2, 5, 20.
bool criterion1(Checker &c) {
  ValencySeq binary({2, 2, 2});
  std::vector<std::uint64_t> binary_counts;
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    ValencySeq vs(std::vector<std::uint32_t>(depth, 2));
    std::vector<Portrait> group = all_isometries(vs, depth);
    c.check_eq<std::uint64_t>(group.size(), 1ull << ((1ull << depth) - 1),
                              "binary group order at depth " +
                                  std::to_string(depth));
    std::vector<std::uint32_t> oracle = exhaustive_conjugacy_partition(group);
    std::vector<std::string> codes = orbit_codes(group);
    std::vector<std::uint32_t> via_codes(group.size());
    std::map<std::string, std::uint32_t> first;
    for (std::size_t i = 0; i < group.size(); ++i)
      via_codes[i] =
          first.emplace(codes[i], static_cast<std::uint32_t>(first.size()))
              .first->second;
    c.check(same_partition(oracle, via_codes),
            "code partition == conjugation partition, binary depth " +
                std::to_string(depth));
    binary_counts.push_back(partition_size(oracle));
  }
  c.check_eq(binary_counts, {2, 5, 20}, "binary class counts 2, 5, 20");
  for (std::size_t n = 1; n <= 3; ++n)
    c.check_eq(binary_counts[n - 1], wreath_class_recurrence(n),
               "recurrence cross-check at depth " + std::to_string(n));

  ValencySeq mixed({3, 2});
  std::vector<Portrait> group = all_isometries(mixed, 2);
  c.check_eq<std::uint64_t>(group.size(), 48, "|Iso| of the (3,2) tree");
  std::vector<std::uint32_t> oracle = exhaustive_conjugacy_partition(group);
  std::vector<std::string> codes = orbit_codes(group);
  std::vector<std::uint32_t> via_codes(group.size());
  std::map<std::string, std::uint32_t> first;
  for (std::size_t i = 0; i < group.size(); ++i)
    via_codes[i] =
        first.emplace(codes[i], static_cast<std::uint32_t>(first.size()))
            .first->second;
  c.check(same_partition(oracle, via_codes),
          "code partition == conjugation partition, (3,2) depth 2");
  return c.failures == 0;
}

// ---------------------------------------------------------------- 2
// Adding machine census: c_n = n+1 for n <= 6; elements are equivalent
// exactly when their kernels agree; the fitted series is 1/(1-t)^2.
bool criterion2(Checker &c) {
  GroupSpec spec = adding_machine(6);
  CensusResult r = census_iso(spec, 6);
  c.check_eq(r.counts, {1, 2, 3, 4, 5, 6, 7}, "c_n = n+1 for n <= 6");

  LevelGroup lg = enumerate(spec, 6);
  Portrait g = evaluate(spec.generators[0], 6);
  // kernel depth of g^j is the 2-adic valuation of j
  auto kernel_depth = [&](std::uint64_t j) {
    std::uint32_t v = 0;
    while (j % 2 == 0 && j != 0) {
      j /= 2;
      ++v;
    }
    return j == 0 ? UINT32_MAX : v;
  };
  std::vector<std::string> codes;
  for (std::uint64_t j = 0; j < 64; ++j)
    codes.push_back(canonical_code(orbit_tree(power(g, j))).bytes);
  for (std::uint64_t i = 0; i < 64; ++i)
    for (std::uint64_t j = 0; j < 64; ++j)
      c.check((codes[i] == codes[j]) == (kernel_depth(i) == kernel_depth(j)),
              "kernel layers classify powers " + std::to_string(i) + "," +
                  std::to_string(j));

  c.check(r.fitted.has_value(), "series admits a rational fit");
  if (r.fitted) {
    c.check_eq(r.fitted->numerator, {1}, "fit numerator 1");
    c.check_eq(r.fitted->denominator, {1, -2, 1}, "fit denominator (1-t)^2");
  }
  return c.failures == 0;
}

// ---------------------------------------------------------------- 3
// Exact cycle counts.  Odometer powers of valuation k: exactly 2^k cycles
// of length 2^(m-k) on layers k < m <= 6.  Carry-free Z(2) elements whose
// first nonzero coordinate is n+1: exactly 2^(m-n-1) two-cycles on layer m
// below each fixed level-n vertex (for n = 0 that is the whole layer).
bool criterion3(Checker &c) {
  Portrait g = evaluate(adding_machine(6).generators[0], 6);
  for (std::uint32_t k = 0; k <= 5; ++k)
    for (std::uint64_t odd : {1ull, 3ull, 5ull}) {
      Portrait gk = power(g, odd << k);
      for (std::size_t m = k + 1; m <= 6; ++m) {
        auto census = cycle_census(gk, m);
        bool exact = census.size() == 1 &&
                     census.count(1ull << (m - k)) == 1 &&
                     census.at(1ull << (m - k)) == (1ull << k);
        c.check(exact, "odometer valuation " + std::to_string(k) +
                           " layer " + std::to_string(m));
      }
    }

  GroupSpec z2 = z2_power_binary(6);
  for (std::size_t n = 0; n <= 2; ++n) {
    Portrait e = evaluate(z2.generators[n], 6); // coordinate n+1
    for (std::size_t m = n + 1; m <= 6; ++m) {
      auto census = cycle_census(e, m);
      c.check(census.size() == 1 && census.count(2) == 1,
              "carry-free element moves layer " + std::to_string(m) +
                  " in two-cycles only");
      // per level-n subtree: 2^(m-n-1) two-cycles; the layer splits into
      // 2^n such subtrees
      c.check(census.at(2) == (1ull << n) * (1ull << (m - n - 1)),
              "two-cycle count below level-" + std::to_string(n) +
                  " vertices at layer " + std::to_string(m));
      if (n == 0)
        c.check(census.at(2) == (1ull << (m - 1)),
                "global two-cycle count at layer " + std::to_string(m));
    }
  }
  return c.failures == 0;
}

// ---------------------------------------------------------------- 4
// Valuation tuples determine cycle lengths for the determinant-one
// diagonal and the unitriangular actions at p = 3, precision 3: over 200+
// sampled exponent pairs with equal 3-adic valuation, the cycle-length
// multisets agree on every level <= 3 (pointwise per vertex, which is
// stronger).
bool criterion4(Checker &c) {
  std::uint64_t p = 3, q = 27;
  std::uint64_t l = one_unit_generator(p, 3);
  IsoGenerator sd = t_ad_generator(p, 2, 3, {l, 0, 0, inverse_mod(l, q)});
  IsoGenerator ut = t_ad_generator(p, 2, 3, {1, 1, 0, 1});
  auto val3 = [](std::uint64_t z) {
    std::uint32_t v = 0;
    while (z % 3 == 0) {
      z /= 3;
      ++v;
    }
    return v;
  };
  auto profile = [](const Portrait &g) {
    std::vector<std::vector<std::uint64_t>> prof;
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<std::uint64_t> sigma = layer_action(g, m);
      std::vector<std::uint64_t> len(sigma.size(), 0);
      for (std::uint64_t start = 0; start < sigma.size(); ++start) {
        if (len[start])
          continue;
        std::vector<std::uint64_t> cyc;
        std::uint64_t x = start;
        do {
          cyc.push_back(x);
          x = sigma[x];
        } while (x != start);
        for (std::uint64_t v : cyc)
          len[v] = cyc.size();
      }
      prof.push_back(std::move(len));
    }
    return prof;
  };

  std::mt19937_64 rng(987654321);
  int pairs = 0;
  for (const IsoGenerator &gen : {sd, ut}) {
    Portrait base = evaluate(gen, 3);
    std::map<std::uint32_t, std::vector<std::vector<std::uint64_t>>> seen;
    int taken = 0;
    while (taken < 160) {
      std::uint64_t z = 1 + rng() % 729;
      Portrait gz = power(base, z);
      auto prof = profile(gz);
      auto [it, fresh] = seen.emplace(val3(z), prof);
      ++taken;
      if (!fresh) {
        ++pairs;
        c.check(it->second == prof,
                gen.name + ": exponent valuation " + std::to_string(val3(z)));
      }
    }
  }
  c.check(pairs >= 200, "sampled at least 200 matched pairs");
  return c.failures == 0;
}

// ---------------------------------------------------------------- 5
// Unitriangular matrices under SL_2(Z/9) conjugation.  Brute force over
// all 648 elements of SL_2(Z/9) confirms the conjugation criterion
// "x21 = 0 and b12 = x11^2 a12".  The stated class counts c_1 = 2,
// c_2 = 3 (classes by the valuation of a12 alone) are asserted as given;
// the measured counts are printed when they disagree.
bool criterion5(Checker &c) {
  std::uint64_t q = 9;
  std::vector<MatZq> sl2 = enumerate_sl2(q);
  c.check_eq<std::size_t>(sl2.size(), 648, "|SL_2(Z/9)| = 648");

  auto e12 = [&](std::uint64_t a) { return MatZq{2, q, {1, a, 0, 1}}; };
  auto conjugable = [&](std::uint64_t a, std::uint64_t b) {
    for (const MatZq &x : sl2)
      if (x.mul(e12(a)).mul(mat2_inverse(x)) == e12(b))
        return true;
    return false;
  };
  auto criterion_form = [&](std::uint64_t a, std::uint64_t b) {
    for (std::uint64_t x11 = 0; x11 < q; ++x11) {
      if (x11 % 3 == 0)
        continue; // x11 must be invertible for det 1 with x21 = 0
      if (x11 * x11 % q * a % q == b)
        return true;
    }
    return false;
  };
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b)
      c.check(conjugable(a, b) == criterion_form(a, b),
              "criterion equivalence at a12=" + std::to_string(a) +
                  " b12=" + std::to_string(b));

  CensusResult r = census_gamma(ut2_spec(3, 2), sl2_spec(3, 2), 2);
  std::vector<std::uint64_t> stated{1, 2, 3};
  if (r.counts != stated)
    c.notes << "      measured gamma census " << fmt_series(r.counts)
            << " vs stated " << fmt_series(stated)
            << " (unit squares have index 2, so each finite valuation"
               " splits into two classes)\n";
  c.check(r.counts == stated, "census_gamma counts c_0..c_2 = 1, 2, 3");

  // the portrait-level partition nevertheless matches the matrix-level
  // brute force exactly
  LevelGroup g2 = enumerate(ut2_spec(3, 2), 2);
  std::map<std::uint64_t, std::uint32_t> matrix_class;
  std::uint32_t next_id = 0;
  std::vector<std::uint32_t> brute(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    bool found = false;
    for (std::uint64_t b = 0; b < a && !found; ++b)
      if (conjugable(b, a)) {
        brute[a] = brute[b];
        found = true;
      }
    if (!found)
      brute[a] = next_id++;
  }
  // align portraits with their a12 values through the action on (0,1)
  std::vector<std::uint32_t> portrait_class(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    Portrait ga = evaluate(t_ad_generator(3, 2, 2, {1, a, 0, 1}), 2);
    auto idx = g2.index_of(ga);
    c.check(idx.has_value(), "portrait of a12=" + std::to_string(a) +
                                 " lies in the enumerated group");
    portrait_class[a] = r.class_ids[2][*idx];
  }
  c.check(same_partition(brute, portrait_class),
          "matrix brute force partition == portrait census partition");
  return c.failures == 0;
}

// ---------------------------------------------------------------- 6
// Coordinate-power classification: elements of H^n are conjugate in the
// full depth-n isometry group exactly when their order sequences
// (|restriction to level 1|, ..., |restriction to level n|) agree;
// H = Z(2) and H = Sym(3), n <= 3.
bool criterion6(Checker &c) {
  for (const CayleyTable &h :
       {CayleyTable::cyclic(2), CayleyTable::symmetric3()}) {
    GroupSpec spec = product_power(h, 3);
    for (std::size_t n = 1; n <= 3; ++n) {
      LevelGroup lg = enumerate(spec, n);
      c.check_eq<std::uint64_t>(
          lg.size(), pow_u64_checked(h.order(), static_cast<std::uint32_t>(n)),
          "level group is H^n");
      std::vector<std::string> codes = orbit_codes(lg.elements);
      std::vector<std::uint32_t> code_ids(lg.size());
      std::map<std::string, std::uint32_t> cfirst;
      for (std::size_t i = 0; i < lg.elements.size(); ++i)
        code_ids[i] =
            cfirst.emplace(codes[i], static_cast<std::uint32_t>(cfirst.size()))
                .first->second;
      std::vector<std::uint32_t> jump_ids(lg.size());
      std::map<std::vector<std::uint64_t>, std::uint32_t> jfirst;
      for (std::size_t i = 0; i < lg.elements.size(); ++i) {
        std::vector<std::uint64_t> jumps;
        for (std::size_t k = 1; k <= n; ++k)
          jumps.push_back(order_at_level(truncate(lg.elements[i], k)));
        jump_ids[i] =
            jfirst.emplace(jumps, static_cast<std::uint32_t>(jfirst.size()))
                .first->second;
      }
      c.check(same_partition(code_ids, jump_ids),
              "order-jump classes == conjugacy classes, |H|=" +
                  std::to_string(h.order()) + " n=" + std::to_string(n));
    }
  }
  return c.failures == 0;
}

// ---------------------------------------------------------------- 7
// Stabilizer structure: |St(k)| * |G_k| = |G_n| on every enumerated
// example, and the rigid level-1 stabilizer of the full depth-3 binary
// group is a direct product of two commuting order-8 subtree factors.
bool criterion7(Checker &c) {
  std::vector<std::pair<GroupSpec, std::size_t>> rows;
  rows.push_back({adding_machine(6), 6});
  rows.push_back({z2_power_binary(5), 5});
  rows.push_back({full_isometry_spec(ValencySeq({2, 2, 2})), 3});
  rows.push_back({full_isometry_spec(ValencySeq({3, 2})), 2});
  rows.push_back({product_power(CayleyTable::symmetric3(), 2), 2});
  rows.push_back({ut2_spec(3, 2), 2});
  rows.push_back({sl2_spec(3, 2), 2});
  rows.push_back(
      {coset_tree(CayleyTable::cyclic(4), {{0, 1, 2, 3}, {0, 2}, {0}}), 2});
  for (const auto &[spec, depth] : rows) {
    LevelGroup lg = enumerate(spec, depth);
    for (std::size_t k = 0; k <= depth; ++k)
      c.check(level_stabilizer(lg, k).size() * enumerate(spec, k).size() ==
                  lg.size(),
              to_string(spec.kind) + ": |St(" + std::to_string(k) +
                  ")| * |G_" + std::to_string(k) + "| = |G_n|");
  }

  LevelGroup full3 = enumerate(full_isometry_spec(ValencySeq({2, 2, 2})), 3);
  std::vector<Portrait> r0 = rigid_stabilizer(full3, Vertex{{0}});
  std::vector<Portrait> r1 = rigid_stabilizer(full3, Vertex{{1}});
  c.check_eq<std::size_t>(r0.size(), 8, "|Rs(left subtree)| = 8");
  c.check_eq<std::size_t>(r1.size(), 8, "|Rs(right subtree)| = 8");
  std::unordered_set<Portrait, PortraitHash> product;
  bool commute = true;
  for (const Portrait &a : r0)
    for (const Portrait &b : r1) {
      commute = commute && compose(a, b) == compose(b, a);
      product.insert(compose(a, b));
    }
  c.check(commute, "subtree factors commute");
  c.check_eq<std::size_t>(product.size(), 64,
                          "Rs(1) is a direct product of order 64");
  return c.failures == 0;
}

// ---------------------------------------------------------------- 8
// Growth contrast: the odometer and carry-free actions grow affinely
// (candidate-small); the full binary tower's prefix 1, 2, 5, 20, 230 grows
// superexponentially (candidate-large).
bool criterion8(Checker &c) {
  GrowthReport odo = smallness_probe(adding_machine(6), 6);
  c.check(odo.verdict == GrowthVerdict::affine && odo.candidate_small,
          "odometer growth affine / candidate-small");

  GrowthReport z2 = smallness_probe(z2_power_binary(5), 5);
  c.check(z2.verdict == GrowthVerdict::affine && z2.candidate_small,
          "carry-free growth affine / candidate-small");

  GrowthReport full =
      smallness_probe(full_isometry_spec(ValencySeq({2, 2, 2, 2})), 4);
  c.check_eq(full.counts, {1, 2, 5, 20, 230}, "full tower prefix");
  c.check(full.verdict == GrowthVerdict::superexponential &&
              !full.candidate_small,
          "full tower superexponential / candidate-large");
  c.check(full.summary.find("heuristic") != std::string::npos,
          "verdict labelled heuristic");
  return c.failures == 0;
}

// ---------------------------------------------------------------- 9
// Randomized property suites, >= 1000 cases each at a fixed seed: group
// axioms, truncation coherence, conjugation invariance of codes, and JSON
// round trips.
bool criterion9(Checker &c) {
  std::mt19937_64 rng(0x5eed2026);
  auto random_tree = [&rng] {
    std::size_t depth = 1 + rng() % 4;
    std::vector<std::uint32_t> m;
    for (std::size_t i = 0; i < depth; ++i)
      m.push_back(static_cast<std::uint32_t>(2 + rng() % 3));
    return ValencySeq(m);
  };

  int bad_axioms = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ValencySeq vs = random_tree();
    std::size_t d = vs.max_depth();
    Portrait f = random_portrait(vs, d, rng);
    Portrait g = random_portrait(vs, d, rng);
    Portrait h = random_portrait(vs, d, rng);
    Portrait id = Portrait::identity(vs, d);
    bool ok = compose(compose(f, g), h) == compose(f, compose(g, h)) &&
              compose(f, id) == f && compose(id, f) == f &&
              compose(f, inverse(f)) == id && compose(inverse(f), f) == id;
    if (!ok)
      ++bad_axioms;
  }
  c.check_eq(bad_axioms, 0, "group axioms, 1000 cases");

  int bad_coherence = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ValencySeq vs = random_tree();
    std::size_t d = vs.max_depth();
    std::size_t k = rng() % (d + 1);
    Portrait f = random_portrait(vs, d, rng);
    Portrait g = random_portrait(vs, d, rng);
    if (truncate(compose(f, g), k) != compose(truncate(f, k), truncate(g, k)))
      ++bad_coherence;
  }
  c.check_eq(bad_coherence, 0, "truncation coherence, 1000 cases");

  int bad_invariance = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ValencySeq vs = random_tree();
    std::size_t d = vs.max_depth();
    Portrait g = random_portrait(vs, d, rng);
    Portrait a = random_portrait(vs, d, rng);
    if (canonical_code(orbit_tree(g)) !=
        canonical_code(orbit_tree(conjugate(g, a))))
      ++bad_invariance;
  }
  c.check_eq(bad_invariance, 0, "conjugation invariance, 1000 cases");

  int bad_roundtrip = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    ValencySeq vs = random_tree();
    Portrait g = random_portrait(vs, vs.max_depth(), rng);
    std::string text = portrait_to_json(g).dump();
    Portrait back = portrait_from_json(json::parse(text));
    if (back != g || portrait_to_json(back).dump() != text)
      ++bad_roundtrip;
  }
  c.check_eq(bad_roundtrip, 0, "JSON round trips, 1000 cases");
  return c.failures == 0;
}

struct Criterion {
  int number;
  const char *description;
  bool (*run)(Checker &);
  double limit_seconds; // 0 = unlimited
};

const Criterion kCriteria[] = {
    {1, "orbit-tree codes equal exhaustive conjugacy (2, 5, 20 classes)",
     criterion1, 10},
    {2, "adding machine census c_n = n+1 with fit 1/(1-t)^2", criterion2, 5},
    {3, "exact cycle counts for odometer powers and carry-free elements",
     criterion3, 5},
    {4, "valuation tuples determine cycle lengths (200+ pairs)", criterion4,
     30},
    {5, "unitriangular classes under SL_2(Z/9) conjugation", criterion5, 60},
    {6, "order-jump sequences classify coordinate powers", criterion6, 30},
    {7, "stabilizer cardinalities and rigid direct product", criterion7, 5},
    {8, "growth contrast: affine vs superexponential", criterion8, 10},
    {9, "randomized property suites (1000 cases each)", criterion9, 0},
};

} // namespace

int main(int argc, char **argv) {
  int only = 0;
  if (argc > 1)
    only = std::atoi(argv[1]);
  int failed = 0;
  for (const Criterion &criterion : kCriteria) {
    if (only != 0 && criterion.number != only)
      continue;
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    bool ok = criterion.run(checker);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
      ok = false;
      checker.notes << "      failed: runtime limit of "
                    << criterion.limit_seconds << "s exceeded\n";
    }
    std::printf("[criterion %d] %s - %s (%.2fs)\n", criterion.number,
                ok ? "PASS" : "FAIL", criterion.description, seconds);
    std::string notes = checker.notes.str();
    if (!notes.empty())
      std::fputs(notes.c_str(), stdout);
    if (!ok)
      ++failed;
  }
  return failed;
}
