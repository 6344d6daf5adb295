#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rooted_iso/generator.hpp"
#include "rooted_iso/group_spec.hpp"
#include "rooted_iso/portrait.hpp"

using namespace rooted_iso;
using namespace rooted_iso::testing;

namespace {

Portrait odometer(std::size_t depth) {
  return evaluate(adding_machine(depth).generators[0], depth);
}

ValencySeq random_tree(std::mt19937_64 &rng, std::size_t max_depth = 4) {
  std::size_t depth = 1 + rng() % max_depth;
  std::vector<std::uint32_t> m;
  for (std::size_t i = 0; i < depth; ++i)
    m.push_back(static_cast<std::uint32_t>(2 + rng() % 3));
  return ValencySeq(m);
}

} // namespace

TEST_CASE("apply") {
  ValencySeq binary({2, 2, 2});
  Portrait id = Portrait::identity(binary, 3);

  SUBCASE("identity fixes every vertex") {
    for (const Vertex &v : layer(binary, 3))
      CHECK(apply(id, v) == v);
  }

  SUBCASE("adding machine is +1 on 2-adic digits") {
    Portrait g = odometer(3);
    CHECK(to_string(apply(g, vertex_from_string("000", binary))) == "100");
    CHECK(to_string(apply(g, vertex_from_string("100", binary))) == "010");
    // every word at every depth: odometer really is +1 mod 2^k
    for (std::size_t k = 1; k <= 3; ++k)
      for (const Vertex &v : layer(binary, k)) {
        std::uint64_t expect = (lsb_value(v) + 1) % (1ull << k);
        CHECK(lsb_value(apply(g, v)) == expect);
      }
  }

  SUBCASE("depth mismatch") {
    ValencySeq deep({2, 2, 2, 2});
    CHECK_THROWS_AS(apply(id, layer(deep, 4)[0]), InputError);
  }
}

TEST_CASE("compose") {
  ValencySeq binary({2, 2, 2});
  Portrait g = odometer(3);
  Portrait id = Portrait::identity(binary, 3);

  CHECK(compose(g, id) == g);
  CHECK(compose(id, g) == g);
  CHECK(compose(g, inverse(g)) == id);

  SUBCASE("odometer squared acts as +2") {
    Portrait g2 = compose(g, g);
    CHECK(to_string(apply(g2, vertex_from_string("000", binary))) == "010");
    for (const Vertex &v : layer(binary, 3))
      CHECK(lsb_value(apply(g2, v)) == (lsb_value(v) + 2) % 8);
  }

  SUBCASE("shape mismatch") {
    Portrait other = Portrait::identity(ValencySeq({3, 2}), 2);
    CHECK_THROWS_AS(compose(g, other), InputError);
  }
}

TEST_CASE("inverse") {
  ValencySeq binary({2, 2, 2});
  Portrait g = odometer(3);
  Portrait id = Portrait::identity(binary, 3);

  CHECK(inverse(id) == id);
  CHECK(compose(inverse(g), g) == id);

  SUBCASE("odometer inverse is -1") {
    CHECK(to_string(apply(inverse(g), vertex_from_string("100", binary))) ==
          "000");
  }

  SUBCASE("involution on random portraits") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
      ValencySeq vs = random_tree(rng);
      Portrait h = random_portrait(vs, vs.max_depth(), rng);
      CHECK(inverse(inverse(h)) == h);
      CHECK(compose(h, inverse(h)) == Portrait::identity(vs, vs.max_depth()));
    }
  }
}

TEST_CASE("truncate") {
  Portrait g = odometer(4);
  CHECK(truncate(g, 4) == g);
  CHECK(truncate(Portrait::identity(ValencySeq({2, 2}), 2), 1) ==
        Portrait::identity(ValencySeq({2}), 1));

  SUBCASE("odometer truncated to depth 2 is the 4-cycle on layer 2") {
    Portrait t = truncate(g, 2);
    CHECK(t == odometer(2));
    std::vector<std::uint64_t> lens = cycle_lengths(t, 2);
    REQUIRE(lens.size() == 1);
    CHECK(lens[0] == 4);
  }

  SUBCASE("errors") { CHECK_THROWS_AS(truncate(g, 5), InputError); }
}

TEST_CASE("evaluate") {
  SUBCASE("identity rule") {
    ValencySeq vs(std::vector<std::uint32_t>(5, 2));
    IsoGenerator id_rule{
        vs, "id", [](const Vertex &) { return Perm::identity(2); }};
    CHECK(evaluate(id_rule, 5) == Portrait::identity(vs, 5));
  }

  SUBCASE("adding machine rule at depth 1 is the root transposition") {
    Portrait g1 = odometer(1);
    CHECK(g1.perm_at(0, 0) == transposition01(2));
  }

  SUBCASE("coherence under truncation") {
    GroupSpec spec = adding_machine(3);
    CHECK(truncate(evaluate(spec.generators[0], 3), 2) ==
          evaluate(spec.generators[0], 2));
  }

  SUBCASE("rule failure surfaces") {
    ValencySeq vs({2, 2});
    IsoGenerator bad{vs, "bad",
                     [](const Vertex &) { return Perm::identity(3); }};
    CHECK_THROWS_AS(evaluate(bad, 2), InputError);
  }
}

TEST_CASE("order_at_level") {
  CHECK(order_at_level(Portrait::identity(ValencySeq({2, 2}), 2)) == 1);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(order_at_level(odometer(n)) == (1ull << n));

  SUBCASE("root transposition is an involution") {
    ValencySeq binary({2, 2, 2});
    PortraitBuilder b(binary, 3);
    b.set(0, 0, transposition01(2));
    for (std::size_t k = 1; k < 3; ++k)
      for (std::uint64_t r = 0; r < binary.layer_size(k); ++r)
        b.set(k, r, Perm::identity(2));
    CHECK(order_at_level(std::move(b).build()) == 2);
  }
}

TEST_CASE("group laws on random portraits") {
  std::mt19937_64 rng(20260801);
  for (int trial = 0; trial < 400; ++trial) {
    ValencySeq vs = random_tree(rng);
    std::size_t d = vs.max_depth();
    Portrait f = random_portrait(vs, d, rng);
    Portrait g = random_portrait(vs, d, rng);
    Portrait h = random_portrait(vs, d, rng);
    Portrait id = Portrait::identity(vs, d);

    // associativity, identity, inverse
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, id) == f);
    CHECK(compose(inverse(f), f) == id);

    // apply is a homomorphism to layer permutations
    for (const Vertex &v : layer(vs, d))
      CHECK(apply(compose(f, g), v) == apply(g, apply(f, v)));

    // truncation commutes with composition
    std::size_t k = rng() % (d + 1);
    CHECK(truncate(compose(f, g), k) ==
          compose(truncate(f, k), truncate(g, k)));

    // order of a truncation divides the order
    CHECK(order_at_level(f) % order_at_level(truncate(f, k)) == 0);
  }
}

TEST_CASE("portrait composition matches the label formula") {
  // delta(v) = sigma(v) * gamma(f(v)) spot-checked against apply
  std::mt19937_64 rng(5);
  ValencySeq vs({2, 3, 2});
  for (int trial = 0; trial < 50; ++trial) {
    Portrait f = random_portrait(vs, 3, rng);
    Portrait g = random_portrait(vs, 3, rng);
    Portrait h = compose(f, g);
    for (std::size_t k = 0; k < 3; ++k)
      for (const Vertex &v : layer(vs, k)) {
        Perm expect = compose(f.perm_at(v), g.perm_at(apply(f, v)));
        CHECK(h.perm_at(v) == expect);
      }
  }
}

TEST_CASE("layer actions are bijections") {
  std::mt19937_64 rng(2468);
  for (int trial = 0; trial < 200; ++trial) {
    ValencySeq vs = random_tree(rng);
    Portrait g = random_portrait(vs, vs.max_depth(), rng);
    for (std::size_t k = 0; k <= vs.max_depth(); ++k) {
      std::vector<std::uint64_t> sigma = layer_action(g, k);
      std::vector<bool> hit(sigma.size(), false);
      for (std::uint64_t x : sigma) {
        REQUIRE(x < sigma.size());
        CHECK(!hit[x]);
        hit[x] = true;
      }
    }
  }
}

TEST_CASE("portrait inversion matches the label formula") {
  // sigma(v) = (gamma of the preimage of v) inverted
  std::mt19937_64 rng(606060);
  ValencySeq vs({3, 2, 2});
  for (int trial = 0; trial < 50; ++trial) {
    Portrait g = random_portrait(vs, 3, rng);
    Portrait f = inverse(g);
    for (std::size_t k = 0; k < 3; ++k)
      for (const Vertex &v : layer(vs, k))
        CHECK(f.perm_at(v) == inverse(g.perm_at(apply(f, v))));
  }
}
