// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "frob/character.hpp"
#include "frob/errors.hpp"
#include "frob/rootdatum.hpp"

using namespace frob;

namespace {

Character random_character(const RootDatum& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(-5, 5), mult(-3, 3), count(1, 6);
  Character c(d);
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Weight w(static_cast<std::size_t>(d.rank()));
    for (auto& x : w) x = coord(rng);
    c.add(w, mult(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("weyl characters, rank 1") {
  RootDatum a1('A', 1);
  const Character& c = weyl_character(a1, Weight{3});
  CHECK(c.dimension() == 4);
  for (int w : {3, 1, -1, -3}) CHECK(c.at(Weight{w}) == 1);
  CHECK(c.at(Weight{0}) == 0);

  const Character& triv = weyl_character(a1, Weight{0});
  CHECK(triv.dimension() == 1);
  CHECK(triv.at(Weight{0}) == 1);

  CHECK_THROWS_AS(weyl_character(a1, Weight{-1}), DomainError);
}

TEST_CASE("adjoint of A2") {
  RootDatum a2('A', 2);
  const Character& c = weyl_character(a2, Weight{1, 1});
  CHECK(c.dimension() == 8);
  CHECK(c.at(Weight{0, 0}) == 2);
  CHECK(c.is_w_invariant());
}

TEST_CASE("freudenthal agrees with the dimension formula") {
  for (const std::string& label : {"A1", "A2", "B2", "G2", "A3", "C3"}) {
    RootDatum d = RootDatum::parse(label);
    std::vector<Weight> samples;
    if (d.rank() == 1)
      samples = {{0}, {1}, {4}, {9}};
    else if (d.rank() == 2)
      samples = {{0, 0}, {1, 0}, {0, 2}, {2, 1}, {3, 3}, {1, 4}};
    else
      samples = {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {2, 1, 0}};
    for (const auto& lambda : samples) {
      const Character& c = weyl_character(d, lambda);
      CHECK(c.dimension() == weyl_dimension(d, lambda));
      CHECK(c.at(lambda) == 1);
      CHECK(c.is_w_invariant());
    }
  }
}

TEST_CASE("weyl characters are orbit-constant") {
  RootDatum g2('G', 2);
  const Character& c = weyl_character(g2, Weight{1, 1});
  for (const auto& [w, m] : c.entries())
    for (const auto& img : g2.orbit(w)) CHECK(c.at(img) == m);
}

TEST_CASE("euler characteristics") {
  RootDatum a1('A', 1);
  CHECK(euler_character(a1, Weight{-1}).empty());
  CHECK(euler_character(a1, Weight{4}) == weyl_character(a1, Weight{4}));
  Character e = euler_character(a1, Weight{-3});
  CHECK(e.at(Weight{1}) == -1);
  CHECK(e.at(Weight{-1}) == -1);
  CHECK(e.dimension() == -2);
}

TEST_CASE("ring operations") {
  RootDatum a1('A', 1);
  Character two(a1);
  two.add(Weight{1}, 1);
  two.add(Weight{-1}, 1);
  Character sq = char_tensor(two, two);
  CHECK(sq.at(Weight{2}) == 1);
  CHECK(sq.at(Weight{0}) == 2);
  CHECK(sq.at(Weight{-2}) == 1);

  CHECK(char_add(sq, char_scale(sq, -1)).empty());

  Character unit(a1);
  unit.add(Weight{0}, 1);
  CHECK(char_tensor(unit, sq) == sq);

  // Clebsch-Gordan
  auto dec = decompose_into_weyl(sq);
  CHECK(dec.remainder.empty());
  CHECK(dec.multiplicities == std::map<Weight, Int>{{{2}, 1}, {{0}, 1}});
}

TEST_CASE("contraction and twist") {
  RootDatum a1('A', 1);
  Character half = frobenius_contract(weyl_character(a1, Weight{2}), 2);
  CHECK(half.entries() == Character::Map{{{1}, 1}, {{0}, 1}, {{-1}, 1}});
  CHECK(frobenius_contract(weyl_character(a1, Weight{1}), 3).empty());

  std::mt19937 rng(7);
  for (const std::string& label : {"A1", "A2", "G2"}) {
    RootDatum d = RootDatum::parse(label);
    for (int trial = 0; trial < 25; ++trial) {
      Character c = random_character(d, rng);
      for (int p : {2, 3, 5}) {
        CHECK(frobenius_contract(frobenius_twist(c, p), p) == c);
        CHECK(char_dual(char_dual(c)) == c);
        CHECK(frobenius_contract(char_dual(c), p) == char_dual(frobenius_contract(c, p)));
        // (M (x) V^[1])^phi = M^phi (x) V
        Character v = random_character(d, rng);
        CHECK(frobenius_contract(char_tensor(c, frobenius_twist(v, p)), p) ==
              char_tensor(frobenius_contract(c, p), v));
        // r-fold contraction = p^r extraction
        Character c2 = frobenius_contract(frobenius_contract(c, p), p);
        Character direct(d);
        for (const auto& [w, m] : c.entries()) {
          bool div = true;
          Weight q(w.size());
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] % (p * p) != 0) div = false;
            q[i] = w[i] / (p * p);
          }
          if (div) direct.add(q, m);
        }
        CHECK(c2 == direct);
      }
    }
  }
}

TEST_CASE("decompose into weyl basis") {
  RootDatum a1('A', 1);
  auto dec = decompose_into_weyl(frobenius_contract(weyl_character(a1, Weight{6}), 3));
  CHECK(dec.remainder.empty());
  CHECK(dec.multiplicities == std::map<Weight, Int>{{{2}, 1}});

  RootDatum g2('G', 2);
  auto dec2 = decompose_into_weyl(weyl_character(g2, Weight{2, 1}));
  CHECK(dec2.remainder.empty());
  CHECK(dec2.multiplicities == std::map<Weight, Int>{{{2, 1}, 1}});

  auto dec3 = decompose_into_weyl(frobenius_contract(steinberg_character(g2, 2), 2));
  CHECK(dec3.remainder.empty());
  CHECK(dec3.multiplicities == std::map<Weight, Int>{{{1, 0}, 2}, {{0, 0}, 2}});

  Character skew(a1);
  skew.add(Weight{1}, 1);  // not W-invariant
  CHECK_THROWS_AS(decompose_into_weyl(skew), DomainError);
}

TEST_CASE("steinberg characters") {
  RootDatum a1('A', 1);
  CHECK(steinberg_character(a1, 3) == weyl_character(a1, Weight{2}));
  CHECK(steinberg_character(a1, 3).dimension() == 3);
  CHECK(steinberg_character(a1, 2, 2) == weyl_character(a1, Weight{3}));

  RootDatum g2('G', 2);
  Character st = steinberg_character(g2, 2);
  CHECK(st.dimension() == 64);
  CHECK(char_dual(st) == st);
}

TEST_CASE("hat-nabla characters") {
  RootDatum a1('A', 1);
  Character h0 = hat_nabla_character(a1, 2, 1, Weight{0});
  CHECK(h0.at(Weight{0}) == 1);
  CHECK(h0.at(Weight{-2}) == 1);
  CHECK(h0.dimension() == 2);

  CHECK(hat_nabla_character(a1, 2, 1, Weight{1}) == steinberg_character(a1, 2));

  std::mt19937 rng(11);
  for (const std::string& label : {"A1", "A2", "B2"}) {
    RootDatum d = RootDatum::parse(label);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int trial = 0; trial < 8; ++trial) {
      Weight lambda(static_cast<std::size_t>(d.rank()));
      for (auto& x : lambda) x = coord(rng);
      for (auto [p, r] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
        Character h = hat_nabla_character(d, p, r, lambda);
        Int expect = 1;
        for (int k = 0; k < r * d.num_positive_roots(); ++k) expect *= p;
        CHECK(h.dimension() == expect);
        CHECK(h.at(lambda) == 1);
      }
    }
  }
}

TEST_CASE("decompose into hat-nabla basis") {
  RootDatum a1('A', 1);
  auto dec = decompose_into_hat_nabla(hat_nabla_character(a1, 2, 1, Weight{5}), 2, 1);
  CHECK(dec.remainder.empty());
  CHECK(dec.multiplicities == std::map<Weight, Int>{{{5}, 1}});

  Character st1(a1);
  st1.add(Weight{1}, 1);
  st1.add(Weight{-1}, 1);
  auto dec2 = decompose_into_hat_nabla(st1, 2, 1);
  CHECK(dec2.remainder.empty());
  CHECK(dec2.multiplicities == std::map<Weight, Int>{{{1}, 1}});

  // reconstruction check on the second Steinberg character
  Character st2 = steinberg_character(a1, 2, 2);
  auto dec3 = decompose_into_hat_nabla(st2, 2, 2);
  CHECK(dec3.remainder.empty());
  Character rebuilt(a1);
  for (const auto& [lambda, m] : dec3.multiplicities)
    rebuilt = char_add(rebuilt, char_scale(hat_nabla_character(a1, 2, 2, lambda), m));
  CHECK(rebuilt == st2);
}

TEST_CASE("json round trip") {
  RootDatum a2('A', 2);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Character c = random_character(a2, rng);
    std::string j = character_to_json(c);
    CHECK(character_from_json(a2, j) == c);
    CHECK(character_to_json(character_from_json(a2, j)) == j);
  }
  CHECK_THROWS(character_from_json(a2, "not json"));
}

TEST_CASE("disk cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "frob_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  RootDatum a2('A', 2);
  {
    CharacterCache cache(dir.string());
    Character out(a2);
    CHECK(!cache.get(a2, Weight{2, 1}, out));
    const Character& c = weyl_character(a2, Weight{2, 1});
    cache.put(a2, Weight{2, 1}, c);
    REQUIRE(cache.get(a2, Weight{2, 1}, out));
    CHECK(out == c);
  }
  // corrupt entry is ignored, then healed by the next put
  {
    CharacterCache cache(dir.string());
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::ofstream f(entry.path());
      f << "{broken";
    }
    Character out(a2);
    CHECK(!cache.get(a2, Weight{2, 1}, out));
    cache.put(a2, Weight{2, 1}, weyl_character(a2, Weight{2, 1}));
    CHECK(cache.get(a2, Weight{2, 1}, out));
  }
  // weyl_character integrates the cache transparently
  {
    CharacterCache cache(dir.string());
    // (0,3) has not been computed anywhere else in this binary, so the first
    // call is a genuine miss that must fill the disk cache
    Character cached = weyl_character(a2, Weight{0, 3}, &cache);
    CHECK(cached == weyl_character(a2, Weight{0, 3}));
    Character out(a2);
    CHECK(cache.get(a2, Weight{0, 3}, out));
    CHECK(out == cached);
  }
  fs::remove_all(dir);
}
