// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "frob/character.hpp"
#include "frob/errors.hpp"
#include "frob/lspath.hpp"
#include "frob/rootdatum.hpp"

using namespace frob;

TEST_CASE("straight paths") {
  RootDatum a1('A', 1);
  LSPath s = straight_path(a1, Weight{2});
  REQUIRE(s.segments.size() == 1);
  CHECK(s.segments[0] == std::pair<Weight, Rational>{Weight{2}, Rational(1)});
  CHECK(s.endpoint(a1) == Weight{2});

  RootDatum g2('G', 2);
  CHECK(straight_path(g2, g2.rho()).endpoint(g2) == g2.rho());

  CHECK_THROWS_AS(straight_path(a1, Weight{-1}), DomainError);
}

TEST_CASE("rank-1 lowering operator by hand") {
  RootDatum a1('A', 1);
  LSPath s = straight_path(a1, Weight{2});

  auto f1 = root_operator_f(a1, s, 0);
  REQUIRE(f1);
  CHECK(f1->endpoint(a1) == Weight{0});
  // the lowered path runs to -1 at t=1/2, then back up to 0
  REQUIRE(f1->segments.size() == 2);
  CHECK(f1->segments[0] == std::pair<Weight, Rational>{Weight{-2}, Rational(1, 2)});
  CHECK(f1->segments[1] == std::pair<Weight, Rational>{Weight{2}, Rational(1, 2)});

  auto f2 = root_operator_f(a1, *f1, 0);
  REQUIRE(f2);
  CHECK(f2->endpoint(a1) == Weight{-2});
  CHECK(!root_operator_f(a1, *f2, 0));

  // e inverts f at every step
  auto e2 = root_operator_e(a1, *f2, 0);
  REQUIRE(e2);
  CHECK(*e2 == *f1);
  auto e1 = root_operator_e(a1, *f1, 0);
  REQUIRE(e1);
  CHECK(*e1 == s);
  CHECK(!root_operator_e(a1, s, 0));
}

TEST_CASE("path model generation") {
  RootDatum a1('A', 1);
  auto model = generate_path_model(a1, Weight{2});
  REQUIRE(model.size() == 3);
  std::multiset<Weight> endpoints;
  for (const auto& p : model) endpoints.insert(p.endpoint(a1));
  CHECK(endpoints == std::multiset<Weight>{{-2}, {0}, {2}});

  RootDatum a2('A', 2);
  auto model2 = generate_path_model(a2, Weight{1, 0});
  CHECK(model2.size() == 3);

  auto trivial = generate_path_model(a2, Weight{0, 0});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].segments.empty());

  CHECK_THROWS_AS(generate_path_model(a2, Weight{2, 2}, 5), ResourceError);
}

TEST_CASE("model realizes the character") {
  for (const std::string& label : {"A1", "A2", "B2", "G2"}) {
    RootDatum d = RootDatum::parse(label);
    std::vector<Weight> samples;
    if (d.rank() == 1)
      samples = {{0}, {1}, {5}};
    else
      samples = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}};
    for (const auto& lambda : samples) {
      auto model = generate_path_model(d, lambda);
      const Character& c = weyl_character(d, lambda);
      CHECK(Int(model.size()) == c.dimension());
      std::map<Weight, Int> endpoints;
      for (const auto& p : model) endpoints[p.endpoint(d)] += 1;
      CHECK(endpoints == c.entries());
      // census walks the same crystal without a dedup set
      auto census = crystal_census(d, 2, lambda);
      CHECK(census.size == c.dimension());
      CHECK(census.endpoints == c.entries());
    }
  }
}

TEST_CASE("e is a left inverse of f everywhere") {
  for (const std::string& label : {"A2", "B2", "G2"}) {
    RootDatum d = RootDatum::parse(label);
    for (const auto& path : generate_path_model(d, Weight{1, 1}))
      for (int i = 0; i < d.rank(); ++i) {
        auto low = root_operator_f(d, path, i);
        if (!low) continue;
        auto back = root_operator_e(d, *low, i);
        REQUIRE(back);
        CHECK(*back == path);
      }
  }
}

TEST_CASE("shifted dominance") {
  RootDatum a1('A', 1);
  LSPath s = straight_path(a1, Weight{2});
  CHECK(is_dominant_shifted(a1, s, Weight{1}));

  auto f1 = root_operator_f(a1, s, 0);
  REQUIRE(f1);
  CHECK(is_dominant_shifted(a1, *f1, Weight{1}));
  CHECK(!is_dominant_shifted(a1, *f1, Weight{0}));

  auto f2 = root_operator_f(a1, *f1, 0);
  REQUIRE(f2);
  CHECK(!is_dominant_shifted(a1, *f2, Weight{1}));
}

TEST_CASE("dominant path counts") {
  RootDatum a1('A', 1);
  CHECK(count_dominant_paths(a1, 2, Weight{2}, Weight{1}) == 1);
  CHECK(count_dominant_paths(a1, 2, Weight{2}, Weight{0}) == 1);
  CHECK(count_dominant_paths(a1, 3, Weight{1}, Weight{0}) == 0);

  RootDatum g2('G', 2);
  CHECK(count_dominant_paths(g2, 2, g2.rho(), Weight{1, 0}) == 2);
  CHECK(count_dominant_paths(g2, 2, g2.rho(), Weight{0, 0}) == 2);

  // the all-mu variant agrees with single counts
  for (const std::string& label : {"A1", "A2", "B2"}) {
    RootDatum d = RootDatum::parse(label);
    Weight lambda(static_cast<std::size_t>(d.rank()), 2);
    for (int p : {2, 3}) {
      auto all = count_dominant_paths_all(d, p, lambda);
      for (const auto& [mu, n] : all) CHECK(count_dominant_paths(d, p, lambda, mu) == n);
    }
  }
}

TEST_CASE("json dump is deterministic") {
  RootDatum a1('A', 1);
  auto model = generate_path_model(a1, Weight{2});
  std::string j = path_model_to_json(a1, model);
  std::reverse(model.begin(), model.end());
  CHECK(path_model_to_json(a1, model) == j);
  CHECK(j.find("[[[-2],1,2],[[2],1,2]]") != std::string::npos);
}
