// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "frob/errors.hpp"
#include "frob/filtration.hpp"
#include "frob/lspath.hpp"

using namespace frob;

TEST_CASE("contraction tables") {
  RootDatum g2('G', 2);
  auto table = contraction_multiplicities(g2, 2, g2.rho());
  CHECK(table.rows == std::map<Weight, Int>{{{1, 0}, 2}, {{0, 0}, 2}});

  RootDatum a1('A', 1);
  CHECK(contraction_multiplicities(a1, 3, Weight{6}).rows == std::map<Weight, Int>{{{2}, 1}});
  CHECK(contraction_multiplicities(a1, 3, Weight{1}).rows.empty());
  CHECK_THROWS_AS(contraction_multiplicities(a1, 3, Weight{-1}), DomainError);
}

TEST_CASE("table serialization") {
  RootDatum g2('G', 2);
  auto table = contraction_multiplicities(g2, 2, g2.rho());
  CHECK(table.to_json() ==
        R"({"type":"G2","p":2,"lambda":[1,1],"rows":[{"mu":[1,0],"mult":2},{"mu":[0,0],"mult":2}]})");
  CHECK(table.to_csv() == "mu_coords,mult\n1 0,2\n0 0,2\n");
}

TEST_CASE("signed weyl-orbit sums") {
  RootDatum a1('A', 1);
  CHECK(signed_sum_multiplicity(a1, 2, Weight{2}, Weight{1}) == 1);
  CHECK(signed_sum_multiplicity(a1, 2, Weight{2}, Weight{0}) == 1);

  RootDatum g2('G', 2);
  CHECK(signed_sum_multiplicity(g2, 2, g2.rho(), Weight{1, 0}) == 2);
  CHECK_THROWS_AS(signed_sum_multiplicity(a1, 2, Weight{2}, Weight{-1}), DomainError);
}

TEST_CASE("steinberg tensor coefficients") {
  RootDatum a1('A', 1);
  CHECK(steinberg_tensor_multiplicity(a1, 2, Weight{2}, Weight{1}) == 1);
  CHECK(steinberg_tensor_multiplicity(a1, 2, Weight{2}, Weight{0}) == 1);
  CHECK(steinberg_tensor_multiplicity(a1, 3, Weight{1}, Weight{0}) == 0);
  CHECK(steinberg_tensor_multiplicity(a1, 3, Weight{1}, Weight{1}) == 0);
}

TEST_CASE("maximal mu closed form") {
  RootDatum a1('A', 1);
  auto r = maximal_mu_check(a1, 3, Weight{6});
  CHECK(r.mu_max == Weight{2});
  CHECK(r.ok);
  CHECK(r.weight_mult == 1);

  auto r2 = maximal_mu_check(a1, 2, Weight{2});
  CHECK(r2.mu_max == Weight{1});
  CHECK(r2.ok);

  RootDatum g2('G', 2);
  auto r3 = maximal_mu_check(g2, 2, g2.rho());
  CHECK(r3.mu_max == Weight{1, 0});
  CHECK(r3.weight_mult == 2);
  CHECK(r3.ok);

  CHECK_THROWS_AS(maximal_mu_check(a1, 3, Weight{1}), DomainError);
}

TEST_CASE("adjunction identity") {
  RootDatum a1('A', 1);
  auto [l1, r1] = adjunction_dimension_check(a1, 2, Weight{2}, Weight{1});
  CHECK(l1 == 1);
  CHECK(r1 == 1);
  auto [l2, r2] = adjunction_dimension_check(a1, 3, Weight{1}, Weight{0});
  CHECK(l2 == 0);
  CHECK(r2 == 0);
  RootDatum g2('G', 2);
  auto [l3, r3] = adjunction_dimension_check(g2, 2, g2.rho(), Weight{0, 0});
  CHECK(l3 == 2);
  CHECK(r3 == 2);
}

TEST_CASE("semisimplicity bound") {
  RootDatum a1('A', 1);
  CHECK(semisimplicity_bound_report(a1, 2).empty());
  CHECK(semisimplicity_bound_report(a1, 5).empty());

  RootDatum a2('A', 2);
  CHECK(semisimplicity_bound_report(a2, 5).empty());
  CHECK_THROWS_AS(semisimplicity_bound_report(a2, 3), DomainError);

  auto report = semisimplicity_bound_report(a2, 5);
  auto parsed = nlohmann::json::parse(report.to_json());
  CHECK(parsed["empty"] == true);
  CHECK(parsed["type"] == "A2");
}

TEST_CASE("G2 weight membership") {
  RootDatum g2('G', 2);
  for (int p : {3, 5, 7}) {
    auto r = g2_weight_membership_check(g2, p);
    CHECK(r.ok);
    CHECK(r.lambda == Weight{p - 3, 2});
    CHECK(r.membership_mult >= 1);
    // the witness root satisfies p*w_alpha = lambda - gamma
    CHECK(Weight{p, 0} == r.lambda - r.gamma);
  }
  RootDatum a1('A', 1);
  CHECK_THROWS_AS(g2_weight_membership_check(a1, 5), DomainError);
}

TEST_CASE("hat-nabla contraction") {
  RootDatum a1('A', 1);
  auto dec = hat_nabla_contraction_check(a1, 2, 2, 1, Weight{0});
  CHECK(dec.remainder.empty());
  for (const auto& [w, m] : dec.multiplicities) CHECK(m >= 0);

  auto dec2 = hat_nabla_contraction_check(a1, 2, 2, 1, Weight{3});
  CHECK(dec2.remainder.empty());
  for (const auto& [w, m] : dec2.multiplicities) CHECK(m >= 0);

  auto dec3 = hat_nabla_contraction_check(a1, 3, 2, 1, Weight{1});
  CHECK(dec3.remainder.empty());
  for (const auto& [w, m] : dec3.multiplicities) CHECK(m >= 0);

  CHECK_THROWS_AS(hat_nabla_contraction_check(a1, 2, 1, 1, Weight{0}), DomainError);
}

TEST_CASE("agreement grid") {
  RootDatum a1('A', 1);
  auto report = agreement_grid(a1, 2, 4);
  CHECK(report.all_agree);
  CHECK(report.positivity_ok);
  CHECK(report.path_skipped == 0);
  CHECK(!report.cases.empty());
  for (const auto& c : report.cases) REQUIRE(c.path_count.has_value());

  RootDatum a2('A', 2);
  auto report2 = agreement_grid(a2, 2, 2);
  CHECK(report2.all_agree);
  CHECK(report2.positivity_ok);

  // determinism across parallelism degrees
  CHECK(agreement_grid(a2, 2, 2, kDefaultPathCap, 4).to_json() == report2.to_json());

  // path route falls back cleanly past the cap
  auto capped = agreement_grid(a1, 2, 4, 2);
  CHECK(capped.all_agree);
  CHECK(capped.path_skipped > 0);
}

TEST_CASE("adjoint grid") {
  RootDatum b2('B', 2);
  auto report = adjoint_grid(b2, 3, 2);
  CHECK(report.all_equal);
  CHECK(!report.cases.empty());
  CHECK(adjoint_grid(b2, 3, 2, 4).to_json() == report.to_json());
}

TEST_CASE("hat-nabla grid") {
  RootDatum a1('A', 1);
  auto report = hatnabla_grid(a1, 2, 2, 1, -4, 4);
  CHECK(report.all_ok);
  CHECK(report.cases.size() == 9);
  CHECK(hatnabla_grid(a1, 2, 2, 1, -4, 4, 3).to_json() == report.to_json());
}

TEST_CASE("dimension bookkeeping") {
  // sum over mu of table(mu) * dim nabla(mu) = dim of the contracted character
  for (const std::string& label : {"A2", "B2", "G2"}) {
    RootDatum d = RootDatum::parse(label);
    for (int p : {2, 3}) {
      for (const auto& lambda : dominant_box(d, 3)) {
        auto table = contraction_multiplicities(d, p, lambda);
        Int lhs = 0;
        for (const auto& [mu, m] : table.rows) lhs += m * weyl_dimension(d, mu);
        CHECK(lhs == frobenius_contract(weyl_character(d, lambda), p).dimension());
      }
    }
  }
}
