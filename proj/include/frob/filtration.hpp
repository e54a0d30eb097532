// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#ifndef FROB_FILTRATION_HPP
#define FROB_FILTRATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "frob/character.hpp"
#include "frob/lspath.hpp"
#include "frob/rootdatum.hpp"

namespace frob {

// Good-filtration multiplicities of the Frobenius contraction of nabla(lambda).
struct MultiplicityTable {
  std::string type_label;
  int p = 0;
  Weight lambda;
  std::map<Weight, Int> rows;  // dominant mu -> (nabla(lambda)^phi : nabla(mu))

  std::string to_json() const;
  std::string to_csv() const;
};

// Decompose frobenius_contract(ch nabla(lambda), p) into Weyl characters.
MultiplicityTable contraction_multiplicities(const RootDatum& datum, int p, const Weight& lambda,
                                             CharacterCache* cache = nullptr);

// Signed Weyl-orbit sum: sum over W of (-1)^l(w) dim nabla(lambda)_{p(w.mu)}.
// The dot stabilizer of a dominant mu is trivial, so the sum runs over all
// of W; this is asserted while summing.
Int signed_sum_multiplicity(const RootDatum& datum, int p, const Weight& lambda, const Weight& mu,
                            CharacterCache* cache = nullptr);

// (St tensor nabla(lambda) : nabla((p-1)rho + p mu)) via tensor product and
// peel-off decomposition.
Int steinberg_tensor_multiplicity(const RootDatum& datum, int p, const Weight& lambda,
                                  const Weight& mu, CharacterCache* cache = nullptr);

// Full decomposition of St tensor nabla(lambda); lets grid suites read many
// coefficients from one peel-off.
DecompositionResult steinberg_tensor_decomposition(const RootDatum& datum, int p,
                                                   const Weight& lambda,
                                                   CharacterCache* cache = nullptr);

struct MaximalMuResult {
  Weight mu_max;
  bool ok = false;
  Int steinberg_mult;
  Int weight_mult;  // dim nabla(lambda)_{p mu_max}
};

// Picks a maximal dominant mu with nabla(lambda)_{p mu} != 0 and checks the
// closed form: the Steinberg-tensor multiplicity equals that weight
// multiplicity.  Throws DomainError when the contraction is empty.
MaximalMuResult maximal_mu_check(const RootDatum& datum, int p, const Weight& lambda);

// lhs = (St tensor nabla(lambda) : nabla((p-1)rho + p mu)),
// rhs = contraction_multiplicities(lambda) at mu.
std::pair<Int, Int> adjunction_dimension_check(const RootDatum& datum, int p, const Weight& lambda,
                                               const Weight& mu, CharacterCache* cache = nullptr);

struct BoundViolation {
  Weight lambda;  // in Lambda_1
  Weight mu;      // dominant, p*mu a weight of nabla(lambda)
  std::int64_t pairing;
};

struct BoundReport {
  std::string type_label;
  int p = 0;
  std::vector<BoundViolation> violations;
  bool empty() const { return violations.empty(); }
  std::string to_json() const;
};

// For p >= 2(h-1): every lambda in Lambda_1 and every dominant mu with p*mu
// a weight of nabla(lambda) must satisfy <mu+rho, alpha_0^vee> < p.
BoundReport semisimplicity_bound_report(const RootDatum& datum, int p);

struct WeightMembershipResult {
  bool ok = false;
  Weight lambda;          // (p-3) w_alpha + 2 w_beta
  Weight gamma;           // the positive root with p w_alpha = lambda - gamma
  Int membership_mult;    // dim nabla(lambda)_{p w_alpha}
};

// G2 only, p >= 3: p*w_alpha is a weight of nabla(lambda), and w_alpha is
// maximal among dominant nu with p*nu a weight of nabla(lambda).
WeightMembershipResult g2_weight_membership_check(const RootDatum& datum, int p);

// Contract hat_nabla_r(lambda) by phi^s and decompose into the
// hat_nabla_{r-s} basis.  Nonnegative multiplicities and empty remainder
// witness the r-fold filtration statement at character level.
DecompositionResult hat_nabla_contraction_check(const RootDatum& datum, int p, int r, int s,
                                                const Weight& lambda);

// ---------------------------------------------------------------------------
// Grid suites used by the CLI and the acceptance tests.

struct AgreementCase {
  Weight lambda;
  Weight mu;
  Int decomposition;
  Int signed_sum;
  Int steinberg_tensor;
  std::optional<Int> path_count;  // absent when dim nabla(lambda) > path_cap
  bool agree = false;
};

struct AgreementReport {
  std::string type_label;
  int p = 0;
  std::vector<AgreementCase> cases;
  long path_skipped = 0;  // lambdas whose path model exceeded the cap
  bool all_agree = true;
  bool positivity_ok = true;  // tables nonnegative, remainders empty
  std::string to_json() const;
};

// Four-way agreement check over all dominant lambda with coordinates
// <= max_coord and every dominant mu in the contraction support.
AgreementReport agreement_grid(const RootDatum& datum, int p, int max_coord,
                               long path_cap = kDefaultPathCap, int jobs = 1,
                               CharacterCache* cache = nullptr);

struct AdjointCase {
  Weight lambda;
  Weight mu;
  Int lhs, rhs;
};

struct AdjointReport {
  std::string type_label;
  int p = 0;
  std::vector<AdjointCase> cases;
  bool all_equal = true;
  std::string to_json() const;
};

AdjointReport adjoint_grid(const RootDatum& datum, int p, int max_coord, int jobs = 1,
                           CharacterCache* cache = nullptr);

struct HatNablaCase {
  Weight lambda;
  bool nonnegative = false;
  bool remainder_empty = false;
};

struct HatNablaReport {
  std::string type_label;
  int p = 0, r = 0, s = 0;
  std::vector<HatNablaCase> cases;
  bool all_ok = true;
  std::string to_json() const;
};

// hat_nabla_contraction_check over all lambda with coordinates in
// [min_coord, max_coord].
HatNablaReport hatnabla_grid(const RootDatum& datum, int p, int r, int s, int min_coord,
                             int max_coord, int jobs = 1);

// All dominant weights with coordinates <= max_coord, in lexicographic order.
std::vector<Weight> dominant_box(const RootDatum& datum, int max_coord);

}  // namespace frob

#endif
