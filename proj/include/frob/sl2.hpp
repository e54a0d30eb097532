// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#ifndef FROB_SL2_HPP
#define FROB_SL2_HPP

#include <vector>

#include "frob/character.hpp"
#include "frob/rootdatum.hpp"

namespace frob {

constexpr int kOracleMaxPrime = 13;

// Finite-dimensional SL2 representation over F_p.  Matrix entries live in
// [0, p); weights are kept as plain integers so mu0-extraction and
// untwisting stay exact.
struct FpRep {
  int p = 0;
  int dim = 0;
  std::vector<std::vector<int>> E, F;  // e raises weight by 2, f lowers by 2
  std::vector<int> weights;
};

// Weyl module Delta(n): e.v_i = (n-i+1) v_{i-1}, f.v_i = (i+1) v_{i+1},
// weight of v_i is n - 2i.  n = p-1 gives the Steinberg module.
FpRep build_weyl_module(int p, int n);

FpRep dual_rep(const FpRep& r);
FpRep tensor_rep(const FpRep& a, const FpRep& b);
FpRep direct_sum_rep(const FpRep& a, const FpRep& b);
// Frobenius twist: weights scaled by p; e and f act by zero.
FpRep twist_rep(const FpRep& r);

// Shared A1 root datum backing the oracle's characters.
const RootDatum& sl2_datum();

struct InvariantReport {
  Int dimension;
  Character weight_character;  // weights of the G_1-invariant subspace
  InvariantReport() : dimension(0), weight_character(sl2_datum()) {}
};

// Common kernel of E and F intersected with the p-divisible weight spaces.
// E^{(k)} = E^k / k! for k < p, so ker E meets every divided power, and the
// weight congruence carries the torus part.
InvariantReport g1_invariants(const FpRep& r);

// Character with multiplicity of lambda = number of basis weights equal to
// p*lambda.
Character mu0_character(const FpRep& r);

// Character-level check of M^phi ~ ((St (x) St (x) M)^{G_1})^{[-1]}.
bool verify_invariants_match_mu0(int p, const FpRep& m);

// Rank of the p^2 x p^2 matrix of the vectors f^{(a)} e^{(b)} (v+ (x) v-)
// inside St (x) St; full rank p^2 witnesses that theta is bijective.
int theta_rank(int p);

struct OracleReport {
  int p = 0;
  long cases = 0;
  long failures = 0;
  bool theta_ok = false;
  bool all_ok() const { return failures == 0 && theta_ok; }
};

// verify_invariants_match_mu0 over {Delta(n) : n <= max_n}, their duals, and
// {Delta(a) (x) Delta(b) : a + b <= max_sum}, plus theta_rank(p) == p^2.
OracleReport oracle_suite(int p, int max_n = 20, int max_sum = 12);

}  // namespace frob

#endif
