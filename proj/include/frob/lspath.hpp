// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#ifndef FROB_LSPATH_HPP
#define FROB_LSPATH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "frob/character.hpp"
#include "frob/rootdatum.hpp"
#include "frob/weight.hpp"

namespace frob {

using Rational = boost::rational<std::int64_t>;

// Piecewise-linear path: ordered segments (direction, length), lengths
// summing to 1, no two consecutive segments sharing a direction.
struct LSPath {
  Weight shape;  // the dominant weight lambda the path model is built from
  std::vector<std::pair<Weight, Rational>> segments;

  Weight endpoint(const RootDatum& datum) const;
  bool operator==(const LSPath& other) const { return segments == other.segments; }
  bool operator<(const LSPath& other) const { return segments < other.segments; }
};

constexpr long kDefaultPathCap = 100'000;

LSPath straight_path(const RootDatum& datum, const Weight& lambda);

// Littelmann's lowering/raising operators; nullopt when undefined.
std::optional<LSPath> root_operator_f(const RootDatum& datum, const LSPath& path, int i);
std::optional<LSPath> root_operator_e(const RootDatum& datum, const LSPath& path, int i);

// Closure of the straight path under all f_i.  Throws ResourceError past cap.
std::vector<LSPath> generate_path_model(const RootDatum& datum, const Weight& lambda,
                                        long cap = kDefaultPathCap);

// True iff shift + path(t) stays dominant for all t (checked at breakpoints).
bool is_dominant_shifted(const RootDatum& datum, const LSPath& path, const Weight& shift);

// #{pi in B(lambda) : pi is (p-1)rho-dominant and pi(1) = p mu}.
Int count_dominant_paths(const RootDatum& datum, int p, const Weight& lambda, const Weight& mu,
                         long cap = kDefaultPathCap);

// Same count for every dominant mu at once; one traversal of B(lambda).
// Enumerates the crystal as a tree (canonical e-parent edges), so memory is
// O(depth) and no dedup set is needed.
std::map<Weight, Int> count_dominant_paths_all(const RootDatum& datum, int p, const Weight& lambda,
                                               long cap = kDefaultPathCap);

// Everything one traversal of B(lambda) can report: model size, endpoint
// multiset, and the shifted-dominant counts keyed by mu with p*mu = pi(1).
struct CrystalCensus {
  Int size;
  std::map<Weight, Int> endpoints;
  std::map<Weight, Int> dominant_counts;
  CrystalCensus() : size(0) {}
};

CrystalCensus crystal_census(const RootDatum& datum, int p, const Weight& lambda,
                             long cap = kDefaultPathCap);

// JSON dump: list of paths, each [[direction coords..., numerator, denominator], ...].
std::string path_model_to_json(const RootDatum& datum, const std::vector<LSPath>& model);

}  // namespace frob

#endif
