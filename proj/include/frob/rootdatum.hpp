// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#ifndef FROB_ROOTDATUM_HPP
#define FROB_ROOTDATUM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frob/weight.hpp"

namespace frob {

// Element of the Weyl group, acting on fundamental-weight coordinates.
struct WeylElement {
  std::vector<std::vector<int>> action;  // rank x rank, lambda -> action * lambda
  int length = 0;
  std::vector<int> word;  // simple reflection indices, reduced

  Weight apply(const Weight& w) const;
  int sign() const { return (length % 2 == 0) ? 1 : -1; }
  bool operator==(const WeylElement& other) const { return action == other.action; }
};

// Immutable description of a simple simply-connected root system.
// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>, Bourbaki labeling;
// for G2 the first simple root is the short one.
class RootDatum {
public:
  static constexpr int kDefaultRankCap = 6;
  static constexpr long kDefaultWeylCap = 51840;

  // type_label is 'A'..'G'.  Throws ConfigError on invalid pairs.
  RootDatum(char type_label, int rank);

  // Parses combined labels like "G2", "A1".
  static RootDatum parse(const std::string& label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }          // fundamental coords
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }      // fundamental coords
  const std::vector<std::vector<int>>& positive_roots_rootbasis() const { return positive_roots_rb_; }
  const std::vector<Coroot>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Coroot>& positive_coroots() const { return positive_coroots_; }
  const Weight& rho() const { return rho_; }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
  int coxeter_number() const { return coxeter_number_; }
  const Coroot& highest_coroot() const { return highest_coroot_; }
  const std::vector<int>& symmetrizers() const { return d_; }  // d_i = (alpha_i,alpha_i)/2, min 1

  // <lambda, c> for a coroot c in simple-coroot coordinates.
  std::int64_t pairing(const Weight& lambda, const Coroot& c) const;

  // Scaled W-invariant form: det(cartan) * (lambda, mu) with short roots of
  // squared length 2.  Exact integers; only ratios ever matter.
  std::int64_t inner_scaled(const Weight& lambda, const Weight& mu) const;

  // det(cartan) * (coefficients of nu in the simple-root basis).
  std::vector<std::int64_t> root_coords_scaled(const Weight& nu) const;

  // det(cartan) * height of nu, i.e. scaled sum of simple-root coefficients.
  std::int64_t height_scaled(const Weight& nu) const;

  // True iff nu lies in the nonnegative integer span of the simple roots.
  bool in_positive_root_span(const Weight& nu) const;

  std::int64_t cartan_det() const { return det_; }

  bool is_dominant(const Weight& w) const;

  Weight simple_reflect(int i, const Weight& w) const;  // s_i(w)
  Weight dominant_normalize(const Weight& w) const;     // ordinary action representative

  // w . lambda = w(lambda + rho) - rho
  Weight dot_action(const WeylElement& w, const Weight& lambda) const;
  Weight simple_dot_reflect(int i, const Weight& lambda) const;

  // Returns nullopt when lambda + rho is singular; otherwise the dominant
  // representative under the dot action together with the sign (-1)^l(w).
  std::optional<std::pair<Weight, int>> dominant_dot_normalize(const Weight& lambda) const;

  // Full Weyl group, breadth-first over simple reflections.  Throws
  // ResourceError when the group exceeds `cap` elements.
  std::vector<WeylElement> weyl_elements(long cap = kDefaultWeylCap) const;

  // Orbit of w under the ordinary action.
  std::vector<Weight> orbit(const Weight& w) const;

private:
  char type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<int>> positive_roots_rb_;  // simple-root coordinates
  std::vector<Coroot> simple_coroots_;
  std::vector<Coroot> positive_coroots_;
  Weight rho_;
  Coroot highest_coroot_;
  int coxeter_number_ = 0;
  std::int64_t det_ = 1;
  std::vector<std::vector<std::int64_t>> adjugate_;  // det * cartan^{-1}
};

}  // namespace frob

#endif
