// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#ifndef FROB_CHARACTER_HPP
#define FROB_CHARACTER_HPP

#include <map>
#include <mutex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "frob/rootdatum.hpp"
#include "frob/weight.hpp"

namespace frob {

using Int = boost::multiprecision::cpp_int;

class CharacterCache;

// Sparse integer-valued multiset of weights over a fixed root datum.
// Virtual characters (negative multiplicities) are first class.
class Character {
public:
  using Map = std::map<Weight, Int>;

  explicit Character(const RootDatum& datum) : datum_(&datum) {}
  Character(const RootDatum& datum, Map entries);

  const RootDatum& datum() const { return *datum_; }
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  Int at(const Weight& w) const;
  void add(const Weight& w, const Int& mult);  // drops entries reaching zero

  Int dimension() const;  // sum of multiplicities
  bool is_w_invariant() const;

  bool operator==(const Character& other) const;
  bool operator!=(const Character& other) const { return !(*this == other); }

private:
  const RootDatum* datum_;
  Map entries_;
};

Character char_add(const Character& a, const Character& b);
Character char_scale(const Character& a, const Int& n);
Character char_tensor(const Character& a, const Character& b);
Character char_dual(const Character& c);

// Keeps exactly the weights divisible by p, with coordinates divided by p.
Character frobenius_contract(const Character& c, int p);
// Scales every weight by p.
Character frobenius_twist(const Character& c, int p);

// Character of the dual Weyl module nabla(lambda), by the Freudenthal
// recursion on dominant weights extended by W-symmetry.  Memoized per
// (type, lambda); optionally backed by an on-disk cache.
const Character& weyl_character(const RootDatum& datum, const Weight& lambda,
                                CharacterCache* cache = nullptr);

// Weyl dimension formula; independent of the recursion above.
Int weyl_dimension(const RootDatum& datum, const Weight& lambda);

// chi(lambda): zero when lambda is dot-singular, otherwise
// sign * weyl_character(dominant dot-normalization).
Character euler_character(const RootDatum& datum, const Weight& lambda);

// ch St_r = weyl_character((p^r - 1) rho); dimension p^{r N}.
Character steinberg_character(const RootDatum& datum, int p, int r = 1);

// ch of induction from B_rT: e^lambda * prod_{alpha>0} (1 + e^{-alpha} + ...
// + e^{-(p^r-1) alpha}).
Character hat_nabla_character(const RootDatum& datum, int p, int r, const Weight& lambda);

struct DecompositionResult {
  std::map<Weight, Int> multiplicities;
  Character remainder;
};

// Peels maximal dominant weights (dominance order, lexicographic tie-break)
// against weyl_character.  Terminates with empty remainder for any
// W-invariant character; throws DomainError otherwise.
DecompositionResult decompose_into_weyl(const Character& c, CharacterCache* cache = nullptr);

// Peel-off on the triangular basis {hat_nabla_r(lambda)}.  The remainder is
// empty exactly when c lies in the (finite) Z-span of the basis; peeling
// stops at the height floor of the input support otherwise.
DecompositionResult decompose_into_hat_nabla(const Character& c, int p, int r);

// JSON serialization: {"weights": [[[coords...], mult], ...]} sorted
// lexicographically by coords.
std::string character_to_json(const Character& c);
Character character_from_json(const RootDatum& datum, const std::string& json_text);

// On-disk cache of Weyl characters keyed by (type, rank, lambda).  Corrupt
// entries are ignored and recomputed; an unwritable directory disables the
// cache with a one-time warning on stderr.
class CharacterCache {
public:
  explicit CharacterCache(std::string dir);

  bool get(const RootDatum& datum, const Weight& lambda, Character& out);
  void put(const RootDatum& datum, const Weight& lambda, const Character& c);
  bool enabled() const { return enabled_; }

private:
  std::string path_for(const RootDatum& datum, const Weight& lambda) const;
  std::string dir_;
  std::mutex mutex_;
  bool enabled_ = true;
  bool warned_ = false;
};

}  // namespace frob

#endif
