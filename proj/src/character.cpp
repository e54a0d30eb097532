// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#include "frob/character.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "frob/errors.hpp"

namespace frob {

namespace {

void require_same_datum(const Character& a, const Character& b) {
  if (a.datum().label() != b.datum().label())
    throw DomainError("characters over different root data: " + a.datum().label() + " vs " +
                      b.datum().label());
}

// Descending (height, lex) order; a linear extension of dominance within a
// root-lattice coset, so the front element is always dominance-maximal.
struct PeelOrder {
  const RootDatum* datum;
  bool operator()(const Weight& a, const Weight& b) const {
    auto ha = datum->height_scaled(a), hb = datum->height_scaled(b);
    if (ha != hb) return ha > hb;
    return a > b;
  }
};

}  // namespace

Character::Character(const RootDatum& datum, Map entries) : datum_(&datum), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->second == 0)
      it = entries_.erase(it);
    else
      ++it;
  }
}

Int Character::at(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? Int(0) : it->second;
}

void Character::add(const Weight& w, const Int& mult) {
  if (mult == 0) return;
  auto [it, inserted] = entries_.emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
  }
}

Int Character::dimension() const {
  Int d = 0;
  for (const auto& [w, m] : entries_) d += m;
  return d;
}

bool Character::is_w_invariant() const {
  for (const auto& [w, m] : entries_)
    for (int i = 0; i < datum_->rank(); ++i)
      if (at(datum_->simple_reflect(i, w)) != m) return false;
  return true;
}

bool Character::operator==(const Character& other) const {
  return datum_->label() == other.datum_->label() && entries_ == other.entries_;
}

Character char_add(const Character& a, const Character& b) {
  require_same_datum(a, b);
  Character r = a;
  for (const auto& [w, m] : b.entries()) r.add(w, m);
  return r;
}

Character char_scale(const Character& a, const Int& n) {
  Character r(a.datum());
  if (n == 0) return r;
  for (const auto& [w, m] : a.entries()) r.add(w, m * n);
  return r;
}

Character char_tensor(const Character& a, const Character& b) {
  require_same_datum(a, b);
  std::unordered_map<Weight, Int, WeightHash> acc;
  for (const auto& [wa, ma] : a.entries())
    for (const auto& [wb, mb] : b.entries()) acc[wa + wb] += ma * mb;
  Character::Map out;
  for (auto& [w, m] : acc)
    if (m != 0) out.emplace(w, std::move(m));
  return Character(a.datum(), std::move(out));
}

Character char_dual(const Character& c) {
  Character::Map out;
  for (const auto& [w, m] : c.entries()) out.emplace(-w, m);
  return Character(c.datum(), std::move(out));
}

Character frobenius_contract(const Character& c, int p) {
  Character::Map out;
  for (const auto& [w, m] : c.entries()) {
    bool divisible = std::all_of(w.begin(), w.end(), [p](int x) { return x % p == 0; });
    if (!divisible) continue;
    Weight v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / p;
    out.emplace(std::move(v), m);
  }
  return Character(c.datum(), std::move(out));
}

Character frobenius_twist(const Character& c, int p) {
  Character::Map out;
  for (const auto& [w, m] : c.entries()) out.emplace(p * w, m);
  return Character(c.datum(), std::move(out));
}

namespace {

// All dominant mu <= lambda (difference in the nonnegative root span),
// together with the root-basis coordinates of lambda - mu.
struct DominantBelow {
  Weight mu;
  std::vector<int> depth_coords;  // lambda - mu in the simple-root basis
  long depth;                     // sum of depth_coords
};

std::vector<DominantBelow> dominant_weights_below(const RootDatum& datum, const Weight& lambda) {
  int n = datum.rank();
  auto det = datum.cartan_det();
  auto top = datum.root_coords_scaled(lambda);
  std::vector<long> bound(n);
  long box = 1;
  for (int i = 0; i < n; ++i) {
    bound[i] = std::max<long>(0, static_cast<long>(top[i] / det));
    if (box > (100'000'000L / (bound[i] + 1)))
      throw ResourceError("weight box too large for " + to_string(lambda));
    box *= bound[i] + 1;
  }
  std::vector<DominantBelow> out;
  std::vector<int> nvec(n, 0);
  while (true) {
    Weight mu = lambda;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) mu[k] -= nvec[i] * datum.simple_roots()[i][k];
    if (datum.is_dominant(mu)) {
      long depth = 0;
      for (int x : nvec) depth += x;
      out.push_back({std::move(mu), nvec, depth});
    }
    int i = 0;
    while (i < n && nvec[i] == bound[i]) nvec[i++] = 0;
    if (i == n) break;
    ++nvec[i];
  }
  std::sort(out.begin(), out.end(), [](const DominantBelow& a, const DominantBelow& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.mu < b.mu;
  });
  return out;
}

Character compute_weyl_character(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda))
    throw DomainError("weyl_character: non-dominant weight " + to_string(lambda));
  const auto& roots = datum.positive_roots();
  const auto& roots_rb = datum.positive_roots_rootbasis();
  const Weight& rho = datum.rho();
  const std::int64_t norm_top = datum.inner_scaled(lambda + rho, lambda + rho);

  auto dominants = dominant_weights_below(datum, lambda);
  std::map<Weight, Int> mult;
  for (const auto& db : dominants) {
    if (db.depth == 0) {
      mult[db.mu] = 1;
      continue;
    }
    Int rhs = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const auto& alpha = roots[a];
      const auto& arb = roots_rb[a];
      long kmax = -1;
      for (int i = 0; i < datum.rank(); ++i) {
        if (arb[i] == 0) continue;
        long lim = db.depth_coords[i] / arb[i];
        kmax = (kmax < 0) ? lim : std::min(kmax, lim);
      }
      Weight nu = db.mu;
      for (long k = 1; k <= kmax; ++k) {
        for (int i = 0; i < datum.rank(); ++i) nu[i] += alpha[i];
        auto it = mult.find(datum.dominant_normalize(nu));
        if (it == mult.end() || it->second == 0) continue;
        rhs += it->second * Int(datum.inner_scaled(nu, alpha));
      }
    }
    if (rhs == 0) {
      mult[db.mu] = 0;
      continue;
    }
    Int denom = Int(norm_top - datum.inner_scaled(db.mu + rho, db.mu + rho));
    Int m = 2 * rhs;
    if (m % denom != 0) throw DomainError("Freudenthal: non-integral multiplicity (internal)");
    mult[db.mu] = m / denom;
  }

  Character::Map entries;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    for (const auto& w : datum.orbit(mu)) entries.emplace(w, m);
  }
  return Character(datum, std::move(entries));
}

std::mutex g_weyl_mutex;
std::map<std::string, Character> g_weyl_memo;

// Memoized characters must outlive any caller-owned RootDatum, so they are
// built over interned copies with static storage duration.
const RootDatum& interned_datum(const RootDatum& d) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<RootDatum>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(d.label());
  if (it == registry.end())
    it = registry.emplace(d.label(), std::make_unique<RootDatum>(d)).first;
  return *it->second;
}

std::string memo_key(const RootDatum& datum, const Weight& lambda) {
  return datum.label() + ":" + to_string(lambda);
}

}  // namespace

const Character& weyl_character(const RootDatum& datum, const Weight& lambda, CharacterCache* cache) {
  const std::string key = memo_key(datum, lambda);
  {
    std::lock_guard<std::mutex> lock(g_weyl_mutex);
    auto it = g_weyl_memo.find(key);
    if (it != g_weyl_memo.end()) return it->second;
  }
  const RootDatum& stable = interned_datum(datum);
  Character c(stable);
  bool from_cache = cache && cache->get(stable, lambda, c);
  if (!from_cache) {
    c = compute_weyl_character(stable, lambda);
    if (cache) cache->put(stable, lambda, c);
  }
  std::lock_guard<std::mutex> lock(g_weyl_mutex);
  auto [it, inserted] = g_weyl_memo.emplace(key, std::move(c));
  return it->second;  // idempotent: first writer wins
}

Int weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda))
    throw DomainError("weyl_dimension: non-dominant weight " + to_string(lambda));
  Int num = 1, den = 1;
  const Weight lr = lambda + datum.rho();
  for (const auto& cv : datum.positive_coroots()) {
    num *= Int(datum.pairing(lr, cv));
    den *= Int(datum.pairing(datum.rho(), cv));
  }
  if (num % den != 0) throw DomainError("weyl_dimension: non-integral (internal)");
  return num / den;
}

Character euler_character(const RootDatum& datum, const Weight& lambda) {
  auto norm = datum.dominant_dot_normalize(lambda);
  if (!norm) return Character(datum);
  const auto& [mu, sign] = *norm;
  const Character& base = weyl_character(datum, mu);
  return sign == 1 ? base : char_scale(base, Int(-1));
}

namespace {
Int int_pow(int base, long exp) {
  Int r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace

Character steinberg_character(const RootDatum& datum, int p, int r) {
  if (r < 1) throw DomainError("steinberg_character: r must be >= 1");
  long q = 1;
  for (int i = 0; i < r; ++i) q *= p;
  Weight lambda(datum.rank(), static_cast<int>(q - 1));
  return weyl_character(datum, lambda);
}

Character hat_nabla_character(const RootDatum& datum, int p, int r, const Weight& lambda) {
  if (r < 1) throw DomainError("hat_nabla_character: r must be >= 1");
  long q = 1;
  for (int i = 0; i < r; ++i) q *= p;
  Character::Map cur;
  cur.emplace(lambda, 1);
  for (const auto& alpha : datum.positive_roots()) {
    Character::Map next;
    for (const auto& [w, m] : cur) {
      Weight v = w;
      for (long k = 0; k < q; ++k) {
        auto [it, inserted] = next.emplace(v, m);
        if (!inserted) it->second += m;
        if (k + 1 < q) v = v - alpha;
      }
    }
    cur = std::move(next);
  }
  return Character(datum, std::move(cur));
}

DecompositionResult decompose_into_weyl(const Character& c, CharacterCache* cache) {
  if (!c.is_w_invariant())
    throw DomainError("decompose_into_weyl: character is not W-invariant");
  const RootDatum& datum = c.datum();
  DecompositionResult res{{}, c};
  std::set<Weight, PeelOrder> candidates{PeelOrder{&datum}};
  for (const auto& [w, m] : res.remainder.entries())
    if (datum.is_dominant(w)) candidates.insert(w);
  while (!candidates.empty()) {
    Weight nu = *candidates.begin();
    candidates.erase(candidates.begin());
    Int mult = res.remainder.at(nu);
    if (mult == 0) continue;
    const Character& basis = weyl_character(datum, nu, cache);
    for (const auto& [w, m] : basis.entries()) {
      res.remainder.add(w, -mult * m);
      if (w != nu && datum.is_dominant(w)) candidates.insert(w);
    }
    res.multiplicities.emplace(nu, mult);
  }
  return res;
}

DecompositionResult decompose_into_hat_nabla(const Character& c, int p, int r) {
  const RootDatum& datum = c.datum();
  DecompositionResult res{{}, c};
  if (c.empty()) return res;
  std::int64_t floor_h = 0;
  bool first = true;
  for (const auto& [w, m] : c.entries()) {
    auto h = datum.height_scaled(w);
    if (first || h < floor_h) floor_h = h;
    first = false;
  }
  std::map<Weight, Character> basis_memo;
  std::set<Weight, PeelOrder> candidates{PeelOrder{&datum}};
  for (const auto& [w, m] : c.entries())
    if (datum.height_scaled(w) >= floor_h) candidates.insert(w);
  while (!candidates.empty()) {
    Weight nu = *candidates.begin();
    candidates.erase(candidates.begin());
    Int mult = res.remainder.at(nu);
    if (mult == 0) continue;
    auto bit = basis_memo.find(nu);
    if (bit == basis_memo.end())
      bit = basis_memo.emplace(nu, hat_nabla_character(datum, p, r, nu)).first;
    for (const auto& [w, m] : bit->second.entries()) {
      res.remainder.add(w, -mult * m);
      if (w != nu && datum.height_scaled(w) >= floor_h) candidates.insert(w);
    }
    res.multiplicities.emplace(nu, mult);
  }
  return res;
}

std::string character_to_json(const Character& c) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& [w, m] : c.entries()) {
    nlohmann::json entry = nlohmann::json::array();
    entry.push_back(w);
    if (m >= std::numeric_limits<std::int64_t>::min() && m <= std::numeric_limits<std::int64_t>::max())
      entry.push_back(static_cast<std::int64_t>(m));
    else
      entry.push_back(m.str());
    weights.push_back(std::move(entry));
  }
  nlohmann::json out;
  out["weights"] = std::move(weights);
  return out.dump();
}

Character character_from_json(const RootDatum& datum, const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Character::Map entries;
  for (const auto& entry : j.at("weights")) {
    Weight w = entry.at(0).get<std::vector<int>>();
    if (w.size() != static_cast<std::size_t>(datum.rank()))
      throw DomainError("character JSON: rank mismatch");
    Int m;
    if (entry.at(1).is_string())
      m = Int(entry.at(1).get<std::string>());
    else
      m = Int(entry.at(1).get<std::int64_t>());
    if (m != 0) entries[std::move(w)] = m;
  }
  return Character(datum, std::move(entries));
}

CharacterCache::CharacterCache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) {
    std::cerr << "warning: cache directory '" << dir_ << "' unusable, cache disabled\n";
    enabled_ = false;
  }
}

std::string CharacterCache::path_for(const RootDatum& datum, const Weight& lambda) const {
  std::string name = "weyl_" + datum.label();
  for (int c : lambda) name += "_" + (c < 0 ? "m" + std::to_string(-c) : std::to_string(c));
  return (std::filesystem::path(dir_) / (name + ".json")).string();
}

bool CharacterCache::get(const RootDatum& datum, const Weight& lambda, Character& out) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!enabled_) return false;
  std::ifstream in(path_for(datum, lambda));
  if (!in) return false;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    out = character_from_json(datum, text);
  } catch (const std::exception&) {
    return false;  // corrupt entry: recompute and overwrite
  }
  return true;
}

void CharacterCache::put(const RootDatum& datum, const Weight& lambda, const Character& c) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!enabled_) return;
  std::string path = path_for(datum, lambda);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      if (!warned_) {
        std::cerr << "warning: cache directory '" << dir_ << "' not writable, cache disabled\n";
        warned_ = true;
      }
      enabled_ = false;
      return;
    }
    out << character_to_json(c);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace frob
