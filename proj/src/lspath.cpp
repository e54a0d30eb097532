// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#include "frob/lspath.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

#include "frob/errors.hpp"

namespace frob {

namespace {

void normalize(LSPath& p) {
  std::vector<std::pair<Weight, Rational>> out;
  for (auto& seg : p.segments) {
    if (seg.second == Rational(0)) continue;
    if (!out.empty() && out.back().first == seg.first)
      out.back().second += seg.second;
    else
      out.push_back(std::move(seg));
  }
  p.segments = std::move(out);
}

// Values of h(t) = <pi(t), alpha_i^vee> at the breakpoints.
std::vector<Rational> height_values(const LSPath& p, int i) {
  std::vector<Rational> v;
  v.reserve(p.segments.size() + 1);
  v.push_back(Rational(0));
  for (const auto& [dir, len] : p.segments) v.push_back(v.back() + len * Rational(dir[i]));
  return v;
}

}  // namespace

Weight LSPath::endpoint(const RootDatum& datum) const {
  int n = datum.rank();
  std::vector<Rational> acc(n, Rational(0));
  for (const auto& [dir, len] : segments)
    for (int k = 0; k < n; ++k) acc[k] += len * Rational(dir[k]);
  Weight ep(n);
  for (int k = 0; k < n; ++k) {
    if (acc[k].denominator() != 1) throw DomainError("path endpoint not integral");
    ep[k] = static_cast<int>(acc[k].numerator());
  }
  return ep;
}

LSPath straight_path(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda))
    throw DomainError("straight_path: non-dominant weight " + to_string(lambda));
  LSPath p;
  p.shape = lambda;
  if (!is_zero(lambda)) p.segments.emplace_back(lambda, Rational(1));
  return p;
}

std::optional<LSPath> root_operator_f(const RootDatum& datum, const LSPath& path, int i) {
  if (path.segments.empty()) return std::nullopt;  // constant path
  auto v = height_values(path, i);
  const std::size_t n = path.segments.size();
  Rational m = *std::min_element(v.begin(), v.end());
  if (v[n] - m < Rational(1)) return std::nullopt;
  std::size_t j0 = 0;
  for (std::size_t j = 0; j <= n; ++j)
    if (v[j] == m) j0 = j;  // last attainment of the minimum
  std::size_t jx = j0 + 1;
  while (v[jx] < m + 1) ++jx;  // first crossing of m+1, inside segment jx

  LSPath out;
  out.shape = path.shape;
  out.segments.reserve(n + 1);
  for (std::size_t k = 0; k < j0; ++k) out.segments.push_back(path.segments[k]);
  for (std::size_t k = j0; k + 1 < jx; ++k)
    out.segments.emplace_back(datum.simple_reflect(i, path.segments[k].first), path.segments[k].second);
  const auto& [dir, len] = path.segments[jx - 1];
  Rational lref = (m + 1 - v[jx - 1]) / Rational(dir[i]);
  out.segments.emplace_back(datum.simple_reflect(i, dir), lref);
  if (len - lref > Rational(0)) out.segments.emplace_back(dir, len - lref);
  for (std::size_t k = jx; k < n; ++k) out.segments.push_back(path.segments[k]);
  normalize(out);
  return out;
}

std::optional<LSPath> root_operator_e(const RootDatum& datum, const LSPath& path, int i) {
  if (path.segments.empty()) return std::nullopt;
  auto v = height_values(path, i);
  const std::size_t n = path.segments.size();
  Rational m = *std::min_element(v.begin(), v.end());
  if (m > Rational(-1)) return std::nullopt;
  std::size_t j1 = 0;
  while (v[j1] != m) ++j1;  // first attainment of the minimum
  std::size_t jx = j1 - 1;
  while (v[jx] < m + 1) --jx;  // last visit of m+1 before j1, inside segment jx+1

  LSPath out;
  out.shape = path.shape;
  out.segments.reserve(n + 1);
  for (std::size_t k = 0; k < jx; ++k) out.segments.push_back(path.segments[k]);
  const auto& [dir, len] = path.segments[jx];
  Rational lkeep = (m + 1 - v[jx]) / Rational(dir[i]);
  if (lkeep > Rational(0)) out.segments.emplace_back(dir, lkeep);
  out.segments.emplace_back(datum.simple_reflect(i, dir), len - lkeep);
  for (std::size_t k = jx + 1; k < j1; ++k)
    out.segments.emplace_back(datum.simple_reflect(i, path.segments[k].first), path.segments[k].second);
  for (std::size_t k = j1; k < n; ++k) out.segments.push_back(path.segments[k]);
  normalize(out);
  return out;
}

std::vector<LSPath> generate_path_model(const RootDatum& datum, const Weight& lambda, long cap) {
  LSPath root = straight_path(datum, lambda);
  std::set<LSPath> seen{root};
  std::deque<LSPath> frontier{root};
  std::vector<LSPath> out{root};
  while (!frontier.empty()) {
    LSPath cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i < datum.rank(); ++i) {
      auto nxt = root_operator_f(datum, cur, i);
      if (!nxt) continue;
      if (seen.insert(*nxt).second) {
        if (static_cast<long>(seen.size()) > cap)
          throw ResourceError("path model for " + to_string(lambda) + " exceeds cap " +
                              std::to_string(cap));
        out.push_back(*nxt);
        frontier.push_back(std::move(*nxt));
      }
    }
  }
  return out;
}

bool is_dominant_shifted(const RootDatum& datum, const LSPath& path, const Weight& shift) {
  for (int i = 0; i < datum.rank(); ++i) {
    Rational h(shift[i]);
    for (const auto& [dir, len] : path.segments) {
      h += len * Rational(dir[i]);
      if (h < Rational(0)) return false;
    }
  }
  return true;
}

namespace {

// Canonical spanning tree of the crystal: a vertex's parent edge is f_i for
// the smallest i with e_i defined, so each vertex is visited exactly once
// without a dedup set.
template <typename Visit>
void walk_crystal(const RootDatum& datum, const LSPath& root, long cap, Visit&& visit) {
  long visited = 0;
  std::vector<LSPath> stack{root};
  while (!stack.empty()) {
    LSPath cur = std::move(stack.back());
    stack.pop_back();
    if (++visited > cap)
      throw ResourceError("path model for " + to_string(root.shape) + " exceeds cap " +
                          std::to_string(cap));
    visit(cur);
    for (int i = 0; i < datum.rank(); ++i) {
      auto child = root_operator_f(datum, cur, i);
      if (!child) continue;
      int parent = -1;
      for (int j = 0; j < datum.rank(); ++j)
        if (root_operator_e(datum, *child, j)) {
          parent = j;
          break;
        }
      if (parent == i) stack.push_back(std::move(*child));
    }
  }
}

}  // namespace

CrystalCensus crystal_census(const RootDatum& datum, int p, const Weight& lambda, long cap) {
  if (!datum.is_dominant(lambda))
    throw DomainError("crystal_census: non-dominant lambda " + to_string(lambda));
  CrystalCensus census;
  Weight shift((p - 1) * datum.rho());
  walk_crystal(datum, straight_path(datum, lambda), cap, [&](const LSPath& path) {
    Weight ep = path.endpoint(datum);
    census.size += 1;
    census.endpoints[ep] += 1;
    bool divisible = std::all_of(ep.begin(), ep.end(), [p](int x) { return x % p == 0; });
    if (!divisible) return;
    Weight mu(ep.size());
    for (std::size_t k = 0; k < ep.size(); ++k) mu[k] = ep[k] / p;
    if (!datum.is_dominant(mu)) return;
    if (is_dominant_shifted(datum, path, shift)) census.dominant_counts[mu] += 1;
  });
  return census;
}

std::map<Weight, Int> count_dominant_paths_all(const RootDatum& datum, int p, const Weight& lambda,
                                               long cap) {
  if (!datum.is_dominant(lambda))
    throw DomainError("count_dominant_paths: non-dominant lambda " + to_string(lambda));
  std::map<Weight, Int> counts;
  Weight shift((p - 1) * datum.rho());
  walk_crystal(datum, straight_path(datum, lambda), cap, [&](const LSPath& path) {
    Weight ep = path.endpoint(datum);
    bool divisible = std::all_of(ep.begin(), ep.end(), [p](int x) { return x % p == 0; });
    if (!divisible) return;
    Weight mu(ep.size());
    for (std::size_t k = 0; k < ep.size(); ++k) mu[k] = ep[k] / p;
    if (!datum.is_dominant(mu)) return;
    if (is_dominant_shifted(datum, path, shift)) counts[mu] += 1;
  });
  return counts;
}

Int count_dominant_paths(const RootDatum& datum, int p, const Weight& lambda, const Weight& mu,
                         long cap) {
  if (!datum.is_dominant(mu))
    throw DomainError("count_dominant_paths: non-dominant mu " + to_string(mu));
  Weight target = p * mu;
  Weight shift((p - 1) * datum.rho());
  Int count = 0;
  walk_crystal(datum, straight_path(datum, lambda), cap, [&](const LSPath& path) {
    if (path.endpoint(datum) == target && is_dominant_shifted(datum, path, shift)) count += 1;
  });
  return count;
}

std::string path_model_to_json(const RootDatum& datum, const std::vector<LSPath>& model) {
  std::vector<LSPath> sorted = model;
  std::sort(sorted.begin(), sorted.end());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : sorted) {
    nlohmann::json jp = nlohmann::json::array();
    if (p.segments.empty()) {
      nlohmann::json seg = nlohmann::json::array();
      seg.push_back(Weight(datum.rank(), 0));
      seg.push_back(1);
      seg.push_back(1);
      jp.push_back(std::move(seg));
    }
    for (const auto& [dir, len] : p.segments) {
      nlohmann::json seg = nlohmann::json::array();
      seg.push_back(dir);
      seg.push_back(len.numerator());
      seg.push_back(len.denominator());
      jp.push_back(std::move(seg));
    }
    out.push_back(std::move(jp));
  }
  return out.dump();
}

}  // namespace frob
