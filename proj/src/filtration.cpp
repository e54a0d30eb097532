// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#include "frob/filtration.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "frob/errors.hpp"
#include "frob/lspath.hpp"

namespace frob {

namespace {

nlohmann::ordered_json json_int(const Int& m) {
  if (m >= std::numeric_limits<std::int64_t>::min() && m <= std::numeric_limits<std::int64_t>::max())
    return nlohmann::ordered_json(static_cast<std::int64_t>(m));
  return nlohmann::ordered_json(m.str());
}

// Run fn(k) for k in [0, count), possibly on several threads; results land in
// caller-owned slots so assembly stays deterministic.
void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  int nthreads = static_cast<int>(std::min<long>(jobs, count));
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (long k = next.fetch_add(1); k < count; k = next.fetch_add(1)) fn(k);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::string MultiplicityTable::to_json() const {
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    nlohmann::ordered_json row;
    row["mu"] = it->first;
    row["mult"] = json_int(it->second);
    rows_json.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["type"] = type_label;
  out["p"] = p;
  out["lambda"] = lambda;
  out["rows"] = std::move(rows_json);
  return out.dump();
}

std::string MultiplicityTable::to_csv() const {
  std::ostringstream os;
  os << "mu_coords,mult\n";
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (std::size_t i = 0; i < it->first.size(); ++i) os << (i ? " " : "") << it->first[i];
    os << ',' << it->second << '\n';
  }
  return os.str();
}

MultiplicityTable contraction_multiplicities(const RootDatum& datum, int p, const Weight& lambda,
                                             CharacterCache* cache) {
  if (!datum.is_dominant(lambda))
    throw DomainError("contraction_multiplicities: non-dominant lambda " + to_string(lambda));
  Character contracted = frobenius_contract(weyl_character(datum, lambda, cache), p);
  auto dec = decompose_into_weyl(contracted, cache);
  if (!dec.remainder.empty())
    throw DomainError("contraction_multiplicities: nonzero remainder (internal)");
  MultiplicityTable table;
  table.type_label = datum.label();
  table.p = p;
  table.lambda = lambda;
  table.rows = std::move(dec.multiplicities);
  return table;
}

Int signed_sum_multiplicity(const RootDatum& datum, int p, const Weight& lambda, const Weight& mu,
                            CharacterCache* cache) {
  if (!datum.is_dominant(lambda) || !datum.is_dominant(mu))
    throw DomainError("signed_sum_multiplicity: weights must be dominant");
  const Character& ch = weyl_character(datum, lambda, cache);
  Int sum = 0;
  for (const auto& w : datum.weyl_elements()) {
    Weight dotted = datum.dot_action(w, mu);
    if (w.length > 0 && dotted == mu)
      throw DomainError("signed_sum_multiplicity: nontrivial dot stabilizer (internal)");
    sum += Int(w.sign()) * ch.at(p * dotted);
  }
  return sum;
}

DecompositionResult steinberg_tensor_decomposition(const RootDatum& datum, int p,
                                                   const Weight& lambda, CharacterCache* cache) {
  Character prod =
      char_tensor(steinberg_character(datum, p, 1), weyl_character(datum, lambda, cache));
  return decompose_into_weyl(prod, cache);
}

Int steinberg_tensor_multiplicity(const RootDatum& datum, int p, const Weight& lambda,
                                  const Weight& mu, CharacterCache* cache) {
  if (!datum.is_dominant(lambda) || !datum.is_dominant(mu))
    throw DomainError("steinberg_tensor_multiplicity: weights must be dominant");
  auto dec = steinberg_tensor_decomposition(datum, p, lambda, cache);
  Weight target = (p - 1) * datum.rho() + p * mu;
  auto it = dec.multiplicities.find(target);
  return it == dec.multiplicities.end() ? Int(0) : it->second;
}

MaximalMuResult maximal_mu_check(const RootDatum& datum, int p, const Weight& lambda) {
  const Character& ch = weyl_character(datum, lambda);
  std::vector<Weight> support;  // dominant mu with p*mu a weight of nabla(lambda)
  for (const auto& [w, m] : ch.entries()) {
    bool divisible = std::all_of(w.begin(), w.end(), [p](int x) { return x % p == 0; });
    if (!divisible) continue;
    Weight mu(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) mu[i] = w[i] / p;
    if (datum.is_dominant(mu)) support.push_back(std::move(mu));
  }
  if (support.empty()) throw DomainError("maximal_mu_check: contraction is empty");
  // a maximal element under dominance: maximal scaled height, lex tie-break
  Weight best = support[0];
  for (const auto& mu : support) {
    auto hb = datum.height_scaled(best), hm = datum.height_scaled(mu);
    if (hm > hb || (hm == hb && mu > best)) best = mu;
  }
  MaximalMuResult res;
  res.mu_max = best;
  res.weight_mult = ch.at(p * best);
  res.steinberg_mult = steinberg_tensor_multiplicity(datum, p, lambda, best);
  res.ok = (res.steinberg_mult == res.weight_mult);
  return res;
}

std::pair<Int, Int> adjunction_dimension_check(const RootDatum& datum, int p, const Weight& lambda,
                                               const Weight& mu, CharacterCache* cache) {
  Int lhs = steinberg_tensor_multiplicity(datum, p, lambda, mu, cache);
  auto table = contraction_multiplicities(datum, p, lambda, cache);
  auto it = table.rows.find(mu);
  Int rhs = it == table.rows.end() ? Int(0) : it->second;
  return {lhs, rhs};
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json v = nlohmann::ordered_json::array();
  for (const auto& viol : violations) {
    nlohmann::ordered_json e;
    e["lambda"] = viol.lambda;
    e["mu"] = viol.mu;
    e["pairing"] = viol.pairing;
    v.push_back(std::move(e));
  }
  nlohmann::ordered_json out;
  out["type"] = type_label;
  out["p"] = p;
  out["violations"] = std::move(v);
  out["empty"] = violations.empty();
  return out.dump();
}

BoundReport semisimplicity_bound_report(const RootDatum& datum, int p) {
  int h = datum.coxeter_number();
  if (p < 2 * (h - 1))
    throw DomainError("semisimplicity_bound_report: requires p >= 2(h-1) = " +
                      std::to_string(2 * (h - 1)));
  BoundReport report;
  report.type_label = datum.label();
  report.p = p;
  std::vector<Weight> lambda1;
  {
    Weight cur(datum.rank(), 0);
    while (true) {
      lambda1.push_back(cur);
      int i = 0;
      while (i < datum.rank() && cur[i] == p - 1) cur[i++] = 0;
      if (i == datum.rank()) break;
      ++cur[i];
    }
  }
  for (const auto& lambda : lambda1) {
    const Character& ch = weyl_character(datum, lambda);
    for (const auto& [w, m] : ch.entries()) {
      bool divisible = std::all_of(w.begin(), w.end(), [p](int x) { return x % p == 0; });
      if (!divisible) continue;
      Weight mu(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) mu[i] = w[i] / p;
      if (!datum.is_dominant(mu)) continue;
      std::int64_t pair = datum.pairing(mu + datum.rho(), datum.highest_coroot());
      if (pair >= p) report.violations.push_back({lambda, mu, pair});
    }
  }
  return report;
}

WeightMembershipResult g2_weight_membership_check(const RootDatum& datum, int p) {
  if (datum.label() != "G2")
    throw DomainError("g2_weight_membership_check: G2 only");
  if (p < 3) throw DomainError("g2_weight_membership_check: requires p >= 3");
  WeightMembershipResult res;
  res.lambda = {p - 3, 2};
  Weight target = {p, 0};  // p * w_alpha
  const Character& ch = weyl_character(datum, res.lambda);
  res.membership_mult = ch.at(target);

  // the positive root gamma with p*w_alpha = lambda - gamma
  Weight diff = res.lambda - target;
  bool found_root = false;
  for (const auto& root : datum.positive_roots())
    if (root == diff) {
      res.gamma = root;
      found_root = true;
      break;
    }

  // maximality of w_alpha among dominant nu with p*nu a weight of nabla(lambda)
  bool maximal = true;
  Weight w_alpha = {1, 0};
  for (const auto& [w, m] : ch.entries()) {
    if (w[0] % p != 0 || w[1] % p != 0) continue;
    Weight nu = {w[0] / p, w[1] / p};
    if (!datum.is_dominant(nu) || nu == w_alpha) continue;
    if (datum.in_positive_root_span(nu - w_alpha)) {
      maximal = false;
      break;
    }
  }
  res.ok = (res.membership_mult >= 1) && found_root && maximal;
  return res;
}

DecompositionResult hat_nabla_contraction_check(const RootDatum& datum, int p, int r, int s,
                                                const Weight& lambda) {
  if (s <= 0 || s >= r) throw DomainError("hat_nabla_contraction_check: need 0 < s < r");
  Character c = hat_nabla_character(datum, p, r, lambda);
  for (int k = 0; k < s; ++k) c = frobenius_contract(c, p);
  return decompose_into_hat_nabla(c, p, r - s);
}

std::vector<Weight> dominant_box(const RootDatum& datum, int max_coord) {
  std::vector<Weight> out;
  Weight cur(datum.rank(), 0);
  while (true) {
    out.push_back(cur);
    int i = datum.rank() - 1;
    while (i >= 0 && cur[i] == max_coord) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AgreementReport::to_json() const {
  nlohmann::ordered_json cases_json = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json e;
    e["lambda"] = c.lambda;
    e["mu"] = c.mu;
    e["decomposition"] = json_int(c.decomposition);
    e["signed_sum"] = json_int(c.signed_sum);
    e["steinberg_tensor"] = json_int(c.steinberg_tensor);
    if (c.path_count) e["path_count"] = json_int(*c.path_count);
    e["agree"] = c.agree;
    cases_json.push_back(std::move(e));
  }
  nlohmann::ordered_json out;
  out["type"] = type_label;
  out["p"] = p;
  out["cases"] = std::move(cases_json);
  out["num_cases"] = cases.size();
  out["path_skipped_lambdas"] = path_skipped;
  out["all_agree"] = all_agree;
  out["positivity_ok"] = positivity_ok;
  return out.dump();
}

AgreementReport agreement_grid(const RootDatum& datum, int p, int max_coord, long path_cap,
                               int jobs, CharacterCache* cache) {
  AgreementReport report;
  report.type_label = datum.label();
  report.p = p;
  auto lambdas = dominant_box(datum, max_coord);

  struct PerLambda {
    std::vector<AgreementCase> cases;
    bool paths_skipped = false;
    bool positivity_ok = true;
  };
  std::vector<PerLambda> slots(lambdas.size());

  parallel_for(static_cast<long>(lambdas.size()), jobs, [&](long k) {
    const Weight& lambda = lambdas[static_cast<std::size_t>(k)];
    PerLambda& slot = slots[static_cast<std::size_t>(k)];
    auto table = contraction_multiplicities(datum, p, lambda, cache);
    for (const auto& [mu, m] : table.rows)
      if (m < 0) slot.positivity_ok = false;

    // mu range: every dominant weight in the contraction support
    Character contracted = frobenius_contract(weyl_character(datum, lambda, cache), p);
    std::set<Weight> mus;
    for (const auto& [w, m] : contracted.entries())
      if (datum.is_dominant(w)) mus.insert(w);
    for (const auto& [mu, m] : table.rows) mus.insert(mu);
    if (mus.empty()) return;

    auto tensor_dec = steinberg_tensor_decomposition(datum, p, lambda, cache);

    std::optional<std::map<Weight, Int>> path_counts;
    if (weyl_dimension(datum, lambda) <= path_cap)
      path_counts = count_dominant_paths_all(datum, p, lambda, path_cap);
    else
      slot.paths_skipped = true;

    for (const auto& mu : mus) {
      AgreementCase c;
      c.lambda = lambda;
      c.mu = mu;
      auto it = table.rows.find(mu);
      c.decomposition = it == table.rows.end() ? Int(0) : it->second;
      c.signed_sum = signed_sum_multiplicity(datum, p, lambda, mu, cache);
      Weight target = (p - 1) * datum.rho() + p * mu;
      auto jt = tensor_dec.multiplicities.find(target);
      c.steinberg_tensor = jt == tensor_dec.multiplicities.end() ? Int(0) : jt->second;
      c.agree = (c.decomposition == c.signed_sum) && (c.decomposition == c.steinberg_tensor);
      if (path_counts) {
        auto pt = path_counts->find(mu);
        c.path_count = pt == path_counts->end() ? Int(0) : pt->second;
        c.agree = c.agree && (*c.path_count == c.decomposition);
      }
      slot.cases.push_back(std::move(c));
    }
  });

  for (auto& slot : slots) {
    if (slot.paths_skipped) ++report.path_skipped;
    if (!slot.positivity_ok) report.positivity_ok = false;
    for (auto& c : slot.cases) {
      if (!c.agree) report.all_agree = false;
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

std::string AdjointReport::to_json() const {
  nlohmann::ordered_json cases_json = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json e;
    e["lambda"] = c.lambda;
    e["mu"] = c.mu;
    e["lhs"] = json_int(c.lhs);
    e["rhs"] = json_int(c.rhs);
    cases_json.push_back(std::move(e));
  }
  nlohmann::ordered_json out;
  out["type"] = type_label;
  out["p"] = p;
  out["cases"] = std::move(cases_json);
  out["num_cases"] = cases.size();
  out["all_equal"] = all_equal;
  return out.dump();
}

AdjointReport adjoint_grid(const RootDatum& datum, int p, int max_coord, int jobs,
                           CharacterCache* cache) {
  AdjointReport report;
  report.type_label = datum.label();
  report.p = p;
  auto lambdas = dominant_box(datum, max_coord);
  std::vector<std::vector<AdjointCase>> slots(lambdas.size());

  parallel_for(static_cast<long>(lambdas.size()), jobs, [&](long k) {
    const Weight& lambda = lambdas[static_cast<std::size_t>(k)];
    auto table = contraction_multiplicities(datum, p, lambda, cache);
    Character contracted = frobenius_contract(weyl_character(datum, lambda, cache), p);
    std::set<Weight> mus;
    for (const auto& [w, m] : contracted.entries())
      if (datum.is_dominant(w)) mus.insert(w);
    for (const auto& [mu, m] : table.rows) mus.insert(mu);
    if (mus.empty()) return;
    auto tensor_dec = steinberg_tensor_decomposition(datum, p, lambda, cache);
    for (const auto& mu : mus) {
      AdjointCase c;
      c.lambda = lambda;
      c.mu = mu;
      Weight target = (p - 1) * datum.rho() + p * mu;
      auto jt = tensor_dec.multiplicities.find(target);
      c.lhs = jt == tensor_dec.multiplicities.end() ? Int(0) : jt->second;
      auto it = table.rows.find(mu);
      c.rhs = it == table.rows.end() ? Int(0) : it->second;
      slots[static_cast<std::size_t>(k)].push_back(std::move(c));
    }
  });

  for (auto& slot : slots)
    for (auto& c : slot) {
      if (c.lhs != c.rhs) report.all_equal = false;
      report.cases.push_back(std::move(c));
    }
  return report;
}

std::string HatNablaReport::to_json() const {
  nlohmann::ordered_json cases_json = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json e;
    e["lambda"] = c.lambda;
    e["nonnegative"] = c.nonnegative;
    e["remainder_empty"] = c.remainder_empty;
    cases_json.push_back(std::move(e));
  }
  nlohmann::ordered_json out;
  out["type"] = type_label;
  out["p"] = p;
  out["r"] = r;
  out["s"] = s;
  out["cases"] = std::move(cases_json);
  out["num_cases"] = cases.size();
  out["all_ok"] = all_ok;
  return out.dump();
}

HatNablaReport hatnabla_grid(const RootDatum& datum, int p, int r, int s, int min_coord,
                             int max_coord, int jobs) {
  HatNablaReport report;
  report.type_label = datum.label();
  report.p = p;
  report.r = r;
  report.s = s;
  std::vector<Weight> lambdas;
  {
    Weight cur(datum.rank(), min_coord);
    while (true) {
      lambdas.push_back(cur);
      int i = datum.rank() - 1;
      while (i >= 0 && cur[i] == max_coord) cur[i--] = min_coord;
      if (i < 0) break;
      ++cur[i];
    }
    std::sort(lambdas.begin(), lambdas.end());
  }
  std::vector<HatNablaCase> slots(lambdas.size());
  parallel_for(static_cast<long>(lambdas.size()), jobs, [&](long k) {
    const Weight& lambda = lambdas[static_cast<std::size_t>(k)];
    auto dec = hat_nabla_contraction_check(datum, p, r, s, lambda);
    HatNablaCase c;
    c.lambda = lambda;
    c.remainder_empty = dec.remainder.empty();
    c.nonnegative = std::all_of(dec.multiplicities.begin(), dec.multiplicities.end(),
                                [](const auto& kv) { return kv.second >= 0; });
    slots[static_cast<std::size_t>(k)] = std::move(c);
  });
  for (auto& c : slots) {
    if (!c.nonnegative || !c.remainder_empty) report.all_ok = false;
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace frob
