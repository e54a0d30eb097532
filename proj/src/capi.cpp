// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#include "frob.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "frob/character.hpp"
#include "frob/errors.hpp"
#include "frob/filtration.hpp"
#include "frob/lspath.hpp"
#include "frob/rootdatum.hpp"
#include "frob/sl2.hpp"

struct frob_ctx {
  std::unique_ptr<frob::RootDatum> datum;
  std::unique_ptr<frob::CharacterCache> cache;
  long path_cap = frob::kDefaultPathCap;
  int jobs = 1;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

frob::Weight to_weight(const frob_ctx* ctx, const int* coords, int len) {
  if (!coords || len != ctx->datum->rank())
    throw frob::ConfigError("expected " + std::to_string(ctx->datum->rank()) +
                            " weight coordinates");
  return frob::Weight(coords, coords + len);
}

// Runs fn, routes the result string to *out, and maps exceptions to codes.
template <typename Fn>
int guarded(char** out, Fn&& fn) {
  if (!out) {
    set_error("null output pointer");
    return FROB_EUSAGE;
  }
  *out = nullptr;
  try {
    t_last_error.clear();
    std::pair<int, std::string> result = fn();
    *out = dup_string(result.second);
    if (!*out) {
      set_error("out of memory");
      return FROB_ERESOURCE;
    }
    return result.first;
  } catch (const frob::ConfigError& e) {
    set_error(e.what());
    return FROB_EUSAGE;
  } catch (const frob::DomainError& e) {
    set_error(e.what());
    return FROB_EUSAGE;
  } catch (const frob::ResourceError& e) {
    set_error(e.what());
    return FROB_ERESOURCE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FROB_EINTERNAL;
  }
}

void require_prime(int p) {
  if (p < 2) throw frob::ConfigError("p must be a prime >= 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw frob::ConfigError("p must be prime");
}

}  // namespace

extern "C" {

frob_ctx* frob_ctx_create(const char* type_label) {
  try {
    t_last_error.clear();
    if (!type_label) throw frob::ConfigError("null type label");
    auto ctx = std::make_unique<frob_ctx>();
    ctx->datum = std::make_unique<frob::RootDatum>(frob::RootDatum::parse(type_label));
    return ctx.release();
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

void frob_ctx_destroy(frob_ctx* ctx) { delete ctx; }

int frob_ctx_set_cache_dir(frob_ctx* ctx, const char* dir) {
  if (!ctx) {
    set_error("null context");
    return FROB_EUSAGE;
  }
  try {
    if (!dir || !*dir)
      ctx->cache.reset();
    else
      ctx->cache = std::make_unique<frob::CharacterCache>(dir);
    return FROB_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FROB_EINTERNAL;
  }
}

int frob_ctx_set_path_cap(frob_ctx* ctx, long cap) {
  if (!ctx || cap <= 0) {
    set_error("path cap must be positive");
    return FROB_EUSAGE;
  }
  ctx->path_cap = cap;
  return FROB_OK;
}

int frob_ctx_set_jobs(frob_ctx* ctx, int jobs) {
  if (!ctx || jobs <= 0) {
    set_error("jobs must be positive");
    return FROB_EUSAGE;
  }
  ctx->jobs = jobs;
  return FROB_OK;
}

int frob_char_json(frob_ctx* ctx, const char* kind, int p, int r, const int* lambda, int len,
                   char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx || !kind) throw frob::ConfigError("null context or kind");
    std::string k(kind);
    if (k == "weyl") {
      return {FROB_OK, character_to_json(
                           weyl_character(*ctx->datum, to_weight(ctx, lambda, len),
                                          ctx->cache.get()))};
    }
    if (k == "euler")
      return {FROB_OK, character_to_json(euler_character(*ctx->datum, to_weight(ctx, lambda, len)))};
    if (k == "steinberg") {
      require_prime(p);
      if (r < 1) throw frob::ConfigError("r must be >= 1");
      return {FROB_OK, character_to_json(steinberg_character(*ctx->datum, p, r))};
    }
    if (k == "hatnabla") {
      require_prime(p);
      if (r < 1) throw frob::ConfigError("r must be >= 1");
      return {FROB_OK, character_to_json(
                           hat_nabla_character(*ctx->datum, p, r, to_weight(ctx, lambda, len)))};
    }
    throw frob::ConfigError("unknown character kind '" + k + "'");
  });
}

int frob_contract(frob_ctx* ctx, int p, const int* lambda, int len, int csv, char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx) throw frob::ConfigError("null context");
    require_prime(p);
    auto table =
        contraction_multiplicities(*ctx->datum, p, to_weight(ctx, lambda, len), ctx->cache.get());
    return {FROB_OK, csv ? table.to_csv() : table.to_json()};
  });
}

int frob_signed_sum(frob_ctx* ctx, int p, const int* lambda, const int* mu, int len, char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx) throw frob::ConfigError("null context");
    require_prime(p);
    frob::Int v = signed_sum_multiplicity(*ctx->datum, p, to_weight(ctx, lambda, len),
                                          to_weight(ctx, mu, len), ctx->cache.get());
    return {FROB_OK, v.str()};
  });
}

int frob_ls_count(frob_ctx* ctx, int p, const int* lambda, const int* mu, int len, char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx) throw frob::ConfigError("null context");
    require_prime(p);
    frob::Int v = count_dominant_paths(*ctx->datum, p, to_weight(ctx, lambda, len),
                                       to_weight(ctx, mu, len), ctx->path_cap);
    return {FROB_OK, v.str()};
  });
}

int frob_agree(frob_ctx* ctx, int p, int max_coord, char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx) throw frob::ConfigError("null context");
    require_prime(p);
    if (max_coord < 0) throw frob::ConfigError("max_coord must be >= 0");
    auto report =
        agreement_grid(*ctx->datum, p, max_coord, ctx->path_cap, ctx->jobs, ctx->cache.get());
    int code = (report.all_agree && report.positivity_ok) ? FROB_OK : FROB_EVERIFY;
    if (code != FROB_OK) set_error("agreement grid found disagreeing cases");
    return {code, report.to_json()};
  });
}

int frob_adjoint(frob_ctx* ctx, int p, int max_coord, char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx) throw frob::ConfigError("null context");
    require_prime(p);
    if (max_coord < 0) throw frob::ConfigError("max_coord must be >= 0");
    auto report = adjoint_grid(*ctx->datum, p, max_coord, ctx->jobs, ctx->cache.get());
    int code = report.all_equal ? FROB_OK : FROB_EVERIFY;
    if (code != FROB_OK) set_error("adjunction grid found unequal pairs");
    return {code, report.to_json()};
  });
}

int frob_bound(frob_ctx* ctx, int p, char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx) throw frob::ConfigError("null context");
    require_prime(p);
    auto report = semisimplicity_bound_report(*ctx->datum, p);
    int code = report.empty() ? FROB_OK : FROB_EVERIFY;
    if (code != FROB_OK) set_error("bound report has violations");
    return {code, report.to_json()};
  });
}

int frob_hatnabla(frob_ctx* ctx, int p, int r, int s, int min_coord, int max_coord, char** out) {
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (!ctx) throw frob::ConfigError("null context");
    require_prime(p);
    if (!(0 < s && s < r)) throw frob::ConfigError("need 0 < s < r");
    if (min_coord > max_coord) throw frob::ConfigError("min_coord > max_coord");
    auto report = hatnabla_grid(*ctx->datum, p, r, s, min_coord, max_coord, ctx->jobs);
    int code = report.all_ok ? FROB_OK : FROB_EVERIFY;
    if (code != FROB_OK) set_error("hat-nabla grid found failures");
    return {code, report.to_json()};
  });
}

int frob_oracle(frob_ctx* ctx, int p, int max_n, int max_sum, char** out) {
  (void)ctx;
  return guarded(out, [&]() -> std::pair<int, std::string> {
    if (max_n < 0 || max_sum < 0) throw frob::ConfigError("bounds must be >= 0");
    auto report = frob::oracle_suite(p, max_n, max_sum);
    nlohmann::ordered_json j;
    j["p"] = report.p;
    j["cases"] = report.cases;
    j["failures"] = report.failures;
    j["theta_ok"] = report.theta_ok;
    j["all_ok"] = report.all_ok();
    int code = report.all_ok() ? FROB_OK : FROB_EVERIFY;
    if (code != FROB_OK) set_error("sl2 oracle suite failed");
    return {code, j.dump()};
  });
}

const char* frob_last_error(void) { return t_last_error.c_str(); }

void frob_string_free(char* s) { std::free(s); }

}  // extern "C"
