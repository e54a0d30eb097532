// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers
//
// frobctl: command-line front end over the frob shared library.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "frob.h"

namespace {

std::vector<int> parse_coords(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("weight", "bad coordinate '" + item + "'");
    }
  }
  return out;
}

struct CtxDeleter {
  void operator()(frob_ctx* c) const { frob_ctx_destroy(c); }
};
using CtxPtr = std::unique_ptr<frob_ctx, CtxDeleter>;

int finish(int code, char* out) {
  if (out) {
    std::fputs(out, stdout);
    std::fputc('\n', stdout);
    frob_string_free(out);
  }
  if (code != FROB_OK) std::fprintf(stderr, "frobctl: %s\n", frob_last_error());
  return code > 3 ? 3 : code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius contraction tables and verification suites"};
  app.require_subcommand(1);

  std::string type_label, lambda_text, mu_text, format = "json", cache_dir, kind = "weyl";
  int p = 2, r = 1, s = 1, max_coord = 2, min_coord = 0;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 1;
  long path_cap = 100000;
  int oracle_max_n = 20, oracle_max_sum = 12;
  if (const char* env = std::getenv("FROBCTL_CACHE")) cache_dir = env;

  auto add_common = [&](CLI::App* cmd, bool needs_type = true) {
    if (needs_type) cmd->add_option("--type", type_label, "Cartan type, e.g. A2, G2")->required();
    cmd->add_option("--cache", cache_dir, "character cache directory");
    cmd->add_option("--jobs", jobs, "parallelism degree")->check(CLI::PositiveNumber);
    cmd->add_option("--path-cap", path_cap, "LS path enumeration cap")->check(CLI::PositiveNumber);
  };

  auto* c_contract = app.add_subcommand("contract", "good-filtration table of the contraction");
  add_common(c_contract);
  c_contract->add_option("--p", p, "prime")->required();
  c_contract->add_option("--lambda", lambda_text, "dominant weight, comma-separated")->required();
  c_contract->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* c_signed = app.add_subcommand("signed-sum", "signed Weyl-orbit multiplicity");
  add_common(c_signed);
  c_signed->add_option("--p", p, "prime")->required();
  c_signed->add_option("--lambda", lambda_text)->required();
  c_signed->add_option("--mu", mu_text)->required();

  auto* c_ls = app.add_subcommand("ls-count", "shifted-dominant LS path count");
  add_common(c_ls);
  c_ls->add_option("--p", p, "prime")->required();
  c_ls->add_option("--lambda", lambda_text)->required();
  c_ls->add_option("--mu", mu_text)->required();

  auto* c_agree = app.add_subcommand("agree", "multi-formula agreement grid");
  add_common(c_agree);
  c_agree->add_option("--p", p, "prime")->required();
  c_agree->add_option("--max-coord", max_coord, "grid bound on lambda coordinates")->required();

  auto* c_adjoint = app.add_subcommand("adjoint", "adjunction identity grid");
  add_common(c_adjoint);
  c_adjoint->add_option("--p", p, "prime")->required();
  c_adjoint->add_option("--max-coord", max_coord)->required();

  auto* c_bound = app.add_subcommand("bound", "semisimplicity bound report");
  add_common(c_bound);
  c_bound->add_option("--p", p, "prime, >= 2(h-1)")->required();

  auto* c_hat = app.add_subcommand("hatnabla", "iterated contraction grid on the hat basis");
  add_common(c_hat);
  c_hat->add_option("--p", p, "prime")->required();
  c_hat->add_option("--r", r, "twist depth")->required();
  c_hat->add_option("--s", s, "contraction count, 0 < s < r")->required();
  c_hat->add_option("--min-coord", min_coord);
  c_hat->add_option("--max-coord", max_coord)->required();

  auto* c_oracle = app.add_subcommand("oracle", "rank-1 brute-force verification suite");
  add_common(c_oracle, false);
  c_oracle->add_option("--p", p, "prime <= 13")->required();
  c_oracle->add_option("--max-n", oracle_max_n, "highest weight bound");
  c_oracle->add_option("--max-sum", oracle_max_sum, "tensor factor bound");

  auto* c_char = app.add_subcommand("char", "character dump");
  add_common(c_char);
  c_char->add_option("--kind", kind, "weyl|euler|steinberg|hatnabla")
      ->check(CLI::IsMember({"weyl", "euler", "steinberg", "hatnabla"}));
  c_char->add_option("--p", p, "prime (steinberg, hatnabla)");
  c_char->add_option("--r", r, "twist depth (steinberg, hatnabla)");
  c_char->add_option("--lambda", lambda_text, "weight (weyl, euler, hatnabla)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CtxPtr ctx;
  auto need_ctx = [&]() -> frob_ctx* {
    ctx.reset(frob_ctx_create(type_label.c_str()));
    if (!ctx) {
      std::fprintf(stderr, "frobctl: %s\n", frob_last_error());
      std::exit(2);
    }
    if (!cache_dir.empty()) frob_ctx_set_cache_dir(ctx.get(), cache_dir.c_str());
    frob_ctx_set_path_cap(ctx.get(), path_cap);
    frob_ctx_set_jobs(ctx.get(), jobs);
    return ctx.get();
  };

  char* out = nullptr;
  try {
    if (c_contract->parsed()) {
      auto lambda = parse_coords(lambda_text);
      int code = frob_contract(need_ctx(), p, lambda.data(), static_cast<int>(lambda.size()),
                               format == "csv", &out);
      return finish(code, out);
    }
    if (c_signed->parsed() || c_ls->parsed()) {
      auto lambda = parse_coords(lambda_text);
      auto mu = parse_coords(mu_text);
      if (mu.size() != lambda.size()) {
        std::fprintf(stderr, "frobctl: lambda and mu must have equal length\n");
        return 2;
      }
      int code = c_signed->parsed()
                     ? frob_signed_sum(need_ctx(), p, lambda.data(), mu.data(),
                                       static_cast<int>(lambda.size()), &out)
                     : frob_ls_count(need_ctx(), p, lambda.data(), mu.data(),
                                     static_cast<int>(lambda.size()), &out);
      return finish(code, out);
    }
    if (c_agree->parsed()) {
      int code = frob_agree(need_ctx(), p, max_coord, &out);
      return finish(code, out);
    }
    if (c_adjoint->parsed()) {
      int code = frob_adjoint(need_ctx(), p, max_coord, &out);
      return finish(code, out);
    }
    if (c_bound->parsed()) {
      int code = frob_bound(need_ctx(), p, &out);
      return finish(code, out);
    }
    if (c_hat->parsed()) {
      int code = frob_hatnabla(need_ctx(), p, r, s, min_coord, max_coord, &out);
      return finish(code, out);
    }
    if (c_oracle->parsed()) {
      int code = frob_oracle(nullptr, p, oracle_max_n, oracle_max_sum, &out);
      return finish(code, out);
    }
    if (c_char->parsed()) {
      std::vector<int> lambda = parse_coords(lambda_text);
      const int* lp = lambda.empty() ? nullptr : lambda.data();
      int code = frob_char_json(need_ctx(), kind.c_str(), p, r, lp,
                                static_cast<int>(lambda.size()), &out);
      return finish(code, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "frobctl: %s\n", e.what());
    return 2;
  }
  return 2;
}
