// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#include "frob/sl2.hpp"

#include <map>

#include "frob/errors.hpp"

namespace frob {

namespace {

using Mat = std::vector<std::vector<int>>;

Mat zero_mat(int n) { return Mat(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)); }

int mod_pow(long base, long exp, int p) {
  long r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
  }
  return static_cast<int>(r);
}

int mod_inv(int a, int p) { return mod_pow(a, p - 2, p); }

Mat mat_mul(const Mat& a, const Mat& b, int p) {
  int n = static_cast<int>(a.size());
  Mat c = zero_mat(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      long aik = a[i][k];
      for (int j = 0; j < n; ++j)
        if (b[k][j]) c[i][j] = static_cast<int>((c[i][j] + aik * b[k][j]) % p);
    }
  return c;
}

// In-place row reduction; returns the rank.
int rank_mod_p(Mat m, int p) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    long inv = mod_inv(m[rank][col], p);
    for (int c = col; c < cols; ++c) m[rank][c] = static_cast<int>(m[rank][c] * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      long f = m[r][col];
      for (int c = col; c < cols; ++c)
        m[r][c] = static_cast<int>(((m[r][c] - f * m[rank][c]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

void check_prime(int p) {
  if (p < 2 || p > kOracleMaxPrime) throw DomainError("sl2 oracle: p out of range");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError("sl2 oracle: p must be prime");
}

}  // namespace

const RootDatum& sl2_datum() {
  static const RootDatum datum('A', 1);
  return datum;
}

FpRep build_weyl_module(int p, int n) {
  check_prime(p);
  if (n < 0) throw DomainError("build_weyl_module: n must be nonnegative");
  FpRep r;
  r.p = p;
  r.dim = n + 1;
  r.E = zero_mat(r.dim);
  r.F = zero_mat(r.dim);
  r.weights.resize(static_cast<std::size_t>(r.dim));
  for (int i = 0; i <= n; ++i) {
    r.weights[static_cast<std::size_t>(i)] = n - 2 * i;
    if (i > 0) r.E[i - 1][i] = (n - i + 1) % p;
    if (i < n) r.F[i + 1][i] = (i + 1) % p;
  }
  return r;
}

FpRep dual_rep(const FpRep& r) {
  FpRep d;
  d.p = r.p;
  d.dim = r.dim;
  d.E = zero_mat(r.dim);
  d.F = zero_mat(r.dim);
  d.weights.resize(static_cast<std::size_t>(r.dim));
  for (int i = 0; i < r.dim; ++i) {
    d.weights[static_cast<std::size_t>(i)] = -r.weights[static_cast<std::size_t>(i)];
    for (int j = 0; j < r.dim; ++j) {
      d.E[i][j] = (r.p - r.E[j][i]) % r.p;
      d.F[i][j] = (r.p - r.F[j][i]) % r.p;
    }
  }
  return d;
}

FpRep tensor_rep(const FpRep& a, const FpRep& b) {
  if (a.p != b.p) throw DomainError("tensor_rep: characteristic mismatch");
  FpRep t;
  t.p = a.p;
  t.dim = a.dim * b.dim;
  t.E = zero_mat(t.dim);
  t.F = zero_mat(t.dim);
  t.weights.resize(static_cast<std::size_t>(t.dim));
  auto idx = [&](int i, int j) { return i * b.dim + j; };
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      t.weights[static_cast<std::size_t>(idx(i, j))] =
          a.weights[static_cast<std::size_t>(i)] + b.weights[static_cast<std::size_t>(j)];
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      if (a.E[i][k])
        for (int j = 0; j < b.dim; ++j) t.E[idx(i, j)][idx(k, j)] = a.E[i][k];
      if (a.F[i][k])
        for (int j = 0; j < b.dim; ++j) t.F[idx(i, j)][idx(k, j)] = a.F[i][k];
    }
  for (int j = 0; j < b.dim; ++j)
    for (int l = 0; l < b.dim; ++l) {
      if (b.E[j][l])
        for (int i = 0; i < a.dim; ++i)
          t.E[idx(i, j)][idx(i, l)] = (t.E[idx(i, j)][idx(i, l)] + b.E[j][l]) % t.p;
      if (b.F[j][l])
        for (int i = 0; i < a.dim; ++i)
          t.F[idx(i, j)][idx(i, l)] = (t.F[idx(i, j)][idx(i, l)] + b.F[j][l]) % t.p;
    }
  return t;
}

FpRep direct_sum_rep(const FpRep& a, const FpRep& b) {
  if (a.p != b.p) throw DomainError("direct_sum_rep: characteristic mismatch");
  FpRep s;
  s.p = a.p;
  s.dim = a.dim + b.dim;
  s.E = zero_mat(s.dim);
  s.F = zero_mat(s.dim);
  s.weights = a.weights;
  s.weights.insert(s.weights.end(), b.weights.begin(), b.weights.end());
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      s.E[i][j] = a.E[i][j];
      s.F[i][j] = a.F[i][j];
    }
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) {
      s.E[a.dim + i][a.dim + j] = b.E[i][j];
      s.F[a.dim + i][a.dim + j] = b.F[i][j];
    }
  return s;
}

FpRep twist_rep(const FpRep& r) {
  FpRep t;
  t.p = r.p;
  t.dim = r.dim;
  t.E = zero_mat(r.dim);
  t.F = zero_mat(r.dim);
  t.weights.resize(static_cast<std::size_t>(r.dim));
  for (int i = 0; i < r.dim; ++i) t.weights[static_cast<std::size_t>(i)] = r.p * r.weights[static_cast<std::size_t>(i)];
  return t;
}

InvariantReport g1_invariants(const FpRep& r) {
  // E and F shift weights, so the joint kernel splits over weight spaces;
  // solve one small system per p-divisible weight.
  std::map<int, std::vector<int>> spaces;
  for (int j = 0; j < r.dim; ++j) spaces[r.weights[static_cast<std::size_t>(j)]].push_back(j);
  InvariantReport report;
  for (const auto& [w, cols] : spaces) {
    if (w % r.p != 0) continue;
    int k = static_cast<int>(cols.size());
    Mat m(static_cast<std::size_t>(2 * r.dim), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < r.dim; ++i) {
        m[i][c] = r.E[i][cols[static_cast<std::size_t>(c)]];
        m[r.dim + i][c] = r.F[i][cols[static_cast<std::size_t>(c)]];
      }
    int nullity = k - rank_mod_p(std::move(m), r.p);
    if (nullity > 0) {
      report.dimension += nullity;
      report.weight_character.add(Weight{w}, nullity);
    }
  }
  return report;
}

Character mu0_character(const FpRep& r) {
  Character c(sl2_datum());
  for (int w : r.weights)
    if (w % r.p == 0) c.add(Weight{w / r.p}, 1);
  return c;
}

bool verify_invariants_match_mu0(int p, const FpRep& m) {
  check_prime(p);
  if (m.p != p) throw DomainError("verify_invariants_match_mu0: characteristic mismatch");
  FpRep st = build_weyl_module(p, p - 1);
  FpRep big = tensor_rep(tensor_rep(st, st), m);
  InvariantReport inv = g1_invariants(big);
  Character rhs = frobenius_twist(mu0_character(m), p);
  return inv.weight_character == rhs;
}

int theta_rank(int p) {
  check_prime(p);
  FpRep st = build_weyl_module(p, p - 1);
  FpRep tt = tensor_rep(st, st);
  int d = tt.dim;  // p^2

  // divided powers E^{(b)}, F^{(a)} for exponents below p
  std::vector<Mat> epow(static_cast<std::size_t>(p)), fpow(static_cast<std::size_t>(p));
  Mat id = zero_mat(d);
  for (int i = 0; i < d; ++i) id[i][i] = 1;
  epow[0] = fpow[0] = id;
  Mat ek = id, fk = id;
  long fact = 1;
  for (int k = 1; k < p; ++k) {
    ek = mat_mul(ek, tt.E, p);
    fk = mat_mul(fk, tt.F, p);
    fact = fact * k % p;
    int inv = mod_inv(static_cast<int>(fact), p);
    epow[static_cast<std::size_t>(k)] = ek;
    fpow[static_cast<std::size_t>(k)] = fk;
    for (auto& row : epow[static_cast<std::size_t>(k)])
      for (auto& x : row) x = static_cast<int>(static_cast<long>(x) * inv % p);
    for (auto& row : fpow[static_cast<std::size_t>(k)])
      for (auto& x : row) x = static_cast<int>(static_cast<long>(x) * inv % p);
  }

  // v+ = highest vector of the first factor, v- = lowest of the second
  int v0 = 0 * p + (p - 1);
  Mat vectors;
  vectors.reserve(static_cast<std::size_t>(d));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      std::vector<int> ev(static_cast<std::size_t>(d), 0);
      for (int i = 0; i < d; ++i) ev[static_cast<std::size_t>(i)] = epow[static_cast<std::size_t>(b)][i][v0];
      std::vector<int> fv(static_cast<std::size_t>(d), 0);
      for (int i = 0; i < d; ++i) {
        long acc = 0;
        for (int j = 0; j < d; ++j) acc += static_cast<long>(fpow[static_cast<std::size_t>(a)][i][j]) * ev[static_cast<std::size_t>(j)];
        fv[static_cast<std::size_t>(i)] = static_cast<int>(acc % p);
      }
      vectors.push_back(std::move(fv));
    }
  return rank_mod_p(std::move(vectors), p);
}

OracleReport oracle_suite(int p, int max_n, int max_sum) {
  check_prime(p);
  OracleReport report;
  report.p = p;
  auto run = [&](const FpRep& m) {
    ++report.cases;
    if (!verify_invariants_match_mu0(p, m)) ++report.failures;
  };
  for (int n = 0; n <= max_n; ++n) {
    FpRep d = build_weyl_module(p, n);
    run(d);
    run(dual_rep(d));
  }
  for (int a = 0; a <= max_sum; ++a)
    for (int b = 0; a + b <= max_sum; ++b)
      run(tensor_rep(build_weyl_module(p, a), build_weyl_module(p, b)));
  report.theta_ok = (theta_rank(p) == p * p);
  return report;
}

}  // namespace frob
