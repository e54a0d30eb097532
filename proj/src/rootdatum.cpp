// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#include "frob/rootdatum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/rational.hpp>

#include "frob/errors.hpp"

namespace frob {

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

Weight WeylElement::apply(const Weight& w) const {
  Weight r(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) r[i] += action[i][j] * w[j];
  return r;
}

namespace {

using Rat = boost::rational<std::int64_t>;

// cartan[i][j] = <alpha_j, alpha_i^vee>
std::vector<std::vector<int>> cartan_matrix(char type, int n) {
  auto chain = [&](std::vector<std::vector<int>>& c) {
    for (int i = 0; i + 1 < n; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type) {
    case 'A':
      if (n < 1) throw ConfigError("type A requires rank >= 1");
      chain(c);
      break;
    case 'B':  // alpha_n short
      if (n < 2) throw ConfigError("type B requires rank >= 2");
      chain(c);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      if (n < 2) throw ConfigError("type C requires rank >= 2");
      chain(c);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw ConfigError("type D requires rank >= 4");
      for (int i = 0; i + 1 < n - 1; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      c[n - 3][n - 1] = -1;
      c[n - 1][n - 3] = -1;
      break;
    case 'E': {
      if (n != 6) throw ConfigError("type E supported only at rank 6");
      // Bourbaki: chain 1-3-4-5-6, node 2 attached to 4.
      auto link = [&](int a, int b) {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(2, 4);
      break;
    }
    case 'F':
      if (n != 4) throw ConfigError("type F requires rank 4");
      chain(c);
      c[2][1] = -2;  // <alpha_2, alpha_3^vee> = -2 (alpha_3 short)
      c[1][2] = -1;
      break;
    case 'G':
      if (n != 2) throw ConfigError("type G requires rank 2");
      c[0][1] = -3;  // alpha_1 short: <alpha_2, alpha_1^vee> = -3
      c[1][0] = -1;
      break;
    default:
      throw ConfigError(std::string("unknown type label '") + type + "'");
  }
  return c;
}

// Symmetrizers d_i with D*C symmetric, normalized to min 1.
std::vector<int> compute_symmetrizers(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Rat> d(n, Rat(0));
  d[0] = Rat(1);
  // propagate along the Dynkin graph
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c[i][j] != 0 && i != j && d[i] != Rat(0) && d[j] == Rat(0)) {
          // d_i c_ij = d_j c_ji
          d[j] = d[i] * Rat(c[i][j], c[j][i]);
          changed = true;
        }
  }
  std::int64_t lcm_den = 1;
  for (auto& x : d) lcm_den = std::lcm(lcm_den, x.denominator());
  std::vector<std::int64_t> v(n);
  for (int i = 0; i < n; ++i) v[i] = (d[i] * lcm_den).numerator();
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(v[i] / g);
  return out;
}

}  // namespace

RootDatum RootDatum::parse(const std::string& label) {
  if (label.size() < 2) throw ConfigError("type label must look like 'A1', 'G2', ...");
  char t = label[0];
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw ConfigError("bad rank in type label '" + label + "'");
  }
  return RootDatum(t, rank);
}

RootDatum::RootDatum(char type_label, int rank) : type_(type_label), rank_(rank) {
  if (rank < 1 || rank > kDefaultRankCap)
    throw ConfigError("rank " + std::to_string(rank) + " out of range [1," +
                      std::to_string(kDefaultRankCap) + "]");
  cartan_ = cartan_matrix(type_, rank_);
  d_ = compute_symmetrizers(cartan_);

  // adjugate and determinant via rational elimination
  {
    int n = rank_;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = Rat(cartan_[i][j]);
      m[i][n + i] = Rat(1);
    }
    Rat det(1);
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && m[piv][col] == Rat(0)) ++piv;
      if (piv == n) throw ConfigError("singular Cartan matrix");
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      Rat inv = Rat(1) / m[col][col];
      for (auto& x : m[col]) x *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == Rat(0)) continue;
        Rat f = m[r][col];
        for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
      }
    }
    det_ = det.numerator() / det.denominator();
    adjugate_.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat e = m[i][n + j] * det;
        adjugate_[i][j] = e.numerator() / e.denominator();
      }
  }

  // simple roots: column j of the Cartan matrix
  simple_roots_.resize(rank_);
  for (int j = 0; j < rank_; ++j) {
    Weight a(rank_);
    for (int i = 0; i < rank_; ++i) a[i] = cartan_[i][j];
    simple_roots_[j] = a;
  }
  simple_coroots_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    Coroot c(rank_, 0);
    c[i] = 1;
    simple_coroots_[i] = c;
  }
  rho_.assign(rank_, 1);

  // positive roots by closure under root strings
  std::map<std::vector<int>, int> index_of;  // root-basis coords -> index
  for (int j = 0; j < rank_; ++j) {
    std::vector<int> rb(rank_, 0);
    rb[j] = 1;
    index_of[rb] = j;
    positive_roots_rb_.push_back(rb);
  }
  for (std::size_t head = 0; head < positive_roots_rb_.size(); ++head) {
    std::vector<int> gamma = positive_roots_rb_[head];
    for (int i = 0; i < rank_; ++i) {
      // q = length of the downward alpha_i-string through gamma
      int q = 0;
      {
        std::vector<int> down = gamma;
        while (true) {
          down[i] -= 1;
          bool neg_simple = false;
          if (down[i] < 0) neg_simple = true;
          if (neg_simple || !index_of.count(down)) break;
          ++q;
        }
      }
      // <gamma, alpha_i^vee>
      int pair = 0;
      for (int j = 0; j < rank_; ++j) pair += gamma[j] * cartan_[i][j];
      if (q - pair > 0) {
        std::vector<int> up = gamma;
        up[i] += 1;
        if (!index_of.count(up)) {
          index_of[up] = static_cast<int>(positive_roots_rb_.size());
          positive_roots_rb_.push_back(up);
        }
      }
    }
  }
  std::sort(positive_roots_rb_.begin(), positive_roots_rb_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  for (const auto& rb : positive_roots_rb_) {
    Weight f(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) f[i] += cartan_[i][j] * rb[j];
    positive_roots_.push_back(f);
  }

  // coroots: gamma^vee = sum_i a_i d_i / d_gamma alpha_i^vee
  for (std::size_t k = 0; k < positive_roots_rb_.size(); ++k) {
    const auto& a = positive_roots_rb_[k];
    const Weight& f = positive_roots_[k];
    std::int64_t norm2 = 0;  // (gamma, gamma) with short roots of length^2 = 2
    for (int j = 0; j < rank_; ++j) norm2 += static_cast<std::int64_t>(a[j]) * d_[j] * f[j];
    std::int64_t dg = norm2 / 2;
    Coroot cv(rank_);
    for (int i = 0; i < rank_; ++i) {
      std::int64_t num = static_cast<std::int64_t>(a[i]) * d_[i];
      if (num % dg != 0) throw ConfigError("internal: non-integral coroot");
      cv[i] = static_cast<int>(num / dg);
    }
    positive_coroots_.push_back(cv);
  }

  // highest coroot = coroot of the highest short root
  {
    int best = -1;
    std::int64_t best_h = -1;
    for (std::size_t k = 0; k < positive_roots_rb_.size(); ++k) {
      const auto& a = positive_roots_rb_[k];
      std::int64_t norm2 = 0;
      for (int j = 0; j < rank_; ++j) norm2 += static_cast<std::int64_t>(a[j]) * d_[j] * positive_roots_[k][j];
      if (norm2 != 2) continue;  // short roots only
      std::int64_t h = std::accumulate(a.begin(), a.end(), std::int64_t{0});
      if (h > best_h) {
        best_h = h;
        best = static_cast<int>(k);
      }
    }
    if (best < 0) throw ConfigError("internal: no short root found");
    highest_coroot_ = positive_coroots_[best];
  }
  coxeter_number_ = 1 + static_cast<int>(pairing(rho_, highest_coroot_));
}

std::int64_t RootDatum::pairing(const Weight& lambda, const Coroot& c) const {
  if (lambda.size() != static_cast<std::size_t>(rank_) || c.size() != static_cast<std::size_t>(rank_))
    throw DomainError("pairing: dimension mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<std::int64_t>(lambda[i]) * c[i];
  return s;
}

std::vector<std::int64_t> RootDatum::root_coords_scaled(const Weight& nu) const {
  std::vector<std::int64_t> c(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += adjugate_[i][j] * nu[j];
  return c;
}

std::int64_t RootDatum::inner_scaled(const Weight& lambda, const Weight& mu) const {
  auto c = root_coords_scaled(mu);
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += c[j] * d_[j] * lambda[j];
  return s;
}

std::int64_t RootDatum::height_scaled(const Weight& nu) const {
  auto c = root_coords_scaled(nu);
  std::int64_t s = 0;
  for (auto x : c) s += x;
  return s;
}

bool RootDatum::in_positive_root_span(const Weight& nu) const {
  auto c = root_coords_scaled(nu);
  for (auto x : c) {
    if (x < 0) return false;
    if (x % det_ != 0) return false;
  }
  return true;
}

bool RootDatum::is_dominant(const Weight& w) const {
  for (int c : w)
    if (c < 0) return false;
  return true;
}

Weight RootDatum::simple_reflect(int i, const Weight& w) const {
  Weight r = w;
  int c = w[i];
  for (int k = 0; k < rank_; ++k) r[k] -= c * cartan_[k][i];
  return r;
}

Weight RootDatum::dominant_normalize(const Weight& w) const {
  Weight v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i)
      if (v[i] < 0) {
        v = simple_reflect(i, v);
        moved = true;
      }
  }
  return v;
}

Weight RootDatum::dot_action(const WeylElement& w, const Weight& lambda) const {
  return w.apply(lambda + rho_) - rho_;
}

Weight RootDatum::simple_dot_reflect(int i, const Weight& lambda) const {
  return simple_reflect(i, lambda + rho_) - rho_;
}

std::optional<std::pair<Weight, int>> RootDatum::dominant_dot_normalize(const Weight& lambda) const {
  Weight v = lambda + rho_;
  int sign = 1;
  while (true) {
    int neg = -1, zero = -1;
    for (int i = 0; i < rank_; ++i) {
      if (v[i] < 0) {
        neg = i;
        break;
      }
      if (v[i] == 0) zero = i;
    }
    if (neg >= 0) {
      v = simple_reflect(neg, v);
      sign = -sign;
      continue;
    }
    if (zero >= 0) return std::nullopt;  // lambda + rho on a wall
    return std::make_pair(v - rho_, sign);
  }
}

std::vector<WeylElement> RootDatum::weyl_elements(long cap) const {
  std::vector<WeylElement> out;
  std::set<std::vector<std::vector<int>>> seen;
  WeylElement id;
  id.action.assign(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) id.action[i][i] = 1;
  out.push_back(id);
  seen.insert(id.action);
  std::deque<std::size_t> frontier{0};
  // reflection matrices
  std::vector<std::vector<std::vector<int>>> refl(rank_);
  for (int i = 0; i < rank_; ++i) {
    auto m = id.action;
    for (int k = 0; k < rank_; ++k) m[k][i] -= cartan_[k][i];
    refl[i] = m;
  }
  while (!frontier.empty()) {
    std::size_t cur = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < rank_; ++i) {
      const auto& w = out[cur];
      std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_, 0));
      for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b)
          for (int k = 0; k < rank_; ++k) m[a][b] += refl[i][a][k] * w.action[k][b];
      if (seen.insert(m).second) {
        WeylElement e;
        e.action = std::move(m);
        e.length = w.length + 1;
        e.word.reserve(w.word.size() + 1);
        e.word.push_back(i);
        e.word.insert(e.word.end(), w.word.begin(), w.word.end());
        out.push_back(std::move(e));
        if (static_cast<long>(out.size()) > cap)
          throw ResourceError("Weyl group exceeds cap " + std::to_string(cap));
        frontier.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

std::vector<Weight> RootDatum::orbit(const Weight& w) const {
  std::vector<Weight> out;
  std::set<Weight> seen;
  out.push_back(dominant_normalize(w));
  seen.insert(out[0]);
  for (std::size_t head = 0; head < out.size(); ++head) {
    Weight cur = out[head];
    for (int i = 0; i < rank_; ++i) {
      Weight nxt = simple_reflect(i, cur);
      if (seen.insert(nxt).second) out.push_back(std::move(nxt));
    }
  }
  return out;
}

}  // namespace frob
