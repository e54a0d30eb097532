// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#ifndef FROB_WEIGHT_HPP
#define FROB_WEIGHT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frob {

// Integer coordinate vector in the fundamental-weight basis.
using Weight = std::vector<int>;

// Coroot in simple-coroot coordinates.
using Coroot = std::vector<int>;

inline Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight operator*(int n, const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = n * a[i];
  return r;
}

inline Weight operator-(const Weight& a) { return -1 * a; }

inline bool is_zero(const Weight& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

std::string to_string(const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int c : w) h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(c))) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace frob

#endif
