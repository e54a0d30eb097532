// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 frobctl developers

#ifndef FROB_ERRORS_HPP
#define FROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frob {

// Invalid type/rank combination or malformed configuration.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Input violates an operation's domain (non-dominant weight where one is
// required, mismatched root data, non-W-invariant character, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (Weyl group size, path model size, ...).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frob

#endif
