#pragma once

#include <stdexcept>
#include <string>

namespace swingseq {

// Invalid configuration or an unsatisfiable request (bad fold count,
// out-of-range freeze depth, unrealizable swing profile, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent data encountered at runtime (unreadable files,
// mismatched sample pairings, degenerate inputs).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swingseq
