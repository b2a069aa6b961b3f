#pragma once

#include <stdexcept>
#include <string>

namespace ewsim {

/// Thrown when a physical precondition is violated (non-positive height,
/// superluminal speed, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a numerical routine cannot reach its requested accuracy.
/// Carries enough context to locate the failing sub-region.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed configuration or scenario input (strict parsing).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

}  // namespace ewsim
