#pragma once

#include <stdexcept>
#include <string>

namespace doorsim {

// Numeric / physics fault (non-finite commands, diverged update). CLI exit 4.
class FaultError : public std::runtime_error {
 public:
  explicit FaultError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid scenario / config input. CLI exit 3.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class PerceptionError : public std::runtime_error {
 public:
  enum class Kind { InsufficientPoints, DegenerateCloud };
  PerceptionError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace doorsim
