#pragma once

#include <stdexcept>
#include <string>

namespace sle {

// Invalid simulation or run configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// API misuse: mismatched sample sets, aliasing violations, bad curve ids.
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

// Flow integration could not make progress near the driving point.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace sle
