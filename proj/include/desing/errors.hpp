#pragma once

#include <stdexcept>
#include <string>

namespace desing {

// Bad input: malformed data, violated preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Point lies on a singular hyperplane or outside the region of a backend.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RegionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested tolerance not reached.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

// An exact result violated a structural property (e.g. rationality).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace desing
