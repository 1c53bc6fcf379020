#pragma once

#include <stdexcept>
#include <string>

namespace fdwpcn {

// A user can never accumulate the energy needed for its demand.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::size_t user, const std::string& what)
      : std::runtime_error(what), user_(user) {}
  std::size_t user() const noexcept { return user_; }

 private:
  std::size_t user_;
};

class MalformedScheduleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration requested for more users than it supports.
class TooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidParamsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fdwpcn
