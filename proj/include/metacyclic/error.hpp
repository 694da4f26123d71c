#pragma once

#include <stdexcept>
#include <string>

namespace metacyclic {

enum class ErrorKind {
  validation,  // bad input: non-unit, malformed sequence, invalid presentation
  budget,      // configured search or memory budget exceeded
  hypothesis,  // a theorem hypothesis required by the operation does not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace metacyclic
