#pragma once

#include <stdexcept>
#include <string>

namespace lenfact {

enum class ErrorCode {
  kInvalidInput = 1,
  kEmptyGenerators,
  kNonPositivePuiseuxGenerator,
  kNotPointed,
  kElementNotInMonoid,
  kNotPLS,
  kBoundRequiredForInfiniteGroup,
  kOverflow,
  kAssertionFailed,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lenfact
