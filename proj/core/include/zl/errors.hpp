#pragma once

#include <stdexcept>
#include <string>

namespace zl {

/// An operation was called outside its documented domain.  `constraint`
/// names the violated condition so front ends can report it verbatim.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string constraint, const std::string& detail)
      : std::invalid_argument(constraint + ": " + detail), constraint_(std::move(constraint)) {}

  [[nodiscard]] const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

}  // namespace zl
