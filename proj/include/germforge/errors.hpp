#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germforge {

/// Mathematical failure: infinite codimension, unsolvable transformation,
/// non-unit denominator and similar. The CLI maps these to exit code 1.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteCodimension : public MathError {
 public:
  explicit InfiniteCodimension(const std::string& what = "the ideal is of infinite codimension")
      : MathError(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace germforge
