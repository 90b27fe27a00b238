#ifndef LPS_ERRORS_HPP
#define LPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lps {

// Malformed input: bad JSON, bad schema, unparseable braid word or character.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition does not hold: dimension mismatch, zero
// polynomial where nonzero is required, mixed-sign entries, non-divisible
// pair, non-pure braid word.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric computation failed its certificate: root-finder non-convergence,
// cross-check disagreement, overflow in real evaluation.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lps

#endif  // LPS_ERRORS_HPP
