// Exception types shared across the library.

#ifndef DEA_ERRORS_HPP
#define DEA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dea {

// Malformed input: bad dimensions, out-of-range indices, violated
// preconditions. The message names the offending entity where possible.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The solver ran out of iterations or an optimality/feasibility
// certificate failed to verify.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV or schema text that cannot be parsed. Carries a human-readable
// location ("row 3, column 'output:score'") inside the message.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dea

#endif  // DEA_ERRORS_HPP
