#pragma once

#include <stdexcept>
#include <string>

namespace sumreg {

// Input violates a documented precondition (too few elements, gcd != 1,
// n < 4 for analysis entry points, ...).
class input_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A query asked for a level beyond the computed window; the caller must
// size the table/level sets before asking.
class window_error : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// Two routes that must agree by theorem did not. Never expected; indicates
// an implementation bug, not bad input.
class invariant_violation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace sumreg
