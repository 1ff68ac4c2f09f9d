#pragma once

#include <stdexcept>
#include <string>

namespace pnt {

// Precondition violated by the caller: bad order, index out of range, a <= 0, ...
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Zero table is malformed (non-numeric token, ordinates out of order).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class format_error : public parse_error {
 public:
  using parse_error::parse_error;
};

// Requested a height T beyond the last ingested ordinate.
class out_of_data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature did not reach its tolerance within the refinement budget.
class numeric_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sieve cache could not be read or failed validation.
class cache_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pnt
