#pragma once

#include <stdexcept>
#include <string>

namespace nearvec {

// Domain failure: invalid input, violated precondition, arithmetic fault.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace nearvec
