#ifndef GGT_ERROR_HPP_
#define GGT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ggt {

// Violated precondition of a library operation. The CLI maps this to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a ball or search would exceed its configured element budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ggt

#endif  // GGT_ERROR_HPP_
