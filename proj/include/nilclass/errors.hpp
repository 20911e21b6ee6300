// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace nilclass {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Scalars from incompatible rings were combined (e.g. two quadratic towers
// with different radicands, or a polynomial mixed with a quadratic value).
struct RingMismatch : Error {
  explicit RingMismatch(const std::string& msg) : Error("RingMismatch: " + msg) {}
};

// A polynomial was evaluated with an assignment that misses a variable.
struct MissingParameter : Error {
  explicit MissingParameter(const std::string& var)
      : Error("MissingParameter: no value for '" + var + "'") {}
};

// A basis change was requested with a singular matrix.
struct SingularChange : Error {
  explicit SingularChange(const std::string& msg) : Error("SingularChange: " + msg) {}
};

// Catalog parameters outside their stated domain.
struct InvalidParams : Error {
  explicit InvalidParams(const std::string& clause) : Error("InvalidParams: " + clause) {}
};

// An endomorphism claimed as almost-complex fails J^2 = -Id.
struct NotAlmostComplex : Error {
  explicit NotAlmostComplex(const std::string& msg) : Error("NotAlmostComplex: " + msg) {}
};

// A (0,2) monomial appeared where integrability forbids it.
struct IntegrabilityError : Error {
  explicit IntegrabilityError(const std::string& msg) : Error("IntegrabilityError: " + msg) {}
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error("ParseError: " + msg + " (line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

}  // namespace nilclass
