#pragma once

#include <stdexcept>
#include <string>

namespace qgollnitz {

// Series conversion of a Laurent polynomial carrying a q^e term with e < 0.
struct NegativeExponent : std::domain_error {
  using std::domain_error::domain_error;
};

// Reciprocal requested for a series whose constant term is not +1 or -1.
struct NonUnitConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

// q-Pochhammer symbol requested with a negative length.
struct NegativeLength : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotType1 : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidImage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qgollnitz
