#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ring/table validation.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

class AssociativityViolation : public Error {
 public:
  AssociativityViolation(int a, int b, int c, const std::string& what)
      : Error(what), a(a), b(b), c(c) {}
  int a, b, c;  // witness triple, element ranks
};

class DistributivityViolation : public Error {
 public:
  DistributivityViolation(int a, int b, int c, bool left, const std::string& what)
      : Error(what), a(a), b(b), c(c), left(left) {}
  int a, b, c;
  bool left;  // true: a(b+c) != ab+ac, false: (a+b)c != ac+bc
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

// Dominating-set construction.
class NotGeneratingSet : public Error {
 public:
  using Error::Error;
};

class DominationCheckFailed : public Error {
 public:
  using Error::Error;
};

// Verification failures.  These signal either an implementation bug or a
// genuine counterexample to a proved statement; callers must not swallow
// them silently.
class IdentityViolated : public Error {
 public:
  using Error::Error;
};

class BoundViolated : public Error {
 public:
  BoundViolated(std::string bound_id, const std::string& what)
      : Error(what), bound_id(std::move(bound_id)) {}
  std::string bound_id;
};

class CounterexampleFound : public Error {
 public:
  using Error::Error;
};

class ConsistencyViolated : public Error {
 public:
  using Error::Error;
};

class TheoremViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace ncg
