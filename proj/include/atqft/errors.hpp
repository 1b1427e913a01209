#pragma once

#include <stdexcept>
#include <string>

namespace atqft {

// Every library failure derives from Error so the CLI can map it to an exit
// code in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquareError : public Error {
 public:
  using Error::Error;
};

class NonSymmetricError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class ComplexInvalidError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class OrderOverflowError : public Error {
 public:
  using Error::Error;
};

class NotCoprimeError : public Error {
 public:
  NotCoprimeError(long long p, long long q)
      : Error("L(" + std::to_string(p) + "," + std::to_string(q) +
              "): p and q are not coprime"),
        p_(p),
        q_(q) {}
  long long p() const { return p_; }
  long long q() const { return q_; }

 private:
  long long p_;
  long long q_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : Error(what), position_(std::string::npos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace atqft
