#pragma once

#include <stdexcept>
#include <string>

namespace balidx {

// Every error carries the process exit status the CLI reports for it.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
};

class ParseError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

// Degree mismatch, out-of-range vertex, violated precondition.
class DomainError : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class CapExceeded : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class UndefinedRatio : public Error {
public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

} // namespace balidx
