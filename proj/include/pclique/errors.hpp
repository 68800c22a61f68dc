#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pclique {

// Base class for every error the library reports. code() is the short,
// greppable tag the CLI prints as `error[<code>]: ...`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string_view code() const noexcept = 0;
};

// Caller violated a precondition (bad argument, wrong dimension, k out of range).
class UsageError : public Error {
 public:
  using Error::Error;
  std::string_view code() const noexcept override { return "usage"; }
};

// Parameters outside the model's domain: r >= 1/4, ill-posed (k, mu) pairs,
// arguments outside a special function's domain.
class ModelDomainError : public Error {
 public:
  using Error::Error;
  std::string_view code() const noexcept override { return "domain"; }
};

// A sampled instance cannot support the request (e.g. k > N).
class InstanceError : public Error {
 public:
  using Error::Error;
  std::string_view code() const noexcept override { return "instance"; }
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::string_view code() const noexcept override { return "parse"; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pclique
