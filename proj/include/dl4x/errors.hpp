#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dl4x {

// Base of every error raised by the reasoner. `InputError`s map to CLI exit
// status 2, `ResourceLimit` to exit status 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedCoding : public InputError {
 public:
  MalformedCoding(std::size_t position, std::string expected)
      : InputError("malformed coding at offset " + std::to_string(position) +
                   ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class XmlError : public InputError {
 public:
  XmlError(std::size_t line, const std::string& message)
      : InputError("XML error at line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedAxiom : public InputError {
 public:
  UnsupportedAxiom(std::string kind, std::string location)
      : InputError("unsupported axiom " + kind + " (" + location + ")"),
        kind_(std::move(kind)),
        location_(std::move(location)) {}

  const std::string& kind() const { return kind_; }
  const std::string& location() const { return location_; }

 private:
  std::string kind_;
  std::string location_;
};

class UnknownName : public InputError {
 public:
  explicit UnknownName(const std::string& name)
      : InputError("undeclared name: " + name) {}
};

class NotAConcept : public InputError {
 public:
  using InputError::InputError;
};

class NotARole : public InputError {
 public:
  using InputError::InputError;
};

class InvalidStatement : public InputError {
 public:
  using InputError::InputError;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace dl4x
