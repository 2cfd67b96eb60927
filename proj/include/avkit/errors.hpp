#pragma once

#include <stdexcept>
#include <string>

namespace avkit {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad k, bad threshold, ...).
/// The CLI maps these to exit code 2.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Where in the input a data error was found. Empty members are omitted from
/// the rendered message.
struct ErrorContext {
  std::string file;
  std::string record;
  std::string field;
};

/// Problems with evaluation data. The CLI maps these to exit code 1.
class DataError : public Error {
 public:
  DataError(std::string kind, const std::string& detail, ErrorContext ctx = {});

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const ErrorContext& context() const noexcept { return ctx_; }

 private:
  std::string kind_;
  std::string detail_;
  ErrorContext ctx_;
};

class IoError : public DataError {
 public:
  explicit IoError(const std::string& detail, ErrorContext ctx = {})
      : DataError("io", detail, std::move(ctx)) {}
};

/// Input is not parseable (bad JSON, malformed reference string).
class SyntaxError : public DataError {
 public:
  explicit SyntaxError(const std::string& detail, ErrorContext ctx = {})
      : DataError("syntax", detail, std::move(ctx)) {}
};

class SchemaVersionError : public DataError {
 public:
  explicit SchemaVersionError(const std::string& detail, ErrorContext ctx = {})
      : DataError("schema-version", detail, std::move(ctx)) {}
};

/// Missing field or wrong JSON type.
class SchemaError : public DataError {
 public:
  explicit SchemaError(const std::string& detail, ErrorContext ctx = {})
      : DataError("schema", detail, std::move(ctx)) {}
};

/// A domain-type invariant does not hold.
class InvariantError : public DataError {
 public:
  explicit InvariantError(const std::string& detail, ErrorContext ctx = {})
      : DataError("invariant", detail, std::move(ctx)) {}

 protected:
  InvariantError(std::string kind, const std::string& detail, ErrorContext ctx)
      : DataError(std::move(kind), detail, std::move(ctx)) {}
};

class DimensionError : public InvariantError {
 public:
  explicit DimensionError(const std::string& detail, ErrorContext ctx = {})
      : InvariantError("dimension", detail, std::move(ctx)) {}
};

}  // namespace avkit
