#pragma once

#include <stdexcept>
#include <string>

namespace bz {

// Base class. Everything the library throws on purpose derives from this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document (JSON / TOML payload). `where` is a path like
// "orbits[3].kind".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// An engine was handed data violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A public invariant came out with a non-integral coefficient.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

}  // namespace bz
