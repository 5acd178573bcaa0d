#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerhg {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (graph6 lines, hypergraph files, construction
// expressions). Carries the byte offset of the first offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A structural invariant of a Graph or Hypergraph does not hold.
class ValidationError : public Error {
 public:
  enum class Kind {
    kLoop,
    kVertexOutOfRange,
    kDuplicateEdge,
    kEmptyEdge,
    kWrongEdgeSize,
  };

  ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// A caller-supplied parameter violates a documented precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The request exceeds a design bound (vertex capacity, enumeration order,
// graph6 order range).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An exact search ran out of its node budget. The solver never returns an
// unverified value; it throws this instead.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Missing or inconsistent configuration (e.g. catalog file unavailable).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace powerhg
