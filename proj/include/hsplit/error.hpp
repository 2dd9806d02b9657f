#ifndef HSPLIT_ERROR_HPP
#define HSPLIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsplit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCut : public Error {
 public:
  using Error::Error;
};

class InvalidHypergraph : public Error {
 public:
  using Error::Error;
};

class MissingId : public Error {
 public:
  using Error::Error;
};

class TrimTargetLacksVertex : public Error {
 public:
  using Error::Error;
};

class MergeNotAlmostDisjoint : public Error {
 public:
  using Error::Error;
};

// Bad connectivity query: equal endpoints, non-terminal endpoint, etc.
class InvalidQuery : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public InvalidQuery {
 public:
  using InvalidQuery::InvalidQuery;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant. Seeing one of these means a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// An operation log entry that could not be applied.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t index, const std::string& what)
      : Error("operation " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace hsplit

#endif  // HSPLIT_ERROR_HPP
