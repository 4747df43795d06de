#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbranch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { Malformed, OutOfRange, Loop };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// Raised when an exact algorithm is asked to run above its configured size.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t size, std::size_t limit)
      : Error(what + ": size " + std::to_string(size) + " exceeds limit " + std::to_string(limit)),
        size_(size),
        limit_(limit) {}
  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

enum class DecompositionErrorKind { NotATree, DegreeTooHigh, LeafMapNotBijective, UnknownEdge, Overlap };

class DecompositionError : public Error {
 public:
  DecompositionError(DecompositionErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  DecompositionErrorKind kind() const noexcept { return kind_; }

 private:
  DecompositionErrorKind kind_;
};

// Something that a proven invariant rules out happened; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fbranch
