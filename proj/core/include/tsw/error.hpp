#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsw {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad graphs, bad destination sets,
// unparsable text, violated preconditions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A swap was requested on a vertex pair that is not an edge.
class NotAnEdge : public InvalidInput {
 public:
  NotAnEdge(int u, int v, std::size_t index = npos);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  int u() const { return u_; }
  int v() const { return v_; }
  // Position of the offending swap inside a sequence, or npos.
  std::size_t index() const { return index_; }

 private:
  int u_;
  int v_;
  std::size_t index_;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A solver hit one of its configured state/node/size caps. Never means
// "no solution".
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace tsw
