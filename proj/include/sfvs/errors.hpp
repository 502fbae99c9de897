#pragma once

#include <stdexcept>
#include <string>

namespace sfvs {

// Base for every recoverable failure the library reports. Internal
// invariant violations (formula transcription bugs, corrupt tables) throw
// std::logic_error instead and are never expected in a correct build.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file syntax, out-of-range ids, invalid models.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Host tree has at most two nodes, so no non-leaf root exists.
class TrivialModel : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Model has a subtree with more than one leaf where rooted paths are needed.
class NotRootedPath : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A table or search budget was exhausted.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sfvs
