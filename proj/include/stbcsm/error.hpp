#pragma once

#include <stdexcept>
#include <string>

namespace stbcsm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Modulation order not a power of two, below 2, or unsupported for the kind.
class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Raised by ZF construction when every singular value is below 1e-12.
// Callers redraw the channel.
class SingularChannelError : public Error {
 public:
  using Error::Error;
};

class NotBracketedError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  enum class Kind { UnreadableFile, UnknownKey, InvalidValue, MissingComponent, Unsupported };

  ConfigError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace stbcsm
