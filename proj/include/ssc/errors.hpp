#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ssc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (arity, algebra or scheme differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class NoLeadingTerm : public Error {
 public:
  NoLeadingTerm() : Error("zero polynomial has no leading term") {}
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

/// Parse failure; `offset` is a byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset), reason_(what) {}
  std::size_t offset() const noexcept { return offset_; }
  /// The message without the position prefix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

class UnknownVariable : public Error {
 public:
  UnknownVariable(std::size_t offset, const std::string& name)
      : Error("unknown variable '" + name + "' at offset " + std::to_string(offset)),
        offset_(offset), name_(name) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

/// A user-supplied name uses the '#' prefix reserved for auxiliaries.
class ReservedName : public Error {
 public:
  explicit ReservedName(const std::string& what) : Error(what) {}
  ReservedName(std::size_t offset, const std::string& name)
      : Error("reserved name '" + name + "' at offset " + std::to_string(offset)),
        offset_(offset), name_(name) {}
  /// Position in parsed text, when the name came from a parser.
  std::optional<std::size_t> offset() const noexcept { return offset_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::optional<std::size_t> offset_;
  std::string name_;
};

class IllDefinedMap : public Error {
 public:
  using Error::Error;
};

class NotClosedImmersion : public Error {
 public:
  using Error::Error;
};

class MissingGlue : public Error {
 public:
  using Error::Error;
};

class InvalidMorphism : public Error {
 public:
  using Error::Error;
};

}  // namespace ssc
