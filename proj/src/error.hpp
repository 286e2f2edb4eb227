#pragma once

#include <stdexcept>
#include <string>

namespace marsbn {

// Single error type for the whole core. The kind maps onto the C API status
// codes (and from there onto CLI exit codes).
class Error : public std::runtime_error {
 public:
  enum class Kind { Invalid, Io, Parse };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

  static Error invalid(const std::string& msg) { return Error(Kind::Invalid, msg); }
  static Error io(const std::string& msg) { return Error(Kind::Io, msg); }
  static Error parse(const std::string& msg) { return Error(Kind::Parse, msg); }

 private:
  Kind kind_;
};

}  // namespace marsbn
