#pragma once

#include <stdexcept>
#include <string>

namespace zrnet {

// Error kinds map one-to-one onto the C API status codes.
enum class ErrorKind {
  domain,
  shape,
  config,
  contract,
  state,
  topology,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw_error(kind, msg);
}

}  // namespace zrnet
