#pragma once

#include <stdexcept>
#include <string>

namespace lzkit {

/// Invalid or inconsistent input: bad symbols, malformed streams, mismatched
/// alphabets, out-of-range parameters. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource guardrail was exceeded (enumeration or experiment
/// size). The CLI maps this to exit code 3.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lzkit
