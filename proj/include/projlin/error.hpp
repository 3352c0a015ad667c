#ifndef PROJLIN_ERROR_HPP_
#define PROJLIN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace projlin {

enum class ErrorKind {
  kCycleDetected,
  kMultipleHeads,
  kDisconnected,
  kBadRoot,
  kInvalidVertex,
  kInvalidArrangement,
  kSizeMismatch,
  kUnsupportedSize,
  kOutOfRange,
  kCapExceeded,
  kZeroExact,
  kMalformedLine,
  kParseError,
};

// Name used on stderr by the CLI and in skip records ("CycleDetected", ...).
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace projlin

#endif  // PROJLIN_ERROR_HPP_
