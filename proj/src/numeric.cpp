#include "projlin/numeric.hpp"

#include "projlin/error.hpp"

namespace projlin {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kMultipleHeads: return "MultipleHeads";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kBadRoot: return "BadRoot";
    case ErrorKind::kInvalidVertex: return "InvalidVertex";
    case ErrorKind::kInvalidArrangement: return "InvalidArrangement";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kUnsupportedSize: return "UnsupportedSize";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kZeroExact: return "ZeroExact";
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::string format_rational(const Rational& value) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round(num * scale / den), half away from zero
  BigCount scaled = (2 * num * scale + den) / (2 * den);

  std::string text = scaled.str();
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits)) {
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) text.insert(0, "-");
  return text;
}

std::string format_count(const BigCount& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigCount factorial(std::uint64_t n) {
  BigCount result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace projlin
