#pragma once

#include <compare>
#include <optional>
#include <string>

namespace emverify {

/// Minimal positive height: a non-negative integer, or infinity when no
/// character of positive height exists.
class MinHeight {
 public:
  MinHeight() = default;  // infinity
  explicit MinHeight(int value) : value_(value) {}

  static MinHeight infinity() { return MinHeight(); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const { return value_.value(); }

  /// "infinity" or the decimal value.
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }
  /// Text-table form; infinity prints as the symbol.
  std::string to_display() const { return value_ ? std::to_string(*value_) : "∞"; }

  friend bool operator==(const MinHeight&, const MinHeight&) = default;

 private:
  std::optional<int> value_;
};

}  // namespace emverify
