#pragma once

#include <stdexcept>

namespace emverify {

/// A computation would exceed its configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emverify
