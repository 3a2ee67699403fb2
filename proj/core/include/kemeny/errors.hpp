#pragma once

#include <stdexcept>
#include <string>

namespace kemeny {

/// Thrown when an exhaustive routine is asked to exceed its configured cap.
class too_large_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kemeny
