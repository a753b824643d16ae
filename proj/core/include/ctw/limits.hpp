#pragma once

// Process-wide safety caps (module dimension and resolution length).

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctw {

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t max_module_dim();
void set_max_module_dim(std::size_t n);

/// Default resolution/tower length cap.
std::size_t default_cap();
void set_default_cap(std::size_t n);

/// Throws LimitError when dim exceeds max_module_dim().
void check_module_dim(std::size_t dim, const char* what);

}  // namespace ctw
