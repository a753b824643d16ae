#include "ctw/limits.hpp"

#include <atomic>

namespace ctw {

namespace {
std::atomic<std::size_t> g_max_dim{512};
std::atomic<std::size_t> g_cap{32};
}  // namespace

std::size_t max_module_dim() { return g_max_dim.load(std::memory_order_relaxed); }
void set_max_module_dim(std::size_t n) { g_max_dim.store(n, std::memory_order_relaxed); }
std::size_t default_cap() { return g_cap.load(std::memory_order_relaxed); }
void set_default_cap(std::size_t n) { g_cap.store(n, std::memory_order_relaxed); }

void check_module_dim(std::size_t dim, const char* what) {
  const std::size_t cap = max_module_dim();
  if (dim > cap)
    throw LimitError(std::string(what) + " of dimension " + std::to_string(dim) + " exceeds --max-dim " +
                     std::to_string(cap));
}

}  // namespace ctw
