#pragma once
// Always-on invariant checks (survive NDEBUG): violations throw rather than
// silently continuing, since downstream results are meaningless after one.

#include <stdexcept>
#include <string>

namespace flatwall {
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};
}  // namespace flatwall

#define FW_CHECK(cond, msg)                                              \
  do {                                                                   \
    if (!(cond))                                                         \
      throw ::flatwall::invariant_error(std::string("invariant: ") + (msg)); \
  } while (0)
