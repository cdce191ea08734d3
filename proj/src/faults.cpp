#include "superyangian/faults.hpp"

#include <mutex>

namespace sy {

namespace {
std::mutex g_mu;
FaultHooks g_faults;
}  // namespace

FaultHooks current_faults() {
  std::lock_guard<std::mutex> lk(g_mu);
  return g_faults;
}

void set_faults([[maybe_unused]] const FaultHooks& f) {
#ifdef SUPERYANGIAN_FAULT_HOOKS
  std::lock_guard<std::mutex> lk(g_mu);
  g_faults = f;
#endif
}

bool fault_hooks_enabled() {
#ifdef SUPERYANGIAN_FAULT_HOOKS
  return true;
#else
  return false;
#endif
}

}  // namespace sy
