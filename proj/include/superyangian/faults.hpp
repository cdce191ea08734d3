#pragma once

namespace sy {

/// Deliberate corruptions used to prove the checkers can fail. Engines copy the
/// current flags when constructed, so set them before building anything.
/// Without SUPERYANGIAN_FAULT_HOOKS the setters are no-ops.
struct FaultHooks {
  bool straighten_sign = false;  // flip the swap sign in PBW straightening
  bool psi_sign = false;         // negate odd-level images of the shift map
  bool gauss_d2 = false;         // perturb D_2 after Gauss decomposition
  bool recursion_sign = false;   // flip the sign in the E/F recursion check
};

FaultHooks current_faults();
void set_faults(const FaultHooks& f);
bool fault_hooks_enabled();

}  // namespace sy
