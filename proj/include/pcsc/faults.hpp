#pragma once

#include <atomic>

namespace pcsc {

// Deliberate defects used as negative controls for the fixture suite. Both are
// off unless a ScopedFault is alive.
struct FaultSwitches {
  std::atomic<bool> flip_pc_sign{false};
  std::atomic<bool> degenerate_ml_tiebreak{false};
};

inline FaultSwitches& faults() {
  static FaultSwitches switches;
  return switches;
}

enum class Fault { FlipPcSign, DegenerateMlTiebreak };

class ScopedFault {
 public:
  explicit ScopedFault(Fault f) : flag_(f == Fault::FlipPcSign ? faults().flip_pc_sign : faults().degenerate_ml_tiebreak) {
    previous_ = flag_.exchange(true);
  }
  ~ScopedFault() { flag_.store(previous_); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  std::atomic<bool>& flag_;
  bool previous_ = false;
};

}  // namespace pcsc
