#pragma once

#include <atomic>
#include <cstdint>

namespace holam {

/// Resource limits consulted by the normalizer, the finite semantics and every sweep
/// over a value space.
struct Limits {
  // Largest value space that may be enumerated or indexed, and the largest flat
  // value (cell count) that may be materialized.
  std::uint64_t space_budget = std::uint64_t{1} << 20;
  // Node/step budget for normalization and term enumeration.
  std::uint64_t node_budget = 1'000'000;
  // Cooperative cancellation flag polled by long sweeps.
  const std::atomic<bool>* cancel = nullptr;
};

/// Limits active on the calling thread. Defaults honour the HOLAM_BUDGET environment
/// variable for the space budget.
const Limits& current_limits();

/// Installs `limits` on the calling thread for the guard's lifetime.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& limits);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  const Limits* previous_;
  Limits limits_;
};

/// Throws Cancelled when the active cancellation flag is raised.
void check_cancelled();

}  // namespace holam
