#pragma once

#include <atomic>
#include <mutex>

#include "henselab/series.hpp"

namespace henselab {

/// Ambient registry of series generators. Entry i (1-based) is the Laurent
/// expansion of e_i; the default family is e_i = exp(t^i), which keeps the
/// generators algebraically independent over Q(t). Entries are append-only
/// within a scenario; reset() reinitializes the ambient state between
/// scenarios and tests.
class GeneratorRegistry {
 public:
  static GeneratorRegistry& instance();

  void reset(int count);
  int count() const { return count_.load(std::memory_order_acquire); }

  /// Mints a fresh generator and returns its index.
  int mint();

  /// Series of e_index modulo t^prec. Deterministic across calls.
  TruncSeries series(int index, long prec) const;

  bool registered(int index) const { return index >= 1 && index <= count(); }

 private:
  GeneratorRegistry() = default;
  std::atomic<int> count_{0};
  std::mutex mint_mutex_;
};

/// Adaptive-precision cap; initialized from HENSELAB_PREC_MAX (default 4096).
long precision_cap();
void set_precision_cap(long cap);

}  // namespace henselab
