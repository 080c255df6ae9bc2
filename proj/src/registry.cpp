#include "henselab/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace henselab {

GeneratorRegistry& GeneratorRegistry::instance() {
  static GeneratorRegistry reg;
  return reg;
}

void GeneratorRegistry::reset(int count) {
  if (count < 0) throw std::invalid_argument("registry: negative count");
  std::lock_guard<std::mutex> lock(mint_mutex_);
  count_.store(count, std::memory_order_release);
}

int GeneratorRegistry::mint() {
  std::lock_guard<std::mutex> lock(mint_mutex_);
  int next = count_.load(std::memory_order_relaxed) + 1;
  count_.store(next, std::memory_order_release);
  return next;
}

TruncSeries GeneratorRegistry::series(int index, long prec) const {
  if (!registered(index))
    throw std::invalid_argument("registry: unregistered generator e" + std::to_string(index));
  // exp(t^index) = sum_k t^(index*k) / k!
  std::vector<Rat> coeffs(static_cast<size_t>(std::max<long>(prec, 0)), Rat(0));
  Rat invfac(1);
  for (long k = 0; static_cast<long>(index) * k < prec; ++k) {
    if (k > 0) invfac /= Rat(k);
    coeffs[static_cast<size_t>(index * k)] = invfac;
  }
  return TruncSeries(0, std::move(coeffs), prec);
}

namespace {

long initial_cap() {
  if (const char* env = std::getenv("HENSELAB_PREC_MAX")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 16) return v;
  }
  return 4096;
}

std::atomic<long>& cap_storage() {
  static std::atomic<long> cap{initial_cap()};
  return cap;
}

}  // namespace

long precision_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_precision_cap(long cap) {
  if (cap < 16) throw std::invalid_argument("precision cap must be >= 16");
  cap_storage().store(cap, std::memory_order_relaxed);
}

}  // namespace henselab
