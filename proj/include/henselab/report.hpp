#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace henselab {

inline constexpr const char* kToolVersion = "henselab 0.1.0";

enum class VerdictStatus { Pass, Fail, OutsideDomain };

std::string to_string(VerdictStatus s);

/// One named check outcome. Failures always carry a concrete witness.
struct Verdict {
  std::string id;
  VerdictStatus status = VerdictStatus::Pass;
  std::string witness;
};

struct Report {
  std::string scenario;
  std::string kind;
  std::uint64_t seed = 0;
  long precision_cap = 0;
  int generators = 0;
  std::string version = kToolVersion;
  std::vector<Verdict> verdicts;

  void add(std::string id, VerdictStatus status, std::string witness);
  bool all_pass() const;
  std::size_t count(VerdictStatus s) const;
  void append(const Report& other, const std::string& prefix);
};

}  // namespace henselab
