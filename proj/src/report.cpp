#include "henselab/report.hpp"

namespace henselab {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::OutsideDomain: return "outside-hensel-domain";
  }
  return "?";
}

void Report::add(std::string id, VerdictStatus status, std::string witness) {
  verdicts.push_back(Verdict{std::move(id), status, std::move(witness)});
}

bool Report::all_pass() const {
  for (const auto& v : verdicts)
    if (v.status == VerdictStatus::Fail) return false;
  return true;
}

std::size_t Report::count(VerdictStatus s) const {
  std::size_t n = 0;
  for (const auto& v : verdicts)
    if (v.status == s) ++n;
  return n;
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& v : other.verdicts)
    verdicts.push_back(Verdict{prefix + v.id, v.status, v.witness});
}

}  // namespace henselab
