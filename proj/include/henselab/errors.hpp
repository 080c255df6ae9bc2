#pragma once

#include <stdexcept>
#include <string>

namespace henselab {

// Raised when an adaptive series computation hits the precision cap without
// reaching a decision. Never converted into a silent answer.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what)
      : std::runtime_error("precision exhausted: " + what) {}
};

// A search operation ran out of candidates.
class NoWitnessFound : public std::runtime_error {
 public:
  explicit NoWitnessFound(const std::string& what)
      : std::runtime_error("no witness found: " + what) {}
};

// Polynomial coefficients violate the lifting domain v(alpha_i) >= 1.
class OutsideHenselDomain : public std::runtime_error {
 public:
  explicit OutsideHenselDomain(const std::string& what)
      : std::runtime_error("outside hensel domain: " + what) {}
};

// An operation restricted to symbolic elements received an analytic one.
class UnsupportedTier : public std::runtime_error {
 public:
  explicit UnsupportedTier(const std::string& what)
      : std::runtime_error("unsupported tier: " + what) {}
};

// A chosen evaluation basis produced a singular matrix.
class BadBasisChoice : public std::runtime_error {
 public:
  explicit BadBasisChoice(const std::string& what)
      : std::runtime_error("bad basis choice: " + what) {}
};

}  // namespace henselab
