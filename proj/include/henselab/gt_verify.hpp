#pragma once

#include <cstdint>

#include "henselab/hensel.hpp"
#include "henselab/report.hpp"
#include "henselab/topology.hpp"

namespace henselab {

/// Coefficient threshold s for the root axiom: whenever v(alpha_i) >= s and
/// v(D(alpha_i)) >= s for all i and all D, the lifted root satisfies
/// v(beta + 1) >= U.radius and v(D(beta)) >= V.radius. The ultrametric Newton
/// bound v(beta + 1) >= min_i v(alpha_i) and the root-derivative quotient
/// (unit denominator) make s = max(1, U.radius, V.radius) sound; tests
/// validate it by the sampling oracle.
long gt_threshold(int d, const Ball& u, const Ball& v, const std::vector<Derivation>& ds);

struct GtVerifyOptions {
  std::vector<std::pair<long, long>> radii = {{1, 1}, {2, 2}, {3, 3}};
  long residual_prec = 16;
  bool inject_outside_domain = false;
};

/// Samples coefficient tuples at the synthesized threshold for each degree
/// d <= d_max and ball pair, lifts roots, and asserts residual, simplicity,
/// and the U/V memberships for every refining derivation.
Report verify_gt_henselian(const TopologyDesc& top, int d_max, int samples, std::uint64_t seed,
                           const GtVerifyOptions& opts = {});

}  // namespace henselab
