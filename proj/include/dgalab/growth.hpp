#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace dgalab {

// Tail behaviour of a non-negative integer sequence (Betti or Bass numbers).
// root_estimate = (term_N)^(1/N) is the single floating-point number the
// library produces; everything feeding it stays exact.
struct GrowthReport {
  // smallest i0 >= 1 with term_i >= 2 * term_{i-1} for every i in [i0, N]
  std::optional<std::size_t> ratio_threshold;
  double root_estimate = 0.0;
  // observed: nondecreasing on the back half and strictly larger at the end
  bool unbounded = false;
  // the sequence ends in zeros (finite projective/injective dimension)
  bool finite_dimension = false;
};

GrowthReport growth_report(const std::vector<std::size_t>& seq);

}  // namespace dgalab
