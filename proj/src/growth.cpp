#include "dgalab/growth.hpp"

#include <cmath>

#include "dgalab/errors.hpp"

namespace dgalab {

GrowthReport growth_report(const std::vector<std::size_t>& seq) {
  if (seq.empty()) throw InputError("growth report needs at least one term");
  GrowthReport rep;
  const std::size_t last = seq.size() - 1;

  if (seq[last] == 0) {
    rep.finite_dimension = true;
    return rep;  // zero tail: no ratios, no root, not unbounded
  }

  std::size_t i0 = last + 1;
  for (std::size_t i = last; i >= 1; --i) {
    if (seq[i] >= 2 * seq[i - 1]) i0 = i;
    else break;
  }
  if (i0 <= last) rep.ratio_threshold = i0;

  rep.root_estimate =
      last == 0 ? static_cast<double>(seq[0])
                : std::pow(static_cast<double>(seq[last]), 1.0 / static_cast<double>(last));

  const std::size_t mid = (last + 1) / 2;
  bool monotone = true;
  for (std::size_t i = mid; i <= last && i >= 1; ++i)
    if (seq[i] < seq[i - 1]) monotone = false;
  rep.unbounded = monotone && seq[last] > seq[mid > 0 ? mid - 1 : 0];
  return rep;
}

}  // namespace dgalab
