#include "phraselm/good_turing.h"

#include <string>

#include "phraselm/errors.h"

namespace phraselm {

double GoodTuringAdjust(const CountsOfCounts& coc, std::uint64_t r,
                        int gt_max) {
  if (r == 0) {
    if (coc.n0 == 0) return 0.0;
    return static_cast<double>(coc.Nr(1)) / static_cast<double>(coc.n0);
  }
  if (r > static_cast<std::uint64_t>(gt_max)) return static_cast<double>(r);
  std::uint64_t nr = coc.Nr(r);
  std::uint64_t nr1 = coc.Nr(r + 1);
  if (nr1 == 0) return static_cast<double>(r);
  if (nr == 0)
    throw TrainError("count-of-counts histogram undefined at r=" +
                     std::to_string(r));
  return static_cast<double>(r + 1) * static_cast<double>(nr1) /
         static_cast<double>(nr);
}

DiscountTable::DiscountTable(const CountsOfCounts& coc, int gt_max)
    : coc_(coc),
      gt_max_(gt_max),
      unseen_mass_(GoodTuringAdjust(coc, 0, gt_max)) {}

double DiscountTable::AdjustedCount(std::uint64_t r) const {
  // Evaluated per queried r: a histogram hole only matters for counts that
  // actually occur.
  return GoodTuringAdjust(coc_, r, gt_max_);
}

double DiscountTable::CappedCount(std::uint64_t r) const {
  double adjusted = AdjustedCount(r);
  if (r >= 1 && adjusted >= static_cast<double>(r))
    return static_cast<double>(r);
  return adjusted;
}

}  // namespace phraselm
