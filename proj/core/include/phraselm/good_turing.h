#ifndef PHRASELM_GOOD_TURING_H_
#define PHRASELM_GOOD_TURING_H_

#include <cstdint>

#include "phraselm/count_table.h"

namespace phraselm {

// Expected count for a raw count r under Good-Turing re-estimation:
//   r == 0                            ->  N_1 / N_0
//   1 <= r <= gt_max, N_{r+1} > 0     ->  (r + 1) N_{r+1} / N_r
//   r > gt_max or N_{r+1} == 0        ->  r  (raw passthrough)
// Throws TrainError when N_r == 0 but N_{r+1} > 0 for r <= gt_max: the
// histogram has a hole where the formula needs a denominator.
double GoodTuringAdjust(const CountsOfCounts& coc, std::uint64_t r,
                        int gt_max = 5);

// Adjustment lookups for one n-gram order's histogram.
class DiscountTable {
 public:
  static constexpr int kDefaultGtMax = 5;

  explicit DiscountTable(const CountsOfCounts& coc, int gt_max = kDefaultGtMax);

  // GoodTuringAdjust for the queried r.
  double AdjustedCount(std::uint64_t r) const;

  // AdjustedCount with the estimation-side sanity cap: a non-discounting
  // histogram (r* >= r) falls back to the raw count, so per-context
  // probability mass can only shrink.
  double CappedCount(std::uint64_t r) const;

  // N_1 / N_0; 0 for an empty histogram.
  double unseen_mass() const { return unseen_mass_; }

  int gt_max() const { return gt_max_; }

 private:
  CountsOfCounts coc_;
  int gt_max_;
  double unseen_mass_;
};

}  // namespace phraselm

#endif  // PHRASELM_GOOD_TURING_H_
