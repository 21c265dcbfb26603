#ifndef PHRASELM_LOGMATH_H_
#define PHRASELM_LOGMATH_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace phraselm {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

inline double Log10(double p) { return std::log10(p); }
inline double Exp10(double lp) { return std::pow(10.0, lp); }

// log10(10^a + 10^b) without overflow.
inline double LogAdd10(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log10(1.0 + std::pow(10.0, lo - hi));
}

// log10 of a sum of probabilities given in log10.  Shifts by the maximum
// before exponentiating.  An empty span sums to zero probability.
inline double LogSumExp10(std::span<const double> args) {
  if (args.empty()) return kLogZero;
  double hi = *std::max_element(args.begin(), args.end());
  if (hi == kLogZero) return kLogZero;
  double sum = 0.0;
  for (double a : args) sum += std::pow(10.0, a - hi);
  return hi + std::log10(sum);
}

}  // namespace phraselm

#endif  // PHRASELM_LOGMATH_H_
