#ifndef PHRASELM_MODEL_IO_H_
#define PHRASELM_MODEL_IO_H_

#include <iosfwd>
#include <string>

#include "phraselm/backoff_model.h"

namespace phraselm {

// Text model format, one file per model:
//   \order N     \mpl M     \lambda X     \mode word|phrase
//   \k-grams:  sections for k = 1..N, each record
//     log10prob <TAB> phrases <TAB> log10bow      (bow field optional)
//   with phrases rendered as space-joined words separated by the 0x1F
//   byte.  Phrase models carry one extra \word-unigrams: section for the
//   interpolation distribution.  Probabilities are printed with 17
//   significant digits, so write -> read reproduces every score exactly.
void WriteModel(const BackoffModel& model, std::ostream& out);
void WriteModelFile(const BackoffModel& model, const std::string& path);

BackoffModel ReadModel(std::istream& in);
BackoffModel ReadModelFile(const std::string& path);

}  // namespace phraselm

#endif  // PHRASELM_MODEL_IO_H_
