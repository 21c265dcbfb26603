#ifndef PHRASELM_NBEST_H_
#define PHRASELM_NBEST_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "phraselm/backoff_model.h"
#include "phraselm/phrase_lm.h"

namespace phraselm {

// One candidate translation. Wire format, one per line:
//   segment_id ||| token token token ||| decoder_score
// with " ||| " as the field separator and the decoder score optional.
struct NBestEntry {
  int segment_id = 0;
  std::vector<std::string> hypothesis;  // nonempty token list
  std::optional<double> decoder_score;
};

// Entries grouped by segment. Segments appear in order of first appearance
// in the input; entries keep file order, which is their decoder rank.
struct NBestSegment {
  int segment_id = 0;
  std::vector<NBestEntry> entries;
};

struct NBestList {
  std::vector<NBestSegment> segments;
  std::size_t total_entries = 0;
};

NBestList ParseNBest(std::istream& in);
NBestList ParseNBestFile(const std::string& path);

enum class RerankMode { kWord, kSum, kMax };

// LM score for one entry. word_fallback marks hypotheses past the phrase
// length cap, which are scored as all-singleton chains instead.
struct RescoredEntry {
  double lm_log_prob = 0.0;
  bool word_fallback = false;
};

// Scores every hypothesis under the model with the requested sentence
// probability (word chain, sum model, or max model). Entries are scored in
// parallel; output is indexed [segment][entry].
std::vector<std::vector<RescoredEntry>> Rescore(
    const BackoffModel& model, const NBestList& nbest, RerankMode mode,
    const ScoreOptions& options = {}, int threads = 1);

struct SelectionOptions {
  // When set, rank by alpha * decoder_score + (1 - alpha) * lm_log_prob
  // instead of the LM score alone. Every entry must then carry a decoder
  // score.
  std::optional<double> combine_alpha;
};

// Picks the best-scoring entry per segment; ties keep the earlier rank.
// Returns the chosen entry index for each segment.
std::vector<std::size_t> SelectBest(
    const NBestList& nbest,
    const std::vector<std::vector<RescoredEntry>>& scores,
    const SelectionOptions& options = {});

}  // namespace phraselm

#endif  // PHRASELM_NBEST_H_
