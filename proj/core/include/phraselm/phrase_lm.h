#ifndef PHRASELM_PHRASE_LM_H_
#define PHRASELM_PHRASE_LM_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phraselm/backoff_model.h"
#include "phraselm/corpus.h"

namespace phraselm {

// A segmentation of an m-word sentence into consecutive phrases, encoded as
// the boundary tuple 0 = b[0] < b[1] < ... < b[J] = m with every gap at most
// mpl. Phrase j covers words [b[j-1], b[j]).
struct Segmentation {
  std::vector<int> boundaries;

  int phrase_count() const {
    return static_cast<int>(boundaries.size()) - 1;
  }
};

// All segmentations of an m-word sentence under the phrase-length limit, in
// lexicographic boundary order. m = 0 yields the single empty segmentation.
std::vector<Segmentation> EnumerateSegmentations(int m, int mpl);

// Number of segmentations without materializing them.
std::uint64_t CountSegmentations(int m, int mpl);

// Chain score of one segmentation: log10 prod_j P*(p_j | up to n-1 preceding
// phrases, bos phrase in front).
struct PhraseScore {
  double log_prob = 0.0;
  int phrase_count = 0;
};

enum class PhraseMode { kSum, kMax };

// How the max model picks its segmentation: the per-phrase-perplexity argmin
// (score^(-1/J)), or the raw-probability argmax.
enum class MaxSelectRule { kMinPerplexity, kMaxProbability };

struct ScoreOptions {
  int order_limit = 0;            // 0 = model's full order
  int max_sentence_length = 20;   // refuse longer sentences
  MaxSelectRule rule = MaxSelectRule::kMinPerplexity;
};

struct PhraseSentenceResult {
  PhraseMode mode = PhraseMode::kSum;
  double log_prob = 0.0;
  std::uint64_t num_segmentations = 0;  // K
  int best_phrase_count = 0;            // J of the chosen segmentation (max)
  std::size_t best_index = 0;           // i0 in enumeration order (max)
};

// Scores one explicit segmentation. Throws DomainError when the boundaries
// are not a valid segmentation of this sentence under the model's mpl.
PhraseScore ScoreSegmentation(const BackoffModel& model,
                              const Sentence& sentence,
                              const Segmentation& seg, int order_limit = 0);

// Sum model: P = (1/K) * sum_i P(sentence, S_i), accumulated as a
// log-sum-exp over every segmentation chain. Throws SentenceTooLongError
// past the length cap.
PhraseSentenceResult SumModelProb(const BackoffModel& model,
                                  const Sentence& sentence,
                                  const ScoreOptions& options = {});

// Max model: picks i0 by the selection rule (default: minimize the
// per-segmentation perplexity, i.e. maximize log_prob/J; ties keep the
// lexicographically first boundary tuple) and returns that segmentation's
// chain probability with no 1/K factor.
PhraseSentenceResult MaxModelProb(const BackoffModel& model,
                                  const Sentence& sentence,
                                  const ScoreOptions& options = {});

// Sentence perplexity: sum mode 10^(-log_prob/m), max mode
// 10^(-log_prob/J_best). Throws DomainError when the exponent denominator
// is zero.
double PhraseSentencePerplexity(const PhraseSentenceResult& result,
                                std::uint64_t m);

// Text perplexity. Sum mode divides by the total word count N; max mode
// divides by the total phrase count of the selected segmentations. Sentences
// are scored in parallel and folded in sentence order.
double PhraseTextPerplexity(const BackoffModel& model, const Corpus& corpus,
                            PhraseMode mode, const ScoreOptions& options = {},
                            int threads = 1);

}  // namespace phraselm

#endif  // PHRASELM_PHRASE_LM_H_
