#ifndef PHRASELM_WORD_LM_H_
#define PHRASELM_WORD_LM_H_

#include <cstdint>

#include "phraselm/backoff_model.h"
#include "phraselm/corpus.h"

namespace phraselm {

// A sentence's log10 probability plus its word count (sentinels excluded).
struct ScoredSentence {
  double log_prob = 0.0;
  std::uint64_t token_count = 0;
};

// Chain log10 probability of the sentence as a sequence of single-word units,
// each conditioned on up to order-1 preceding units with the bos sentinel in
// front: sum_i log P*(w_i | w_{i-n+1}..w_{i-1}). On a word-mode model P* is
// the plain backoff probability; on a phrase-mode model it includes the
// word-product interpolation, which makes this the all-singletons chain.
// order_limit 0 means the model's full order; otherwise it must lie in
// [1, model.order()].
ScoredSentence WordSentenceLogProb(const BackoffModel& model,
                                   const Sentence& sentence,
                                   int order_limit = 0);

// PPL(w_1^m) = P^(-1/m). Requires m >= 1.
double WordSentencePerplexity(const ScoredSentence& scored);

// Text perplexity 10^(-sum_s log P(s) / N) with N the total word count.
// Requires N >= 1. Sentence scores are computed in parallel but summed in
// sentence order, so the result does not depend on the thread count.
double WordTextPerplexity(const BackoffModel& model, const Corpus& corpus,
                          int order_limit = 0, int threads = 1);

}  // namespace phraselm

#endif  // PHRASELM_WORD_LM_H_
