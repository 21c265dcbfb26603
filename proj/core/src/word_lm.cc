#include "phraselm/word_lm.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "phraselm/errors.h"
#include "phraselm/parallel.h"

namespace phraselm {

namespace {

int ResolveOrderLimit(const BackoffModel& model, int order_limit) {
  if (order_limit == 0) return model.order();
  if (order_limit < 1 || order_limit > model.order())
    throw UsageError("order limit must be in [1, model order]");
  return order_limit;
}

}  // namespace

ScoredSentence WordSentenceLogProb(const BackoffModel& model,
                                   const Sentence& sentence,
                                   int order_limit) {
  int n = ResolveOrderLimit(model, order_limit);
  std::size_t m = sentence.length();

  // units[0] is the bos phrase; units[1+i] is word i as a single-word phrase
  // (kUnknownPhrase when the word never occurs alone in training).
  std::vector<PhraseId> units(m + 1);
  units[0] = PhraseLexicon::kBosPhrase;
  for (std::size_t i = 0; i < m; ++i)
    units[1 + i] =
        model.lexicon()
            .Find(std::span<const WordId>(&sentence.tokens[i], 1))
            .value_or(kUnknownPhrase);

  double log_prob = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t history = std::min<std::size_t>(n - 1, i + 1);
    std::span<const PhraseId> context(&units[1 + i - history], history);
    UnitRef unit{units[1 + i],
                 std::span<const WordId>(&sentence.tokens[i], 1)};
    log_prob += model.LogStarProb(context, unit);
  }
  return ScoredSentence{log_prob, m};
}

double WordSentencePerplexity(const ScoredSentence& scored) {
  if (scored.token_count == 0)
    throw DomainError("perplexity undefined for an empty sentence");
  return std::pow(10.0,
                  -scored.log_prob / static_cast<double>(scored.token_count));
}

double WordTextPerplexity(const BackoffModel& model, const Corpus& corpus,
                          int order_limit, int threads) {
  if (corpus.word_count == 0)
    throw DomainError("perplexity undefined for an empty text");
  std::vector<double> log_probs(corpus.sentences.size(), 0.0);
  ParallelFor(corpus.sentences.size(), threads,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                  log_probs[i] =
                      WordSentenceLogProb(model, corpus.sentences[i],
                                          order_limit)
                          .log_prob;
              });
  double total = 0.0;
  for (double lp : log_probs) total += lp;
  return std::pow(10.0, -total / static_cast<double>(corpus.word_count));
}

}  // namespace phraselm
