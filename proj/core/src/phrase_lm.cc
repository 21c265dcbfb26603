#include "phraselm/phrase_lm.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "phraselm/errors.h"
#include "phraselm/logmath.h"
#include "phraselm/parallel.h"

namespace phraselm {

namespace {

int ResolveOrderLimit(const BackoffModel& model, int order_limit) {
  if (order_limit == 0) return model.order();
  if (order_limit < 1 || order_limit > model.order())
    throw UsageError("order limit must be in [1, model order]");
  return order_limit;
}

// Phrase-unit lookups for every span [begin, begin+len) with len <= mpl,
// resolved once per sentence.
class SpanUnits {
 public:
  SpanUnits(const BackoffModel& model, const Sentence& sentence)
      : sentence_(sentence), mpl_(model.mpl()) {
    std::size_t m = sentence.length();
    ids_.resize(m * mpl_, kUnknownPhrase);
    for (std::size_t begin = 0; begin < m; ++begin) {
      std::size_t max_len = std::min<std::size_t>(mpl_, m - begin);
      for (std::size_t len = 1; len <= max_len; ++len)
        ids_[begin * mpl_ + (len - 1)] =
            model.lexicon()
                .Find(std::span<const WordId>(&sentence_.tokens[begin], len))
                .value_or(kUnknownPhrase);
    }
  }

  UnitRef Unit(int begin, int end) const {
    return UnitRef{
        ids_[static_cast<std::size_t>(begin) * mpl_ + (end - begin - 1)],
        std::span<const WordId>(&sentence_.tokens[begin], end - begin)};
  }

 private:
  const Sentence& sentence_;
  int mpl_;
  std::vector<PhraseId> ids_;
};

// Walks every segmentation in lexicographic boundary order, reusing chain
// prefixes. fn(log_prob, phrase_count) fires once per complete segmentation;
// log_prob accumulates terms left to right, matching ScoreSegmentation
// bit for bit.
template <typename F>
void ForEachChain(const BackoffModel& model, const SpanUnits& units, int m,
                  int n, F&& fn) {
  int mpl = model.mpl();
  std::vector<PhraseId> chain(1, PhraseLexicon::kBosPhrase);
  std::vector<double> prefix(1, 0.0);

  auto descend = [&](auto&& self, int cur) -> void {
    int j = static_cast<int>(chain.size());  // 1-based index of next phrase
    int history = std::min(n - 1, j);
    for (int len = 1; len <= std::min(mpl, m - cur); ++len) {
      int next = cur + len;
      std::span<const PhraseId> context(&chain[j - history], history);
      double lp = prefix.back() +
                  model.LogStarProb(context, units.Unit(cur, next));
      chain.push_back(units.Unit(cur, next).id);
      prefix.push_back(lp);
      if (next == m) fn(lp, j);
      else self(self, next);
      chain.pop_back();
      prefix.pop_back();
    }
  };
  if (m > 0) descend(descend, 0);
}

void CheckLengthCap(std::size_t m, const ScoreOptions& options) {
  if (m > static_cast<std::size_t>(options.max_sentence_length))
    throw SentenceTooLongError(
        "sentence has " + std::to_string(m) +
        " words; phrase scoring is capped at " +
        std::to_string(options.max_sentence_length) +
        " (raise --max-sentence-length to override)");
}

}  // namespace

std::vector<Segmentation> EnumerateSegmentations(int m, int mpl) {
  std::vector<Segmentation> out;
  std::vector<int> boundaries(1, 0);
  auto descend = [&](auto&& self, int cur) -> void {
    if (cur == m) {
      out.push_back(Segmentation{boundaries});
      return;
    }
    for (int len = 1; len <= std::min(mpl, m - cur); ++len) {
      boundaries.push_back(cur + len);
      self(self, cur + len);
      boundaries.pop_back();
    }
  };
  descend(descend, 0);
  return out;
}

std::uint64_t CountSegmentations(int m, int mpl) {
  std::vector<std::uint64_t> k(m + 1, 0);
  k[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int len = 1; len <= std::min(mpl, i); ++len) k[i] += k[i - len];
  return k[m];
}

PhraseScore ScoreSegmentation(const BackoffModel& model,
                              const Sentence& sentence,
                              const Segmentation& seg, int order_limit) {
  int n = ResolveOrderLimit(model, order_limit);
  int m = static_cast<int>(sentence.length());
  const std::vector<int>& b = seg.boundaries;
  bool valid = !b.empty() && b.front() == 0 && b.back() == m;
  for (std::size_t i = 1; valid && i < b.size(); ++i)
    valid = b[i] > b[i - 1] && b[i] - b[i - 1] <= model.mpl();
  if (!valid)
    throw DomainError("segmentation does not partition this sentence");

  SpanUnits units(model, sentence);
  std::vector<PhraseId> chain(1, PhraseLexicon::kBosPhrase);
  double log_prob = 0.0;
  for (std::size_t j = 1; j < b.size(); ++j) {
    int history = std::min<int>(n - 1, static_cast<int>(j));
    std::span<const PhraseId> context(&chain[j - history], history);
    UnitRef unit = units.Unit(b[j - 1], b[j]);
    log_prob += model.LogStarProb(context, unit);
    chain.push_back(unit.id);
  }
  return PhraseScore{log_prob, seg.phrase_count()};
}

PhraseSentenceResult SumModelProb(const BackoffModel& model,
                                  const Sentence& sentence,
                                  const ScoreOptions& options) {
  CheckLengthCap(sentence.length(), options);
  int n = ResolveOrderLimit(model, options.order_limit);
  int m = static_cast<int>(sentence.length());
  if (m == 0) return PhraseSentenceResult{PhraseMode::kSum, 0.0, 1, 0, 0};

  SpanUnits units(model, sentence);
  std::vector<double> scores;
  scores.reserve(CountSegmentations(m, model.mpl()));
  ForEachChain(model, units, m, n,
               [&](double lp, int) { scores.push_back(lp); });
  double log_prob =
      LogSumExp10(scores) - std::log10(static_cast<double>(scores.size()));
  return PhraseSentenceResult{PhraseMode::kSum, log_prob, scores.size(), 0,
                              0};
}

PhraseSentenceResult MaxModelProb(const BackoffModel& model,
                                  const Sentence& sentence,
                                  const ScoreOptions& options) {
  CheckLengthCap(sentence.length(), options);
  int n = ResolveOrderLimit(model, options.order_limit);
  int m = static_cast<int>(sentence.length());
  if (m == 0) return PhraseSentenceResult{PhraseMode::kMax, 0.0, 1, 0, 0};

  SpanUnits units(model, sentence);
  std::uint64_t count = 0;
  double best_key = 0.0, best_lp = 0.0;
  int best_j = 0;
  std::size_t best_index = 0;
  ForEachChain(model, units, m, n, [&](double lp, int j) {
    // Minimizing 10^(-lp/J) is maximizing lp/J; the raw-probability rule
    // just maximizes lp. First (lexicographically least) segmentation wins
    // ties.
    double key =
        options.rule == MaxSelectRule::kMinPerplexity ? lp / j : lp;
    if (count == 0 || key > best_key) {
      best_key = key;
      best_lp = lp;
      best_j = j;
      best_index = count;
    }
    ++count;
  });
  return PhraseSentenceResult{PhraseMode::kMax, best_lp, count, best_j,
                              best_index};
}

double PhraseSentencePerplexity(const PhraseSentenceResult& result,
                                std::uint64_t m) {
  if (result.mode == PhraseMode::kSum) {
    if (m == 0)
      throw DomainError("perplexity undefined for an empty sentence");
    return std::pow(10.0, -result.log_prob / static_cast<double>(m));
  }
  if (result.best_phrase_count == 0)
    throw DomainError("perplexity undefined for an empty segmentation");
  return std::pow(10.0, -result.log_prob /
                            static_cast<double>(result.best_phrase_count));
}

double PhraseTextPerplexity(const BackoffModel& model, const Corpus& corpus,
                            PhraseMode mode, const ScoreOptions& options,
                            int threads) {
  if (corpus.word_count == 0)
    throw DomainError("perplexity undefined for an empty text");
  std::vector<PhraseSentenceResult> results(corpus.sentences.size());
  ParallelFor(corpus.sentences.size(), threads,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i)
                  results[i] =
                      mode == PhraseMode::kSum
                          ? SumModelProb(model, corpus.sentences[i], options)
                          : MaxModelProb(model, corpus.sentences[i], options);
              });
  double total = 0.0;
  std::uint64_t denom = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    total += results[i].log_prob;
    denom += mode == PhraseMode::kSum
                 ? corpus.sentences[i].length()
                 : static_cast<std::uint64_t>(results[i].best_phrase_count);
  }
  if (denom == 0)
    throw DomainError("perplexity undefined for an empty text");
  return std::pow(10.0, -total / static_cast<double>(denom));
}

}  // namespace phraselm
