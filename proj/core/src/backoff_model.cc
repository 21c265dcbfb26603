#include "phraselm/backoff_model.h"

#include <algorithm>
#include <cmath>

#include "phraselm/errors.h"
#include "phraselm/good_turing.h"
#include "phraselm/logmath.h"

namespace phraselm {

namespace {

// Floor for the leftover mass of a context whose seen continuations
// exhaust it; keeps backoff weights positive so no smoothed query ever
// returns zero while staying far inside the 1e-6 normalization tolerance.
constexpr double kMinLeftover = 1e-10;
// Ceiling on the reserved unseen mass; an all-singleton histogram would
// otherwise claim everything and zero out the seen vocabulary.
constexpr double kMaxUnseenMass = 0.999;

}  // namespace

BackoffModel::BackoffModel(LmMode mode, int order, int mpl, double lambda)
    : mode_(mode),
      order_(order),
      mpl_(mpl),
      lambda_(lambda),
      unseen_log_(kLogZero),
      word_unk_log_(kLogZero),
      word_denominator_(1.0) {
  if (order < 1) throw UsageError("model order must be at least 1");
  if (mpl < 1) throw UsageError("mpl must be at least 1");
  if (lambda < 0.0 || lambda > 1.0)
    throw UsageError("lambda must lie in [0, 1]");
}

void BackoffModel::SetEntry(std::span<const PhraseId> key, double log_prob) {
  Node* node = &root_;
  for (PhraseId id : key) node = &node->children[id];
  node->log_prob = log_prob;
}

void BackoffModel::SetBackoff(std::span<const PhraseId> key, double log_bow) {
  Node* node = &root_;
  for (PhraseId id : key) node = &node->children[id];
  node->log_bow = log_bow;
}

void BackoffModel::SetWordUnigram(WordId word, double log_prob) {
  word_unigram_log_[word] = log_prob;
}

void BackoffModel::FinalizeWordUnigrams() {
  double sum = Exp10(word_unk_log_);
  for (const auto& [word, lp] : word_unigram_log_) sum += Exp10(lp);
  word_denominator_ = sum;
}

const BackoffModel::Node* BackoffModel::FindNode(
    std::span<const PhraseId> key) const {
  const Node* node = &root_;
  for (PhraseId id : key) {
    if (id == kUnknownPhrase) return nullptr;
    auto it = node->children.find(id);
    if (it == node->children.end()) return nullptr;
    node = &it->second;
  }
  return node;
}

double BackoffModel::LogUnigram(PhraseId unit) const {
  if (unit != kUnknownPhrase) {
    auto it = root_.children.find(unit);
    if (it != root_.children.end() && it->second.log_prob)
      return *it->second.log_prob;
  }
  return unseen_log_;
}

double BackoffModel::LogBackoffProb(std::span<const PhraseId> context,
                                    PhraseId unit) const {
  if (context.size() > static_cast<std::size_t>(order_ - 1))
    context = context.subspan(context.size() - (order_ - 1));
  double weight = 0.0;  // accumulated log10 backoff weights
  while (!context.empty()) {
    if (const Node* ctx_node = FindNode(context)) {
      if (unit != kUnknownPhrase) {
        auto it = ctx_node->children.find(unit);
        if (it != ctx_node->children.end() && it->second.log_prob)
          return weight + *it->second.log_prob;
      }
      if (ctx_node->log_bow) weight += *ctx_node->log_bow;
    }
    context = context.subspan(1);
  }
  return weight + LogUnigram(unit);
}

double BackoffModel::LogWordProductTerm(std::span<const WordId> words) const {
  double lp = 0.0;
  for (WordId w : words) {
    auto it = word_unigram_log_.find(w);
    lp += it == word_unigram_log_.end() ? word_unk_log_ : it->second;
  }
  return lp - static_cast<double>(words.size()) * Log10(word_denominator_);
}

double BackoffModel::LogStarProb(std::span<const PhraseId> context,
                                 UnitRef unit) const {
  double backoff = LogBackoffProb(context, unit.id);
  if (mode_ == LmMode::kWord || lambda_ == 1.0) return backoff;
  return LogAdd10(Log10(lambda_) + backoff,
                  Log10(1.0 - lambda_) + LogWordProductTerm(unit.words));
}

std::uint64_t BackoffModel::NumEntries(int order) const {
  std::uint64_t n = 0;
  ForEachEntry(order, [&](std::span<const PhraseId>, const double* lp,
                          const double*) {
    if (lp) ++n;
  });
  return n;
}

namespace {

// Unigram layer: Good-Turing discounted relative frequencies renormalized
// to 1 - unseen_mass, with the unseen mass reserved for unknown units.
void BuildUnigramLayer(const CountTable& counts, const DiscountTable& disc,
                       bool smoothing, BackoffModel& model) {
  CountsOfCounts coc = ComputeCountsOfCounts(counts, 1);
  if (coc.n0 == 0) throw TrainError("cannot train: no unigram counts");
  double n0 = static_cast<double>(coc.n0);

  double unseen = 0.0;
  if (smoothing) {
    unseen = coc.Nr(1) > 0 ? static_cast<double>(coc.Nr(1)) / n0 : 0.5 / n0;
    unseen = std::min(unseen, kMaxUnseenMass);
  }

  double raw_sum = 0.0;
  std::vector<std::pair<PhraseId, double>> raw;
  counts.ForEach(1, [&](std::span<const PhraseId> key, std::uint64_t count) {
    if (key[0] == PhraseLexicon::kBosPhrase) return;
    double adjusted =
        smoothing ? disc.CappedCount(count) : static_cast<double>(count);
    double q = adjusted / n0;
    raw.emplace_back(key[0], q);
    raw_sum += q;
  });
  if (raw.empty()) throw TrainError("cannot train: no unigram counts");

  double scale = (1.0 - unseen) / raw_sum;
  for (const auto& [unit, q] : raw) {
    PhraseId key = unit;
    model.SetEntry(std::span<const PhraseId>(&key, 1), Log10(q * scale));
  }
  model.SetUnseenLog(unseen > 0.0 ? Log10(unseen) : kLogZero);
}

// Word-level unigram distribution backing the phrase/word-product
// interpolation.  Same construction as the unigram layer of a word model.
void BuildWordUnigrams(const Corpus& corpus, const TrainOptions& options,
                       BackoffModel& model) {
  CountTable words = CountWordNgrams(corpus, 1, options.threads);
  CountsOfCounts coc = ComputeCountsOfCounts(words, 1);
  if (coc.n0 == 0) throw TrainError("cannot train: no word counts");
  DiscountTable disc(coc, options.gt_max);
  double n0 = static_cast<double>(coc.n0);

  double unseen = 0.0;
  if (options.smoothing) {
    unseen = coc.Nr(1) > 0 ? static_cast<double>(coc.Nr(1)) / n0 : 0.5 / n0;
    unseen = std::min(unseen, kMaxUnseenMass);
  }

  double raw_sum = 0.0;
  std::vector<std::pair<WordId, double>> raw;
  words.ForEach(1, [&](std::span<const PhraseId> key, std::uint64_t count) {
    if (key[0] == PhraseLexicon::kBosPhrase) return;
    WordId word = words.lexicon().Words(key[0])[0];
    double adjusted = options.smoothing ? disc.CappedCount(count)
                                        : static_cast<double>(count);
    double q = adjusted / n0;
    raw.emplace_back(word, q);
    raw_sum += q;
  });

  double scale = (1.0 - unseen) / raw_sum;
  for (const auto& [word, q] : raw)
    model.SetWordUnigram(word, Log10(q * scale));
  model.SetWordUnkLog(unseen > 0.0 ? Log10(unseen) : kLogZero);
  model.FinalizeWordUnigrams();
}

}  // namespace

BackoffModel BackoffModel::Train(const Corpus& corpus, Vocabulary vocab,
                                 const TrainOptions& options) {
  TrainOptions opt = options;
  if (opt.mpl < 1) throw UsageError("mpl must be at least 1");
  if (opt.mode == LmMode::kWord) opt.mpl = 1;
  if (!opt.smoothing) opt.lambda = 1.0;

  CountTable counts =
      opt.mode == LmMode::kWord
          ? CountWordNgrams(corpus, opt.order, opt.threads)
          : CountPhraseNgrams(corpus, opt.order, opt.mpl, opt.threads);

  BackoffModel model(opt.mode, opt.order, opt.mpl, opt.lambda);
  model.vocab_ = std::move(vocab);

  std::vector<DiscountTable> discounts;
  discounts.reserve(opt.order);
  for (int k = 1; k <= opt.order; ++k)
    discounts.emplace_back(ComputeCountsOfCounts(counts, k), opt.gt_max);

  BuildUnigramLayer(counts, discounts[0], opt.smoothing, model);

  // Orders 2..n bottom-up: discounted conditionals first, then the backoff
  // weight of every extending context, which needs the lower orders
  // complete.
  std::vector<PhraseId> key;
  for (int k = 2; k <= opt.order; ++k) {
    const DiscountTable& disc = discounts[k - 1];
    counts.ForEach(k - 1, [&](std::span<const PhraseId> context,
                              std::uint64_t context_count) {
      // Rows holding the begin sentinel are absent from the order's
      // histogram (they carry no probability mass of their own), so the
      // Good-Turing adjustment does not apply to them.
      bool sentinel_row =
          std::find(context.begin(), context.end(),
                    PhraseLexicon::kBosPhrase) != context.end();
      double sum_alpha = 0.0;
      double sum_lower = 0.0;
      bool any = false;
      counts.ForEachChild(
          context, [&](PhraseId unit, std::uint64_t count) {
            double adjusted = opt.smoothing && !sentinel_row
                                  ? disc.CappedCount(count)
                                  : static_cast<double>(count);
            double alpha = adjusted / static_cast<double>(context_count);
            key.assign(context.begin(), context.end());
            key.push_back(unit);
            model.SetEntry(std::span<const PhraseId>(key.data(), key.size()),
                           Log10(alpha));
            sum_alpha += alpha;
            sum_lower += Exp10(
                model.LogBackoffProb(context.subspan(1), unit));
            any = true;
          });
      if (!any) return;  // context never extended: implicit weight 1

      double bow;
      if (opt.literal_backoff || !opt.smoothing) {
        bow = std::max(1.0 - sum_alpha, 0.0);
        if (!opt.literal_backoff && bow > 0.0) {
          double denom = 1.0 - sum_lower;
          bow = denom > 0.0 ? bow / denom : 0.0;
        }
      } else {
        double numer = std::max(1.0 - sum_alpha, kMinLeftover);
        double denom = std::max(1.0 - sum_lower, kMinLeftover);
        bow = numer / denom;
      }
      model.SetBackoff(context, bow > 0.0 ? Log10(bow) : kLogZero);
    });
  }

  if (opt.mode == LmMode::kPhrase) BuildWordUnigrams(corpus, opt, model);

  model.lexicon_ = std::move(counts.lexicon());
  return model;
}

}  // namespace phraselm
