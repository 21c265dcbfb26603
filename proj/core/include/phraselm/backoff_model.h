#ifndef PHRASELM_BACKOFF_MODEL_H_
#define PHRASELM_BACKOFF_MODEL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "phraselm/corpus.h"
#include "phraselm/count_table.h"
#include "phraselm/phrase.h"
#include "phraselm/vocabulary.h"

namespace phraselm {

enum class LmMode { kWord, kPhrase };

struct TrainOptions {
  int order = 3;
  int mpl = 3;                   // forced to 1 in word mode
  LmMode mode = LmMode::kPhrase;
  double lambda = 0.43;          // phrase/word-product interpolation weight
  bool smoothing = true;         // Good-Turing + unseen mass + interpolation
  bool literal_backoff = false;  // d = 1 - sum(alpha), no renormalization
  int gt_max = 5;
  int threads = 1;
};

// A phrase occurrence at query time: its lexicon id when the model has
// seen it (kUnknownPhrase otherwise) and its word span, which the
// interpolation term needs even for unseen phrases.
struct UnitRef {
  PhraseId id = kUnknownPhrase;
  std::span<const WordId> words;
};

// Katz-style backoff model over phrase units, with Good-Turing discounted
// conditional probabilities per order and per-context backoff weights.
// Word models are the mpl = 1 case scored without interpolation.  All
// probabilities are kept in log10.  Immutable once trained or read; safe
// for concurrent queries.
class BackoffModel {
 public:
  BackoffModel(LmMode mode, int order, int mpl, double lambda);

  static BackoffModel Train(const Corpus& corpus, Vocabulary vocab,
                            const TrainOptions& options);

  // log10 P_BO(unit | context): the discounted conditional when the full
  // n-gram is stored, otherwise backoff weight times the probability under
  // the context shortened from the far end.  Grounds at the unigram layer,
  // where an unknown unit receives the reserved unseen mass.  `context` is
  // truncated to its last order-1 units if longer.
  double LogBackoffProb(std::span<const PhraseId> context, PhraseId unit) const;

  // log10 P*(unit | context): lambda * P_BO + (1 - lambda) * product of
  // word-unigram probabilities over the unit's k words, normalized by the
  // word-unigram total to the k-th power.  With lambda == 1 (and always in
  // word mode) this is exactly LogBackoffProb.
  double LogStarProb(std::span<const PhraseId> context, UnitRef unit) const;

  // log10 of the word-unigram interpolation term for a k-word span.
  double LogWordProductTerm(std::span<const WordId> words) const;

  LmMode mode() const { return mode_; }
  int order() const { return order_; }
  int mpl() const { return mpl_; }
  double lambda() const { return lambda_; }
  double unseen_log() const { return unseen_log_; }

  const Vocabulary& vocab() const { return vocab_; }
  const PhraseLexicon& lexicon() const { return lexicon_; }

  std::optional<PhraseId> FindUnit(std::span<const WordId> words) const {
    return lexicon_.Find(words);
  }

  std::uint64_t NumEntries(int order) const;

  // Visits stored n-grams of one order in ascending id-lexicographic
  // order.  fn(key, log_prob, backoff: const double* or nullptr).
  template <typename F>
  void ForEachEntry(int order, F&& fn) const {
    std::vector<PhraseId> path;
    path.reserve(order);
    VisitEntries(root_, order, path, fn);
  }

  const std::map<WordId, double>& word_unigrams() const {
    return word_unigram_log_;
  }
  double word_unigram_denominator() const { return word_denominator_; }
  double word_unk_log() const { return word_unk_log_; }

  // Mutation surface for training and deserialization.
  void SetEntry(std::span<const PhraseId> key, double log_prob);
  void SetBackoff(std::span<const PhraseId> key, double log_bow);
  void SetUnseenLog(double log_mass) { unseen_log_ = log_mass; }
  void SetWordUnigram(WordId word, double log_prob);
  void SetWordUnkLog(double log_prob) { word_unk_log_ = log_prob; }
  // Recomputes the interpolation denominator from the stored word
  // unigrams plus unk.
  void FinalizeWordUnigrams();
  Vocabulary& mutable_vocab() { return vocab_; }
  PhraseLexicon& mutable_lexicon() { return lexicon_; }

 private:
  struct Node {
    std::optional<double> log_prob;
    std::optional<double> log_bow;
    std::map<PhraseId, Node> children;
  };

  template <typename F>
  static void VisitEntries(const Node& node, int depth,
                           std::vector<PhraseId>& path, F& fn) {
    for (const auto& [id, child] : node.children) {
      path.push_back(id);
      if (depth == 1) {
        if (child.log_prob || child.log_bow) {
          fn(std::span<const PhraseId>(path.data(), path.size()),
             child.log_prob ? &*child.log_prob : nullptr,
             child.log_bow ? &*child.log_bow : nullptr);
        }
      } else {
        VisitEntries(child, depth - 1, path, fn);
      }
      path.pop_back();
    }
  }

  const Node* FindNode(std::span<const PhraseId> key) const;
  double LogUnigram(PhraseId unit) const;

  LmMode mode_;
  int order_;
  int mpl_;
  double lambda_;
  double unseen_log_;  // log10 unigram mass reserved for unseen units

  Node root_;
  std::map<WordId, double> word_unigram_log_;  // phrase mode interpolation
  double word_unk_log_;
  double word_denominator_;  // linear sum of word unigrams + unk

  Vocabulary vocab_;
  PhraseLexicon lexicon_;
};

}  // namespace phraselm

#endif  // PHRASELM_BACKOFF_MODEL_H_
