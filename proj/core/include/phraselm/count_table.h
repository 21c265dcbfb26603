#ifndef PHRASELM_COUNT_TABLE_H_
#define PHRASELM_COUNT_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "phraselm/corpus.h"
#include "phraselm/phrase.h"

namespace phraselm {

// Occurrence histogram of one trie order: N_r = number of distinct n-grams
// stored with count exactly r.  n0 follows the convention N_0 = sum of
// r * N_r, i.e. the total token mass at that order.  Entries containing
// the begin-of-sentence phrase are left out: they are context-only and
// get no probability of their own.
struct CountsOfCounts {
  std::map<std::uint64_t, std::uint64_t> n_r;
  std::uint64_t n0 = 0;

  std::uint64_t Nr(std::uint64_t r) const {
    auto it = n_r.find(r);
    return it == n_r.end() ? 0 : it->second;
  }
};

// Order-stratified counts of phrase n-grams, keyed by interned phrase ids.
// A node at depth k holds the count of the k-gram spelled by its path, so
// all orders share prefix storage.  Word n-gram tables are the mpl = 1
// special case.  Children are kept ordered by phrase id, which makes every
// traversal deterministic for a fixed lexicon.
class CountTable {
 public:
  CountTable(int max_order, int mpl)
      : max_order_(max_order), mpl_(mpl) {}

  void Add(std::span<const PhraseId> ngram, std::uint64_t count = 1);

  // 0 when the n-gram is absent or any unit is kUnknownPhrase.
  std::uint64_t Count(std::span<const PhraseId> ngram) const;

  // Visits stored n-grams of one order in ascending id-lexicographic
  // order.  fn(std::span<const PhraseId>, std::uint64_t count).
  template <typename F>
  void ForEach(int order, F&& fn) const {
    std::vector<PhraseId> path;
    path.reserve(order);
    Visit(root_, order, path, fn);
  }

  // Visits the one-unit extensions of a stored prefix in ascending id
  // order.  fn(PhraseId unit, std::uint64_t count).  No-op for an absent
  // prefix.
  template <typename F>
  void ForEachChild(std::span<const PhraseId> prefix, F&& fn) const {
    const Node* node = &root_;
    for (PhraseId id : prefix) {
      auto it = node->children.find(id);
      if (it == node->children.end()) return;
      node = &it->second;
    }
    for (const auto& [id, child] : node->children) fn(id, child.count);
  }

  std::uint64_t NumNgrams(int order) const;

  // Sum of order-1 counts over real phrases (begin sentinel excluded).
  std::uint64_t TotalUnigramMass() const;

  // Adds every count of `other` into this table, re-interning the other
  // lexicon's phrases.  Associative, and commutative on the stored counts.
  void Merge(const CountTable& other);

  // Debug dump: one record per line, "count<TAB>phrases" with phrases
  // space-joined words separated by the 0x1F byte, ascending order then
  // id-lexicographic.  Throws UsageError if a word contains 0x1F.
  void Dump(std::ostream& out, const Vocabulary& vocab) const;

  PhraseLexicon& lexicon() { return lexicon_; }
  const PhraseLexicon& lexicon() const { return lexicon_; }
  int max_order() const { return max_order_; }
  int mpl() const { return mpl_; }

 private:
  struct Node {
    std::uint64_t count = 0;
    std::map<PhraseId, Node> children;
  };

  template <typename F>
  static void Visit(const Node& node, int depth, std::vector<PhraseId>& path,
                    F& fn) {
    for (const auto& [id, child] : node.children) {
      path.push_back(id);
      if (depth == 1) {
        fn(std::span<const PhraseId>(path.data(), path.size()), child.count);
      } else {
        Visit(child, depth - 1, path, fn);
      }
      path.pop_back();
    }
  }

  PhraseLexicon lexicon_;
  Node root_;
  int max_order_;
  int mpl_;
};

// Emits every phrase k-gram (1 <= k <= max_order) of the sentence exactly
// once, as boundary tuples 0 <= b[0] < b[1] < ... < b[k] <= m with every
// gap at most mpl.  Phrases are interned into `lex` on first sight and
// the callback receives fn(int b0, std::span<const PhraseId> phrases), in
// ascending (b0, tuple) order.  Streaming: nothing is materialized.
template <typename F>
void EnumeratePhraseKGrams(const Sentence& sentence, int max_order, int mpl,
                           PhraseLexicon& lex, F&& fn) {
  const int m = static_cast<int>(sentence.length());
  std::vector<PhraseId> buf(max_order);
  const WordId* words = sentence.tokens.data();

  // Depth-first over next boundaries; buf carries the interned prefix.
  auto extend = [&](auto&& self, int b0, int prev, int depth) -> void {
    int limit = std::min(prev + mpl, m);
    for (int next = prev + 1; next <= limit; ++next) {
      buf[depth] =
          lex.Intern(std::span<const WordId>(words + prev, next - prev));
      fn(b0, std::span<const PhraseId>(buf.data(), depth + 1));
      if (depth + 1 < max_order) self(self, b0, next, depth + 1);
    }
  };
  for (int b0 = 0; b0 < m; ++b0) extend(extend, b0, b0, 0);
}

// Aggregates EnumeratePhraseKGrams over all sentences, plus the sentence-
// initial conditioning rows: the begin sentinel as a length-1 phrase once
// per sentence and prepended to every tuple anchored at position 0.
CountTable CountPhraseNgrams(const Corpus& corpus, int max_order, int mpl,
                             int threads = 1);

// Plain sliding-window word n-gram counter over [bos, w_1..w_m].  Produces
// a table identical to CountPhraseNgrams with mpl = 1.
CountTable CountWordNgrams(const Corpus& corpus, int max_order,
                           int threads = 1);

CountsOfCounts ComputeCountsOfCounts(const CountTable& table, int order);

}  // namespace phraselm

#endif  // PHRASELM_COUNT_TABLE_H_
