#ifndef PHRASELM_PHRASE_H_
#define PHRASELM_PHRASE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "phraselm/vocabulary.h"

namespace phraselm {

using PhraseId = std::int32_t;

// Marks a word span that is not in the lexicon (unseen at training time).
inline constexpr PhraseId kUnknownPhrase = -1;

// Interns contiguous word-id runs (phrases of 1..MPL words) into dense ids
// so count-trie keys stay one integer wide per unit.  Id 0 is always the
// begin-of-sentence phrase.  Ids are assigned in first-intern order, which
// makes them reproducible for a fixed enumeration order.
class PhraseLexicon {
 public:
  PhraseLexicon();

  PhraseId Intern(std::span<const WordId> words);
  std::optional<PhraseId> Find(std::span<const WordId> words) const;

  std::span<const WordId> Words(PhraseId id) const;
  std::size_t WordLength(PhraseId id) const;
  bool IsBos(PhraseId id) const { return id == kBosPhrase; }

  std::size_t size() const { return offsets_.size() - 1; }

  // Space-joined word spelling of a phrase.
  std::string Render(PhraseId id, const Vocabulary& vocab) const;

  static constexpr PhraseId kBosPhrase = 0;

 private:
  struct SpanHash {
    std::size_t operator()(const std::vector<WordId>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (WordId w : v) {
        h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  std::vector<WordId> flat_;
  std::vector<std::size_t> offsets_;  // size() + 1 entries
  std::unordered_map<std::vector<WordId>, PhraseId, SpanHash> ids_;
};

}  // namespace phraselm

#endif  // PHRASELM_PHRASE_H_
