#ifndef PHRASELM_VOCABULARY_H_
#define PHRASELM_VOCABULARY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace phraselm {

using WordId = std::int32_t;

// Word <-> id map with two reserved sentinels.  The begin-of-sentence
// token is conditioning context only and the unknown token absorbs
// out-of-vocabulary words; neither is ever an ordinary corpus word.
// Ids are dense and assigned in first-occurrence order, so two loads of
// the same corpus produce identical ids.
class Vocabulary {
 public:
  static constexpr WordId kBosId = 0;
  static constexpr WordId kUnkId = 1;
  static constexpr const char* kBosToken = "<s>";
  static constexpr const char* kUnkToken = "<unk>";

  Vocabulary();

  // Returns the id of `word`, adding it if absent.  The sentinel spellings
  // are never assigned fresh ids; they resolve to their reserved ids.
  WordId Add(std::string_view word);

  std::optional<WordId> Find(std::string_view word) const;

  // Out-of-vocabulary words map to kUnkId.
  WordId IdOrUnk(std::string_view word) const;

  const std::string& Word(WordId id) const { return words_.at(id); }

  // Total ids, sentinels included.
  std::size_t size() const { return words_.size(); }
  // Ordinary corpus words only.
  std::size_t num_words() const { return words_.size() - 2; }

 private:
  std::unordered_map<std::string, WordId> ids_;
  std::vector<std::string> words_;
};

}  // namespace phraselm

#endif  // PHRASELM_VOCABULARY_H_
