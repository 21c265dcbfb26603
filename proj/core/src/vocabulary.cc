#include "phraselm/vocabulary.h"

namespace phraselm {

Vocabulary::Vocabulary() {
  words_.emplace_back(kBosToken);
  words_.emplace_back(kUnkToken);
  ids_.emplace(kBosToken, kBosId);
  ids_.emplace(kUnkToken, kUnkId);
}

WordId Vocabulary::Add(std::string_view word) {
  auto it = ids_.find(std::string(word));
  if (it != ids_.end()) return it->second;
  WordId id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  ids_.emplace(words_.back(), id);
  return id;
}

std::optional<WordId> Vocabulary::Find(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

WordId Vocabulary::IdOrUnk(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnkId : it->second;
}

}  // namespace phraselm
