#include "phraselm/phrase.h"

namespace phraselm {

PhraseLexicon::PhraseLexicon() {
  offsets_.push_back(0);
  WordId bos = Vocabulary::kBosId;
  Intern(std::span<const WordId>(&bos, 1));
}

PhraseId PhraseLexicon::Intern(std::span<const WordId> words) {
  std::vector<WordId> key(words.begin(), words.end());
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  PhraseId id = static_cast<PhraseId>(size());
  flat_.insert(flat_.end(), words.begin(), words.end());
  offsets_.push_back(flat_.size());
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<PhraseId> PhraseLexicon::Find(
    std::span<const WordId> words) const {
  std::vector<WordId> key(words.begin(), words.end());
  auto it = ids_.find(key);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::span<const WordId> PhraseLexicon::Words(PhraseId id) const {
  std::size_t begin = offsets_.at(id);
  std::size_t end = offsets_.at(id + 1);
  return std::span<const WordId>(flat_.data() + begin, end - begin);
}

std::size_t PhraseLexicon::WordLength(PhraseId id) const {
  return offsets_.at(id + 1) - offsets_.at(id);
}

std::string PhraseLexicon::Render(PhraseId id, const Vocabulary& vocab) const {
  std::string out;
  for (WordId w : Words(id)) {
    if (!out.empty()) out += ' ';
    out += vocab.Word(w);
  }
  return out;
}

}  // namespace phraselm
