#include "phraselm/corpus.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "phraselm/errors.h"

namespace phraselm {

namespace {

bool IsBlank(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::uint64_t CheckedWordCount(const Corpus& corpus) {
  std::uint64_t n = 0;
  for (const Sentence& s : corpus.sentences) n += s.length();
  return n;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsBlank(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsBlank(line[i])) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string Detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

Corpus LoadTrainingCorpus(std::istream& in, Vocabulary& vocab) {
  Corpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    Sentence sentence;
    for (const std::string& token : Tokenize(line)) {
      WordId id = vocab.Add(token);
      // A literal "<s>"/"<unk>" in the data is not a corpus word.
      if (id == Vocabulary::kBosId) id = Vocabulary::kUnkId;
      sentence.tokens.push_back(id);
    }
    corpus.word_count += sentence.length();
    corpus.sentences.push_back(std::move(sentence));
  }
  if (corpus.word_count != CheckedWordCount(corpus))
    throw std::logic_error("corpus word count out of sync");
  return corpus;
}

Sentence MapWithUnk(const Vocabulary& vocab,
                    const std::vector<std::string>& tokens) {
  Sentence sentence;
  sentence.tokens.reserve(tokens.size());
  for (const std::string& token : tokens) {
    WordId id = vocab.IdOrUnk(token);
    if (id == Vocabulary::kBosId) id = Vocabulary::kUnkId;
    sentence.tokens.push_back(id);
  }
  return sentence;
}

Corpus LoadTestCorpus(std::istream& in, const Vocabulary& vocab) {
  Corpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    Sentence sentence = MapWithUnk(vocab, Tokenize(line));
    corpus.word_count += sentence.length();
    corpus.sentences.push_back(std::move(sentence));
  }
  if (corpus.word_count != CheckedWordCount(corpus))
    throw std::logic_error("corpus word count out of sync");
  return corpus;
}

namespace {

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open corpus file: " + path);
  return in;
}

}  // namespace

Corpus LoadTrainingCorpusFile(const std::string& path, Vocabulary& vocab) {
  std::ifstream in = OpenOrThrow(path);
  return LoadTrainingCorpus(in, vocab);
}

Corpus LoadTestCorpusFile(const std::string& path, const Vocabulary& vocab) {
  std::ifstream in = OpenOrThrow(path);
  return LoadTestCorpus(in, vocab);
}

}  // namespace phraselm
