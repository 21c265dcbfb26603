#ifndef PHRASELM_CORPUS_H_
#define PHRASELM_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "phraselm/vocabulary.h"

namespace phraselm {

// Word ids of one input line, sentinels excluded.
struct Sentence {
  std::vector<WordId> tokens;
  std::size_t length() const { return tokens.size(); }
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::uint64_t word_count = 0;  // sum of sentence lengths
};

// Splits on runs of ASCII whitespace; no case folding, tokens are opaque
// bytes.  An empty or all-blank line yields an empty token list.
std::vector<std::string> Tokenize(std::string_view line);

// Inverse of Tokenize up to whitespace normalization.
std::string Detokenize(const std::vector<std::string>& tokens);

// One sentence per line.  Adds every token to `vocab` (tokens spelled like
// a sentinel map to unk instead of entering the vocabulary).
Corpus LoadTrainingCorpus(std::istream& in, Vocabulary& vocab);
Corpus LoadTrainingCorpusFile(const std::string& path, Vocabulary& vocab);

// One sentence per line against a frozen vocabulary; out-of-vocabulary
// tokens map to unk.
Corpus LoadTestCorpus(std::istream& in, const Vocabulary& vocab);
Corpus LoadTestCorpusFile(const std::string& path, const Vocabulary& vocab);

Sentence MapWithUnk(const Vocabulary& vocab,
                    const std::vector<std::string>& tokens);

}  // namespace phraselm

#endif  // PHRASELM_CORPUS_H_
