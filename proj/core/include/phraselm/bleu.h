#ifndef PHRASELM_BLEU_H_
#define PHRASELM_BLEU_H_

#include <cstdint>
#include <string>
#include <vector>

namespace phraselm {

struct BleuReport {
  double bleu = 0.0;
  std::vector<double> precisions;  // modified n-gram precision, n = 1..max_n
  double brevity_penalty = 1.0;
  std::uint64_t hyp_length = 0;
  std::uint64_t ref_length = 0;
};

// Corpus-level BLEU against a single reference per segment: clipped modified
// n-gram precisions pooled over the corpus, geometric mean over n = 1..max_n,
// brevity penalty exp(1 - ref/hyp) when the hypotheses are shorter. Any
// zero precision zeroes the score (no smoothing). Throws DomainError on an
// empty corpus and UsageError on mismatched lengths.
BleuReport CorpusBleu(const std::vector<std::vector<std::string>>& hypotheses,
                      const std::vector<std::vector<std::string>>& references,
                      int max_n = 4);

}  // namespace phraselm

#endif  // PHRASELM_BLEU_H_
