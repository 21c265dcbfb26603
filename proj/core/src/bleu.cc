#include "phraselm/bleu.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "phraselm/errors.h"

namespace phraselm {

namespace {

// Counts of the order-n token windows, keyed by the 0x1f-joined tokens.
std::unordered_map<std::string, std::uint64_t> NgramCounts(
    const std::vector<std::string>& tokens, int n) {
  std::unordered_map<std::string, std::uint64_t> counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key += '\x1f';
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

BleuReport CorpusBleu(const std::vector<std::vector<std::string>>& hypotheses,
                      const std::vector<std::vector<std::string>>& references,
                      int max_n) {
  if (hypotheses.size() != references.size())
    throw UsageError("hypothesis and reference corpora differ in length");
  if (hypotheses.empty()) throw DomainError("BLEU undefined for empty corpus");
  if (max_n < 1) throw UsageError("BLEU needs max_n >= 1");

  BleuReport report;
  for (const auto& h : hypotheses) report.hyp_length += h.size();
  for (const auto& r : references) report.ref_length += r.size();
  if (report.hyp_length == 0)
    throw DomainError("BLEU undefined when hypotheses contain no tokens");

  report.precisions.assign(max_n, 0.0);
  double log_mean = 0.0;
  bool any_zero = false;
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t matched = 0, total = 0;
    for (std::size_t s = 0; s < hypotheses.size(); ++s) {
      auto hyp_counts = NgramCounts(hypotheses[s], n);
      auto ref_counts = NgramCounts(references[s], n);
      for (const auto& [ngram, count] : hyp_counts) {
        auto it = ref_counts.find(ngram);
        if (it != ref_counts.end()) matched += std::min(count, it->second);
      }
      if (hypotheses[s].size() >= static_cast<std::size_t>(n))
        total += hypotheses[s].size() - n + 1;
    }
    double p = total ? static_cast<double>(matched) / total : 0.0;
    report.precisions[n - 1] = p;
    if (p > 0.0) log_mean += std::log(p) / max_n;
    else any_zero = true;
  }

  report.brevity_penalty =
      report.hyp_length < report.ref_length
          ? std::exp(1.0 - static_cast<double>(report.ref_length) /
                               static_cast<double>(report.hyp_length))
          : 1.0;
  report.bleu = any_zero ? 0.0 : report.brevity_penalty * std::exp(log_mean);
  return report;
}

}  // namespace phraselm
