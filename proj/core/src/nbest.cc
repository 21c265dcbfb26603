#include "phraselm/nbest.h"

#include <cstdlib>
#include <fstream>
#include <unordered_map>
#include <utility>

#include "phraselm/corpus.h"
#include "phraselm/errors.h"
#include "phraselm/parallel.h"
#include "phraselm/word_lm.h"

namespace phraselm {

namespace {

constexpr const char kFieldSep[] = " ||| ";

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(kFieldSep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 5;
  }
}

int ParseSegmentId(const std::string& text, std::size_t lineno) {
  const char* begin = text.c_str();
  char* end = nullptr;
  long id = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0' || id < 0)
    throw ParseError("bad segment id '" + text + "'", lineno);
  return static_cast<int>(id);
}

}  // namespace

NBestList ParseNBest(std::istream& in) {
  NBestList list;
  std::unordered_map<int, std::size_t> segment_index;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields = SplitFields(line);
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError("expected 2 or 3 ' ||| ' separated fields", lineno);

    NBestEntry entry;
    entry.segment_id = ParseSegmentId(fields[0], lineno);
    entry.hypothesis = Tokenize(fields[1]);
    if (entry.hypothesis.empty())
      throw ParseError("empty hypothesis", lineno);
    if (fields.size() == 3) {
      const char* begin = fields[2].c_str();
      char* end = nullptr;
      double score = std::strtod(begin, &end);
      if (end == begin || *end != '\0')
        throw ParseError("bad decoder score '" + fields[2] + "'", lineno);
      entry.decoder_score = score;
    }

    auto [it, inserted] =
        segment_index.emplace(entry.segment_id, list.segments.size());
    if (inserted)
      list.segments.push_back(NBestSegment{entry.segment_id, {}});
    list.segments[it->second].entries.push_back(std::move(entry));
    ++list.total_entries;
  }
  return list;
}

NBestList ParseNBestFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open n-best file: " + path);
  return ParseNBest(in);
}

std::vector<std::vector<RescoredEntry>> Rescore(
    const BackoffModel& model, const NBestList& nbest, RerankMode mode,
    const ScoreOptions& options, int threads) {
  std::vector<std::vector<RescoredEntry>> scores(nbest.segments.size());
  std::vector<std::pair<std::size_t, std::size_t>> work;
  work.reserve(nbest.total_entries);
  for (std::size_t s = 0; s < nbest.segments.size(); ++s) {
    scores[s].resize(nbest.segments[s].entries.size());
    for (std::size_t e = 0; e < nbest.segments[s].entries.size(); ++e)
      work.emplace_back(s, e);
  }

  ParallelFor(work.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto [s, e] = work[i];
      Sentence sentence =
          MapWithUnk(model.vocab(), nbest.segments[s].entries[e].hypothesis);
      RescoredEntry& out = scores[s][e];
      if (mode == RerankMode::kWord) {
        out.lm_log_prob =
            WordSentenceLogProb(model, sentence, options.order_limit)
                .log_prob;
        continue;
      }
      try {
        out.lm_log_prob =
            mode == RerankMode::kSum
                ? SumModelProb(model, sentence, options).log_prob
                : MaxModelProb(model, sentence, options).log_prob;
      } catch (const SentenceTooLongError&) {
        out.lm_log_prob =
            WordSentenceLogProb(model, sentence, options.order_limit)
                .log_prob;
        out.word_fallback = true;
      }
    }
  });
  return scores;
}

std::vector<std::size_t> SelectBest(
    const NBestList& nbest,
    const std::vector<std::vector<RescoredEntry>>& scores,
    const SelectionOptions& options) {
  if (scores.size() != nbest.segments.size())
    throw UsageError("scores do not cover every n-best segment");
  std::vector<std::size_t> picks(nbest.segments.size(), 0);
  for (std::size_t s = 0; s < nbest.segments.size(); ++s) {
    const NBestSegment& segment = nbest.segments[s];
    if (scores[s].size() != segment.entries.size())
      throw UsageError("scores do not cover every n-best entry");
    double best = 0.0;
    for (std::size_t e = 0; e < segment.entries.size(); ++e) {
      double value = scores[s][e].lm_log_prob;
      if (options.combine_alpha) {
        if (!segment.entries[e].decoder_score)
          throw UsageError(
              "--combine requires a decoder score on every n-best entry");
        double alpha = *options.combine_alpha;
        value = alpha * *segment.entries[e].decoder_score +
                (1.0 - alpha) * value;
      }
      if (e == 0 || value > best) {
        best = value;
        picks[s] = e;
      }
    }
  }
  return picks;
}

}  // namespace phraselm
