#include "phraselm/model_io.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "phraselm/corpus.h"
#include "phraselm/errors.h"
#include "phraselm/logmath.h"

namespace phraselm {

namespace {

constexpr char kPhraseSep = '\x1f';

// 17 significant digits round-trip an IEEE double exactly.
std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double ParseDouble(const std::string& text, std::size_t line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ParseError("bad number '" + text + "'", line);
  return v;
}

std::vector<std::string> SplitOn(const std::string& text, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(text.substr(start));
      return fields;
    }
    fields.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string RenderKey(const BackoffModel& model,
                      std::span<const PhraseId> key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += kPhraseSep;
    std::string text = model.lexicon().Render(key[i], model.vocab());
    if (text.find(kPhraseSep) != std::string::npos)
      throw UsageError("word contains reserved byte 0x1f");
    out += text;
  }
  return out;
}

}  // namespace

void WriteModel(const BackoffModel& model, std::ostream& out) {
  out << "\\order " << model.order() << '\n';
  out << "\\mpl " << model.mpl() << '\n';
  out << "\\lambda " << FormatDouble(model.lambda()) << '\n';
  out << "\\mode " << (model.mode() == LmMode::kWord ? "word" : "phrase")
      << '\n';

  for (int k = 1; k <= model.order(); ++k) {
    out << '\\' << k << "-grams:\n";
    if (k == 1)
      out << FormatDouble(model.unseen_log()) << '\t'
          << Vocabulary::kUnkToken << '\n';
    model.ForEachEntry(k, [&](std::span<const PhraseId> key,
                              const double* log_prob, const double* log_bow) {
      out << FormatDouble(log_prob ? *log_prob : kLogZero) << '\t'
          << RenderKey(model, key);
      if (log_bow) out << '\t' << FormatDouble(*log_bow);
      out << '\n';
    });
  }

  if (model.mode() == LmMode::kPhrase) {
    out << "\\word-unigrams:\n";
    out << FormatDouble(model.word_unk_log()) << '\t'
        << Vocabulary::kUnkToken << '\n';
    for (const auto& [word, lp] : model.word_unigrams())
      out << FormatDouble(lp) << '\t' << model.vocab().Word(word) << '\n';
  }
}

void WriteModelFile(const BackoffModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write model file: " + path);
  WriteModel(model, out);
  out.flush();
  if (!out) throw UsageError("error writing model file: " + path);
}

namespace {

struct Header {
  std::optional<int> order;
  std::optional<int> mpl;
  std::optional<double> lambda;
  std::optional<LmMode> mode;
};

int ParseInt(const std::string& text, std::size_t line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw ParseError("bad integer '" + text + "'", line);
  return static_cast<int>(v);
}

// "\k-grams:" -> k, or nullopt.
std::optional<int> SectionOrder(const std::string& line) {
  if (line.size() < 9 || line[0] != '\\') return std::nullopt;
  std::size_t pos = line.find("-grams:");
  if (pos == std::string::npos || pos + 7 != line.size()) return std::nullopt;
  std::string num = line.substr(1, pos - 1);
  char* end = nullptr;
  long k = std::strtol(num.c_str(), &end, 10);
  if (end == num.c_str() || *end != '\0' || k < 1) return std::nullopt;
  return static_cast<int>(k);
}

}  // namespace

BackoffModel ReadModel(std::istream& in) {
  Header header;
  std::string line;
  std::size_t lineno = 0;

  // Header block runs until the first section marker.
  std::optional<int> first_section;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (auto k = SectionOrder(line)) {
      first_section = k;
      break;
    }
    std::vector<std::string> fields = SplitOn(line, ' ');
    if (fields.size() != 2 || fields[0].empty() || fields[0][0] != '\\')
      throw ParseError("expected model header", lineno);
    if (fields[0] == "\\order") header.order = ParseInt(fields[1], lineno);
    else if (fields[0] == "\\mpl") header.mpl = ParseInt(fields[1], lineno);
    else if (fields[0] == "\\lambda")
      header.lambda = ParseDouble(fields[1], lineno);
    else if (fields[0] == "\\mode") {
      if (fields[1] == "word") header.mode = LmMode::kWord;
      else if (fields[1] == "phrase") header.mode = LmMode::kPhrase;
      else throw ParseError("bad mode '" + fields[1] + "'", lineno);
    } else {
      throw ParseError("unknown header " + fields[0], lineno);
    }
  }
  if (!header.order || !header.mpl || !header.lambda || !header.mode)
    throw ParseError("incomplete model header", lineno);
  if (!first_section)
    throw ParseError("model has no n-gram sections", lineno);

  BackoffModel model(*header.mode, *header.order, *header.mpl,
                     *header.lambda);
  Vocabulary& vocab = model.mutable_vocab();
  PhraseLexicon& lexicon = model.mutable_lexicon();

  int section = *first_section;        // current \k-grams: order
  bool word_unigrams = false;          // inside \word-unigrams:
  std::vector<WordId> word_ids;
  std::vector<PhraseId> key;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (auto k = SectionOrder(line)) {
      if (*k > *header.order)
        throw ParseError("section order exceeds \\order", lineno);
      section = *k;
      word_unigrams = false;
      continue;
    }
    if (line == "\\word-unigrams:") {
      word_unigrams = true;
      continue;
    }

    std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError("expected 2 or 3 tab-separated fields", lineno);
    double log_prob = ParseDouble(fields[0], lineno);

    if (word_unigrams) {
      if (fields.size() != 2)
        throw ParseError("word-unigram record has no backoff field", lineno);
      if (fields[1] == Vocabulary::kUnkToken) model.SetWordUnkLog(log_prob);
      else model.SetWordUnigram(vocab.Add(fields[1]), log_prob);
      continue;
    }

    if (section == 1 && fields.size() == 2 &&
        fields[1] == Vocabulary::kUnkToken) {
      model.SetUnseenLog(log_prob);
      continue;
    }

    std::vector<std::string> phrases = SplitOn(fields[1], kPhraseSep);
    if (phrases.size() != static_cast<std::size_t>(section))
      throw ParseError("record arity does not match section order", lineno);
    key.clear();
    for (const std::string& phrase : phrases) {
      word_ids.clear();
      for (const std::string& word : Tokenize(phrase))
        word_ids.push_back(vocab.Add(word));
      if (word_ids.empty())
        throw ParseError("empty phrase in record", lineno);
      if (word_ids.size() > static_cast<std::size_t>(*header.mpl))
        throw ParseError("phrase longer than \\mpl", lineno);
      key.push_back(
          lexicon.Intern(std::span<const WordId>(word_ids.data(),
                                                 word_ids.size())));
    }
    std::span<const PhraseId> key_span(key.data(), key.size());
    if (log_prob != kLogZero) model.SetEntry(key_span, log_prob);
    if (fields.size() == 3)
      model.SetBackoff(key_span, ParseDouble(fields[2], lineno));
  }

  if (model.NumEntries(1) == 0)
    throw ParseError("model has no unigram records", lineno);
  model.FinalizeWordUnigrams();
  return model;
}

BackoffModel ReadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open model file: " + path);
  return ReadModel(in);
}

}  // namespace phraselm
