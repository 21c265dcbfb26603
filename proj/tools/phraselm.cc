// Command-line front end: train models, measure perplexity, rerank n-best
// lists, score BLEU. Exit codes: 0 success, 1 internal failure, 2 usage or
// I/O error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phraselm/backoff_model.h"
#include "phraselm/bleu.h"
#include "phraselm/corpus.h"
#include "phraselm/errors.h"
#include "phraselm/model_io.h"
#include "phraselm/nbest.h"
#include "phraselm/phrase_lm.h"
#include "phraselm/word_lm.h"

namespace {

using namespace phraselm;

// A key plus free-form value for the report stream; plain output aligns the
// columns, --porcelain prints key=value.
struct ReportRow {
  std::string key;
  std::string value;
};

void PrintReport(const std::vector<ReportRow>& rows, bool porcelain) {
  if (porcelain) {
    for (const ReportRow& row : rows)
      std::cout << row.key << '=' << row.value << '\n';
    return;
  }
  std::size_t width = 0;
  for (const ReportRow& row : rows) width = std::max(width, row.key.size());
  for (const ReportRow& row : rows)
    std::cout << row.key << std::string(width - row.key.size() + 2, ' ')
              << row.value << '\n';
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Num(double v, bool porcelain) {
  return porcelain ? Exact(v) : Fixed(v);
}

int ResolveThreads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("PHRASELM_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1)
      throw UsageError(std::string("bad PHRASELM_THREADS value '") + env +
                       "'");
    return static_cast<int>(n);
  }
  return 1;
}

// word|sum|max against the model: word works on any model (all-singleton
// chains); sum and max need a phrase model. "auto" picks word for word
// models and sum for phrase models.
RerankMode ResolveMode(const std::string& flag, const BackoffModel& model) {
  if (flag == "auto")
    return model.mode() == LmMode::kWord ? RerankMode::kWord
                                         : RerankMode::kSum;
  RerankMode mode = flag == "word"  ? RerankMode::kWord
                    : flag == "sum" ? RerankMode::kSum
                                    : RerankMode::kMax;
  if (mode != RerankMode::kWord && model.mode() == LmMode::kWord)
    throw UsageError("--mode " + flag + " needs a phrase-mode model");
  return mode;
}

std::vector<std::vector<std::string>> LoadTokenLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(Tokenize(line));
  return lines;
}

struct TrainArgs {
  std::string corpus_path;
  std::string model_path;
  std::string mode = "phrase";
  std::string smoothing = "on";
  int order = 3;
  int mpl = 3;
  double lambda = 0.43;
  int gt_max = 5;
  bool literal_backoff = false;
  int threads = 0;
  bool porcelain = false;
};

void RunTrain(const TrainArgs& args) {
  TrainOptions options;
  options.order = args.order;
  options.mpl = args.mpl;
  options.mode =
      args.mode == "word" ? LmMode::kWord : LmMode::kPhrase;
  options.lambda = args.lambda;
  options.smoothing = args.smoothing == "on";
  options.literal_backoff = args.literal_backoff;
  options.gt_max = args.gt_max;
  options.threads = ResolveThreads(args.threads);

  auto start = std::chrono::steady_clock::now();
  Vocabulary vocab;
  Corpus corpus = LoadTrainingCorpusFile(args.corpus_path, vocab);
  BackoffModel model = BackoffModel::Train(corpus, std::move(vocab), options);
  WriteModelFile(model, args.model_path);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  std::vector<ReportRow> rows;
  rows.push_back({"mode", model.mode() == LmMode::kWord ? "word" : "phrase"});
  rows.push_back({"vocab", std::to_string(model.vocab().num_words())});
  for (int k = 1; k <= model.order(); ++k)
    rows.push_back({args.porcelain ? "ngrams_" + std::to_string(k)
                                   : std::to_string(k) + "-grams",
                    std::to_string(model.NumEntries(k))});
  PrintReport(rows, args.porcelain);
  // Wall time goes to stderr so stdout stays byte-identical across runs.
  std::fprintf(stderr, "trained in %.3fs\n", elapsed.count());
}

struct PplArgs {
  std::string model_path;
  std::string text_path;
  std::string mode = "auto";
  std::string max_select = "ppl";
  int max_sentence_length = 20;
  bool sweep_order = false;
  int threads = 0;
  bool porcelain = false;
};

void RunPpl(const PplArgs& args) {
  BackoffModel model = ReadModelFile(args.model_path);
  Corpus corpus = LoadTestCorpusFile(args.text_path, model.vocab());
  RerankMode mode = ResolveMode(args.mode, model);
  int threads = ResolveThreads(args.threads);

  ScoreOptions options;
  options.max_sentence_length = args.max_sentence_length;
  options.rule = args.max_select == "prob" ? MaxSelectRule::kMaxProbability
                                           : MaxSelectRule::kMinPerplexity;

  auto text_ppl = [&](int order_limit) {
    options.order_limit = order_limit;
    switch (mode) {
      case RerankMode::kWord:
        return WordTextPerplexity(model, corpus, order_limit, threads);
      case RerankMode::kSum:
        return PhraseTextPerplexity(model, corpus, PhraseMode::kSum, options,
                                    threads);
      default:
        return PhraseTextPerplexity(model, corpus, PhraseMode::kMax, options,
                                    threads);
    }
  };

  std::vector<ReportRow> rows;
  rows.push_back({"mode", mode == RerankMode::kWord  ? "word"
                          : mode == RerankMode::kSum ? "sum"
                                                     : "max"});
  rows.push_back({"sentences", std::to_string(corpus.sentences.size())});
  rows.push_back({"words", std::to_string(corpus.word_count)});
  if (args.sweep_order) {
    for (int k = 1; k <= model.order(); ++k)
      rows.push_back({args.porcelain ? "ppl_" + std::to_string(k)
                                     : "ppl[order " + std::to_string(k) + "]",
                      Num(text_ppl(k), args.porcelain)});
  } else {
    rows.push_back({"ppl", Num(text_ppl(0), args.porcelain)});
  }
  PrintReport(rows, args.porcelain);
}

struct RerankArgs {
  std::string model_path;
  std::string nbest_path;
  std::string refs_path;
  std::string out_path;
  std::string mode = "auto";
  std::string max_select = "ppl";
  int max_sentence_length = 20;
  std::optional<double> combine_alpha;
  int threads = 0;
  bool porcelain = false;
};

void RunRerank(const RerankArgs& args) {
  BackoffModel model = ReadModelFile(args.model_path);
  NBestList nbest = ParseNBestFile(args.nbest_path);
  std::vector<std::vector<std::string>> references =
      LoadTokenLines(args.refs_path);
  if (references.size() != nbest.segments.size())
    throw UsageError("reference count (" +
                     std::to_string(references.size()) +
                     ") does not match n-best segment count (" +
                     std::to_string(nbest.segments.size()) + ")");
  RerankMode mode = ResolveMode(args.mode, model);

  ScoreOptions options;
  options.max_sentence_length = args.max_sentence_length;
  options.rule = args.max_select == "prob" ? MaxSelectRule::kMaxProbability
                                           : MaxSelectRule::kMinPerplexity;
  std::vector<std::vector<RescoredEntry>> scores =
      Rescore(model, nbest, mode, options, ResolveThreads(args.threads));

  SelectionOptions selection;
  selection.combine_alpha = args.combine_alpha;
  std::vector<std::size_t> picks = SelectBest(nbest, scores, selection);

  std::size_t fallbacks = 0;
  for (const auto& segment : scores)
    for (const RescoredEntry& entry : segment)
      if (entry.word_fallback) ++fallbacks;

  std::vector<std::vector<std::string>> baseline, reranked;
  for (std::size_t s = 0; s < nbest.segments.size(); ++s) {
    baseline.push_back(nbest.segments[s].entries.front().hypothesis);
    reranked.push_back(nbest.segments[s].entries[picks[s]].hypothesis);
  }

  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out) throw UsageError("cannot write selections: " + args.out_path);
    for (const auto& hyp : reranked) out << Detokenize(hyp) << '\n';
    out.flush();
    if (!out) throw UsageError("error writing selections: " + args.out_path);
  }

  BleuReport base_bleu = CorpusBleu(baseline, references);
  BleuReport lm_bleu = CorpusBleu(reranked, references);

  std::vector<ReportRow> rows;
  rows.push_back({"mode", mode == RerankMode::kWord  ? "word"
                          : mode == RerankMode::kSum ? "sum"
                                                     : "max"});
  rows.push_back({"segments", std::to_string(nbest.segments.size())});
  rows.push_back({"entries", std::to_string(nbest.total_entries)});
  rows.push_back({"fallbacks", std::to_string(fallbacks)});
  rows.push_back(
      {args.porcelain ? "bleu_baseline" : "bleu (rank-1 baseline)",
       Num(base_bleu.bleu, args.porcelain)});
  rows.push_back({args.porcelain ? "bleu_reranked" : "bleu (reranked)",
                  Num(lm_bleu.bleu, args.porcelain)});
  rows.push_back({args.porcelain ? "bleu_delta" : "bleu delta",
                  Num(lm_bleu.bleu - base_bleu.bleu, args.porcelain)});
  PrintReport(rows, args.porcelain);
}

struct BleuArgs {
  std::string hyp_path;
  std::string ref_path;
  bool porcelain = false;
};

void RunBleu(const BleuArgs& args) {
  BleuReport report =
      CorpusBleu(LoadTokenLines(args.hyp_path), LoadTokenLines(args.ref_path));
  std::vector<ReportRow> rows;
  rows.push_back({"bleu", Num(report.bleu, args.porcelain)});
  for (std::size_t n = 0; n < report.precisions.size(); ++n)
    rows.push_back({"p" + std::to_string(n + 1),
                    Num(report.precisions[n], args.porcelain)});
  rows.push_back({"bp", Num(report.brevity_penalty, args.porcelain)});
  rows.push_back(
      {args.porcelain ? "hyp_length" : "hyp-length",
       std::to_string(report.hyp_length)});
  rows.push_back(
      {args.porcelain ? "ref_length" : "ref-length",
       std::to_string(report.ref_length)});
  PrintReport(rows, args.porcelain);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phrase-based n-gram language modeling toolkit"};
  app.require_subcommand(1);

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "estimate a model");
  train->add_option("-c,--corpus", train_args.corpus_path, "training corpus")
      ->required();
  train->add_option("-m,--model", train_args.model_path, "output model file")
      ->required();
  train->add_option("--order", train_args.order, "max n-gram order")
      ->check(CLI::PositiveNumber);
  train->add_option("--mpl", train_args.mpl, "max words per phrase")
      ->check(CLI::PositiveNumber);
  train->add_option("--mode", train_args.mode, "unit type")
      ->check(CLI::IsMember({"word", "phrase", "sum", "max"}));
  train->add_option("--lambda", train_args.lambda,
                    "phrase/word-product interpolation weight")
      ->check(CLI::Range(0.0, 1.0));
  train->add_option("--smoothing", train_args.smoothing,
                    "Good-Turing smoothing and interpolation")
      ->check(CLI::IsMember({"on", "off"}));
  train->add_flag("--paper-literal-backoff", train_args.literal_backoff,
                  "unnormalized backoff weights d = 1 - sum(alpha)");
  train->add_option("--gt-max", train_args.gt_max,
                    "largest count the Good-Turing formula adjusts")
      ->check(CLI::PositiveNumber);
  train->add_option("--threads", train_args.threads,
                    "worker threads (default $PHRASELM_THREADS or 1)");
  train->add_flag("--porcelain", train_args.porcelain,
                  "machine-readable key=value output");
  train->callback([&] {
    // sum/max are scoring modes of the one phrase model.
    if (train_args.mode == "sum" || train_args.mode == "max")
      train_args.mode = "phrase";
    RunTrain(train_args);
  });

  PplArgs ppl_args;
  CLI::App* ppl = app.add_subcommand("ppl", "text perplexity");
  ppl->add_option("-m,--model", ppl_args.model_path, "model file")
      ->required();
  ppl->add_option("-t,--text", ppl_args.text_path, "test corpus")
      ->required();
  ppl->add_option("--mode", ppl_args.mode, "scoring model")
      ->check(CLI::IsMember({"auto", "word", "sum", "max"}));
  ppl->add_flag("--sweep-order", ppl_args.sweep_order,
                "one row per order limit 1..order");
  ppl->add_option("--max-select", ppl_args.max_select,
                  "max-model segmentation choice: min-perplexity or max-prob")
      ->check(CLI::IsMember({"ppl", "prob"}));
  ppl->add_option("--max-sentence-length", ppl_args.max_sentence_length,
                  "refuse phrase scoring past this length")
      ->check(CLI::PositiveNumber);
  ppl->add_option("--threads", ppl_args.threads,
                  "worker threads (default $PHRASELM_THREADS or 1)");
  ppl->add_flag("--porcelain", ppl_args.porcelain,
                "machine-readable key=value output");
  ppl->callback([&] { RunPpl(ppl_args); });

  RerankArgs rerank_args;
  CLI::App* rerank =
      app.add_subcommand("rerank", "rescore an n-best list and report BLEU");
  rerank->add_option("-m,--model", rerank_args.model_path, "model file")
      ->required();
  rerank->add_option("-n,--nbest", rerank_args.nbest_path, "n-best list")
      ->required();
  rerank->add_option("-r,--refs", rerank_args.refs_path,
                     "references, one per segment")
      ->required();
  rerank->add_option("-o,--out", rerank_args.out_path,
                     "write selected hypotheses here");
  rerank->add_option("--mode", rerank_args.mode, "scoring model")
      ->check(CLI::IsMember({"auto", "word", "sum", "max"}));
  rerank->add_option("--max-select", rerank_args.max_select,
                     "max-model segmentation choice")
      ->check(CLI::IsMember({"ppl", "prob"}));
  rerank->add_option("--max-sentence-length",
                     rerank_args.max_sentence_length,
                     "word-fallback threshold for phrase scoring")
      ->check(CLI::PositiveNumber);
  rerank
      ->add_option("--combine", rerank_args.combine_alpha,
                   "rank by alpha*decoder + (1-alpha)*LM")
      ->check(CLI::Range(0.0, 1.0));
  rerank->add_option("--threads", rerank_args.threads,
                     "worker threads (default $PHRASELM_THREADS or 1)");
  rerank->add_flag("--porcelain", rerank_args.porcelain,
                   "machine-readable key=value output");
  rerank->callback([&] { RunRerank(rerank_args); });

  BleuArgs bleu_args;
  CLI::App* bleu = app.add_subcommand("bleu", "corpus BLEU");
  bleu->add_option("--hyp", bleu_args.hyp_path, "hypotheses, one per line")
      ->required();
  bleu->add_option("--ref", bleu_args.ref_path, "references, one per line")
      ->required();
  bleu->add_flag("--porcelain", bleu_args.porcelain,
                 "machine-readable key=value output");
  bleu->callback([&] { RunBleu(bleu_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
