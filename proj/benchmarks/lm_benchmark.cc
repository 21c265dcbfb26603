#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <string>

#include "phraselm/backoff_model.h"
#include "phraselm/corpus.h"
#include "phraselm/count_table.h"
#include "phraselm/phrase_lm.h"
#include "phraselm/word_lm.h"

namespace phraselm {
namespace {

std::string SyntheticText(int sentences, int vocab, int max_len,
                          std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(3, max_len);
  std::uniform_int_distribution<int> word(0, vocab - 1);
  std::string text;
  for (int s = 0; s < sentences; ++s) {
    int m = len(rng);
    for (int i = 0; i < m; ++i) {
      if (i) text += ' ';
      text += "w" + std::to_string(word(rng));
    }
    text += '\n';
  }
  return text;
}

struct Fixture {
  Vocabulary vocab;
  Corpus corpus;
  BackoffModel model;

  static Fixture Make() {
    std::istringstream in(SyntheticText(2000, 200, 12, 17u));
    Vocabulary vocab;
    Corpus corpus = LoadTrainingCorpus(in, vocab);
    BackoffModel model =
        BackoffModel::Train(corpus, vocab, TrainOptions{});
    return Fixture{std::move(vocab), std::move(corpus), std::move(model)};
  }
};

Fixture& Shared() {
  static Fixture fixture = Fixture::Make();
  return fixture;
}

void BM_CountPhraseNgrams(benchmark::State& state) {
  Fixture& f = Shared();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CountTable counts = CountPhraseNgrams(f.corpus, 3, 3, threads);
    benchmark::DoNotOptimize(counts.NumNgrams(3));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(f.corpus.word_count));
}
BENCHMARK(BM_CountPhraseNgrams)->Arg(1)->Arg(4);

void BM_TrainPhraseModel(benchmark::State& state) {
  Fixture& f = Shared();
  TrainOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BackoffModel model = BackoffModel::Train(f.corpus, f.vocab, options);
    benchmark::DoNotOptimize(model.NumEntries(1));
  }
}
BENCHMARK(BM_TrainPhraseModel)->Arg(1)->Arg(4);

Sentence FixedLengthSentence(const Vocabulary& vocab, int m) {
  std::mt19937 rng(23u);
  std::uniform_int_distribution<int> word(0, 199);
  Sentence s;
  for (int i = 0; i < m; ++i)
    s.tokens.push_back(vocab.IdOrUnk("w" + std::to_string(word(rng))));
  return s;
}

void BM_SumSentence(benchmark::State& state) {
  Fixture& f = Shared();
  Sentence s =
      FixedLengthSentence(f.vocab, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(SumModelProb(f.model, s).log_prob);
}
BENCHMARK(BM_SumSentence)->Arg(6)->Arg(10)->Arg(14)->Arg(18);

void BM_MaxSentence(benchmark::State& state) {
  Fixture& f = Shared();
  Sentence s =
      FixedLengthSentence(f.vocab, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(MaxModelProb(f.model, s).log_prob);
}
BENCHMARK(BM_MaxSentence)->Arg(6)->Arg(10)->Arg(14)->Arg(18);

void BM_WordTextPerplexity(benchmark::State& state) {
  Fixture& f = Shared();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        WordTextPerplexity(f.model, f.corpus, 0, threads));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(f.corpus.word_count));
}
BENCHMARK(BM_WordTextPerplexity)->Arg(1)->Arg(4);

}  // namespace
}  // namespace phraselm

BENCHMARK_MAIN();
