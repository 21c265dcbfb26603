#include "phraselm/count_table.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "phraselm/errors.h"

namespace phraselm {

void CountTable::Add(std::span<const PhraseId> ngram, std::uint64_t count) {
  if (ngram.empty() || ngram.size() > static_cast<std::size_t>(max_order_))
    throw std::logic_error("n-gram order out of range");
  Node* node = &root_;
  for (PhraseId id : ngram) node = &node->children[id];
  node->count += count;
}

std::uint64_t CountTable::Count(std::span<const PhraseId> ngram) const {
  const Node* node = &root_;
  for (PhraseId id : ngram) {
    if (id == kUnknownPhrase) return 0;
    auto it = node->children.find(id);
    if (it == node->children.end()) return 0;
    node = &it->second;
  }
  return node->count;
}

std::uint64_t CountTable::NumNgrams(int order) const {
  std::uint64_t n = 0;
  ForEach(order, [&](std::span<const PhraseId>, std::uint64_t) { ++n; });
  return n;
}

std::uint64_t CountTable::TotalUnigramMass() const {
  std::uint64_t mass = 0;
  ForEach(1, [&](std::span<const PhraseId> key, std::uint64_t count) {
    if (key[0] != PhraseLexicon::kBosPhrase) mass += count;
  });
  return mass;
}

void CountTable::Merge(const CountTable& other) {
  std::vector<PhraseId> remap(other.lexicon_.size());
  for (std::size_t id = 0; id < other.lexicon_.size(); ++id)
    remap[id] = lexicon_.Intern(other.lexicon_.Words(static_cast<PhraseId>(id)));

  std::vector<PhraseId> key;
  for (int order = 1; order <= max_order_; ++order) {
    other.ForEach(order, [&](std::span<const PhraseId> ngram,
                             std::uint64_t count) {
      key.clear();
      for (PhraseId id : ngram) key.push_back(remap[id]);
      Add(std::span<const PhraseId>(key.data(), key.size()), count);
    });
  }
}

void CountTable::Dump(std::ostream& out, const Vocabulary& vocab) const {
  for (int order = 1; order <= max_order_; ++order) {
    ForEach(order, [&](std::span<const PhraseId> ngram, std::uint64_t count) {
      out << count << '\t';
      for (std::size_t i = 0; i < ngram.size(); ++i) {
        if (i) out << '\x1f';
        std::string text = lexicon_.Render(ngram[i], vocab);
        if (text.find('\x1f') != std::string::npos)
          throw UsageError("word contains reserved byte 0x1f");
        out << text;
      }
      out << '\n';
    });
  }
}

namespace {

void CountPhraseRange(const Corpus& corpus, std::size_t begin, std::size_t end,
                      int max_order, int mpl, CountTable& table) {
  PhraseLexicon& lex = table.lexicon();
  // buf[0] is pinned to the begin sentinel so bos-prefixed tuples are a
  // one-slot-wider view of the same buffer.
  std::vector<PhraseId> buf(static_cast<std::size_t>(max_order) + 1);
  buf[0] = PhraseLexicon::kBosPhrase;

  for (std::size_t s = begin; s < end; ++s) {
    const Sentence& sentence = corpus.sentences[s];
    table.Add(std::span<const PhraseId>(buf.data(), 1));  // [bos]
    const int m = static_cast<int>(sentence.length());
    const WordId* words = sentence.tokens.data();
    auto extend = [&](auto&& self, int b0, int prev, int depth) -> void {
      int limit = std::min(prev + mpl, m);
      for (int next = prev + 1; next <= limit; ++next) {
        buf[depth + 1] =
            lex.Intern(std::span<const WordId>(words + prev, next - prev));
        table.Add(std::span<const PhraseId>(buf.data() + 1, depth + 1));
        if (b0 == 0 && depth + 2 <= max_order)
          table.Add(std::span<const PhraseId>(buf.data(), depth + 2));
        if (depth + 1 < max_order) self(self, b0, next, depth + 1);
      }
    };
    for (int b0 = 0; b0 < m; ++b0) extend(extend, b0, b0, 0);
  }
}

void CountWordRange(const Corpus& corpus, std::size_t begin, std::size_t end,
                    int max_order, CountTable& table) {
  PhraseLexicon& lex = table.lexicon();
  std::vector<PhraseId> units;
  for (std::size_t s = begin; s < end; ++s) {
    const Sentence& sentence = corpus.sentences[s];
    units.clear();
    units.push_back(PhraseLexicon::kBosPhrase);
    for (const WordId& w : sentence.tokens)
      units.push_back(lex.Intern(std::span<const WordId>(&w, 1)));
    const std::size_t n = units.size();
    for (std::size_t start = 0; start < n; ++start) {
      std::size_t max_len = std::min<std::size_t>(max_order, n - start);
      for (std::size_t len = 1; len <= max_len; ++len)
        table.Add(std::span<const PhraseId>(units.data() + start, len));
    }
  }
}

// Contiguous shards counted independently, then merged in shard order.
// Interning order within each shard matches the sequential order, so the
// merged lexicon (and thus every traversal) is identical for any thread
// count.
template <typename CountRange>
CountTable ShardedCount(const Corpus& corpus, int max_order, int mpl,
                        int threads, CountRange&& count_range) {
  CountTable table(max_order, mpl);
  std::size_t n = corpus.sentences.size();
  if (threads <= 1 || n < 2) {
    count_range(corpus, 0, n, table);
    return table;
  }
  std::size_t shards = std::min<std::size_t>(threads, n);
  std::vector<CountTable> parts;
  parts.reserve(shards);
  for (std::size_t i = 0; i < shards; ++i)
    parts.emplace_back(max_order, mpl);
  std::vector<std::thread> workers;
  std::size_t chunk = (n + shards - 1) / shards;
  for (std::size_t i = 0; i < shards; ++i) {
    std::size_t begin = i * chunk;
    std::size_t end = std::min(n, begin + chunk);
    workers.emplace_back([&, i, begin, end] {
      count_range(corpus, begin, end, parts[i]);
    });
  }
  for (std::thread& t : workers) t.join();
  for (const CountTable& part : parts) table.Merge(part);
  return table;
}

}  // namespace

CountTable CountPhraseNgrams(const Corpus& corpus, int max_order, int mpl,
                             int threads) {
  if (max_order < 1 || mpl < 1)
    throw UsageError("max_order and mpl must be at least 1");
  return ShardedCount(corpus, max_order, mpl, threads,
                      [max_order, mpl](const Corpus& c, std::size_t b,
                                       std::size_t e, CountTable& t) {
                        CountPhraseRange(c, b, e, max_order, mpl, t);
                      });
}

CountTable CountWordNgrams(const Corpus& corpus, int max_order, int threads) {
  if (max_order < 1) throw UsageError("max_order must be at least 1");
  return ShardedCount(corpus, max_order, 1, threads,
                      [max_order](const Corpus& c, std::size_t b,
                                  std::size_t e, CountTable& t) {
                        CountWordRange(c, b, e, max_order, t);
                      });
}

CountsOfCounts ComputeCountsOfCounts(const CountTable& table, int order) {
  if (order < 1 || order > table.max_order())
    throw UsageError("counts-of-counts order out of range");
  CountsOfCounts coc;
  table.ForEach(order, [&](std::span<const PhraseId> ngram,
                           std::uint64_t count) {
    for (PhraseId id : ngram)
      if (id == PhraseLexicon::kBosPhrase) return;
    ++coc.n_r[count];
    coc.n0 += count;
  });
  return coc;
}

}  // namespace phraselm
