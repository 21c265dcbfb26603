#ifndef PHRASELM_ERRORS_H_
#define PHRASELM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace phraselm {

// Bad flags, unreadable files, malformed inputs.  The CLI maps these to
// exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data in an input stream.  Carries a 1-based line number when
// one is known (0 otherwise).
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : UsageError(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A model cannot be estimated from the given data (empty corpus, empty
// histogram where the discount formula needs a denominator, ...).
class TrainError : public UsageError {
 public:
  explicit TrainError(const std::string& what) : UsageError(what) {}
};

// A quantity is undefined for the given arguments (perplexity of an empty
// text, BLEU of an empty corpus).
class DomainError : public UsageError {
 public:
  explicit DomainError(const std::string& what) : UsageError(what) {}
};

// A sentence exceeds the phrase-scoring length cap.  Segmentation counts grow
// roughly as 1.84^m, so long sentences are refused instead of truncated.
// Reranking catches this to fall back to word-style scoring.
class SentenceTooLongError : public UsageError {
 public:
  explicit SentenceTooLongError(const std::string& what) : UsageError(what) {}
};

}  // namespace phraselm

#endif  // PHRASELM_ERRORS_H_
