#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hring/enumerator.hpp"
#include "hring/model.hpp"

namespace hring {

/// Graphviz description of the nesting forest: one node per ring, one edge per
/// parent link, one cluster per nest. Deterministic for equal configurations.
std::string emit_dot(const Configuration& c);

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Lazy reader over a JSONL corpus, one configuration document per line.
/// Blank lines are skipped. A `{"stats": ...}` line ends the corpus and is kept
/// as the trailer.
class CorpusReader {
 public:
  /// With `skip_malformed` bad lines are recorded in errors() and skipped;
  /// otherwise next() throws CorpusError.
  explicit CorpusReader(std::istream& in, bool skip_malformed = false);

  std::optional<Configuration> next();

  std::size_t line() const { return line_; }
  const std::vector<std::string>& errors() const { return errors_; }
  const std::optional<nlohmann::json>& trailer() const { return trailer_; }

 private:
  std::istream& in_;
  bool skip_malformed_;
  std::size_t line_ = 0;
  bool done_ = false;
  std::vector<std::string> errors_;
  std::optional<nlohmann::json> trailer_;
};

/// Writes configurations in canonical form, one compact document per line.
class CorpusWriter {
 public:
  explicit CorpusWriter(std::ostream& out) : out_(out) {}

  void write(const Configuration& c);
  void write_trailer(const EnumerationStats& stats);
  std::size_t written() const { return written_; }

 private:
  std::ostream& out_;
  std::size_t written_ = 0;
};

/// Reads every configuration of a corpus file.
std::vector<Configuration> read_corpus(const std::string& path, bool skip_malformed = false);

}  // namespace hring
