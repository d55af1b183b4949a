#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hring/model.hpp"

namespace hring {

/// Raised when an analysis routine is handed a configuration that breaks its
/// precondition (normally: the configuration does not validate).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A maximal tree of the nesting forest.
struct Nest {
  Ring root = 0;
  std::vector<Ring> members;  // root first, then descendants in preorder
  std::optional<std::string> pole;
  bool is_basic = false;

  bool operator==(const Nest&) const = default;
};

/// Run r, r+1, ..., r+m where r surrounds O_f and no pole, and r+m is the
/// first ring surrounding a pole.
struct Chain {
  std::vector<Ring> rings;
  std::string pole;
  bool is_basic = false;

  Ring start() const { return rings.front(); }
  Ring last() const { return rings.back(); }
  int length() const { return static_cast<int>(rings.size()); }

  bool operator==(const Chain&) const = default;
};

struct AnalysisSummary {
  int h = 0;  // relevant poles
  int n = 0;  // nests
  int l = 0;  // basic chain length
  bool basic_nest_has_pole = false;
  int independent_count = 0;  // poles with at least one chain
  Ring innermost = 0;         // H_1
  std::vector<Chain> chains;
  std::vector<Nest> nests;

  const Chain& basic_chain() const;
  const Nest& basic_nest() const;
};

/// One nest per forest root, ordered by root index.
std::vector<Nest> nest_partition(const Configuration& c);

/// Minimal ring surrounding O_f.
Ring innermost_ring(const Configuration& c);

Chain basic_chain(const Configuration& c);

/// One chain per ring that surrounds O_f and no pole, ordered by start ring.
std::vector<Chain> all_chains(const Configuration& c);

AnalysisSummary summarize(const Configuration& c);

/// Key order: h, n, l, basic_nest_has_pole, independent_count, H1, chains, nests.
nlohmann::ordered_json to_json(const AnalysisSummary& s);
nlohmann::ordered_json to_json(const Chain& ch);
nlohmann::ordered_json to_json(const Nest& nest);

}  // namespace hring
