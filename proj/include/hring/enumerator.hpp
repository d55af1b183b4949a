#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hring/analysis.hpp"
#include "hring/model.hpp"

namespace hring {

/// Largest period enumerated without `allow_large`.
inline constexpr int kDefaultMaxPeriod = 8;
/// Largest period accepted by the brute-force reference.
inline constexpr int kBruteForceMaxPeriod = 6;
/// Largest Fatou period for marker enumeration.
inline constexpr int kMaxFatouQ = 4;

struct EnumerateOptions {
  std::optional<int> h;
  std::optional<bool> basic_nest_has_pole;
  std::function<bool(const AnalysisSummary&)> filter;
  /// When positive, every valid configuration is expanded with all Fatou
  /// marker placements of this period that satisfy F1-F3.
  int fatou_q = 0;
  unsigned workers = 1;
  /// Permits p > kDefaultMaxPeriod. Such runs stream results in search order
  /// instead of sorting them.
  bool allow_large = false;
};

struct StratumKey {
  int h = 0;
  bool basic_nest_has_pole = false;
  int n = 0;
  int l = 0;

  auto operator<=>(const StratumKey&) const = default;
};

struct EnumerationStats {
  int p = 0;                 // largest period covered
  std::vector<int> periods;  // every period covered, ascending
  std::size_t total_canonical_count = 0;
  std::map<StratumKey, std::size_t> counts_by;
  /// (h, basic_nest_has_pole) -> first configuration seen at the smallest period.
  std::map<std::pair<int, bool>, Configuration> min_p_witnesses;

  void record(const Configuration& c, const AnalysisSummary& s);
  void merge(const EnumerationStats& other);
};

using ConfigSink = std::function<void(const Configuration&, const AnalysisSummary&)>;

/// Emits every valid configuration of period p exactly once, in canonical
/// rotation form with poles named w1..wh by host. Output order is ascending
/// encoding unless streaming. Throws std::invalid_argument for p < 3, p above
/// budget, or fatou_q > kMaxFatouQ.
EnumerationStats enumerate_configs(int p, const EnumerateOptions& opts, const ConfigSink& sink);
EnumerationStats enumerate_configs(int p, const EnumerateOptions& opts = {});

/// Naive generator: every parent array, omitted host and pole host subset,
/// filtered by validate and deduplicated by canonical form. Sorted by encoding.
std::vector<Configuration> brute_force_reference(int p);

enum class WitnessCriterion { bound_basic_pole, bound_pole_free, equality_case1, equality_case2 };

std::string to_string(WitnessCriterion c);
std::optional<WitnessCriterion> parse_criterion(std::string_view s);

/// True iff the configuration has h relevant poles and meets the criterion's
/// structural hypotheses.
bool matches(WitnessCriterion crit, int h, const Configuration& c, const AnalysisSummary& s);

/// Smallest-period valid configuration with h poles matching the criterion,
/// scanning p = 3..max_p. Throws std::logic_error if a witness beats the
/// period lower bound.
std::optional<Configuration> search_witness(int h, int max_p, WitnessCriterion crit,
                                            unsigned workers = 1);

/// Renames poles w1..wh in host order.
Configuration with_standard_pole_ids(const Configuration& c);

nlohmann::ordered_json to_json(const EnumerationStats& s);

}  // namespace hring
