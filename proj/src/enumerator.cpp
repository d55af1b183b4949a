#include "hring/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "hring/theorems.hpp"

namespace hring {

namespace {

constexpr int kUnassigned = -2;
constexpr int kNoParent = -1;

// Exhausts the forests whose O_f-surrounder chain is fixed. The omitted host is
// ring 0: every rotation orbit of valid configurations has exactly one member
// with that property, so no further deduplication is needed.
//
// A4 and A7 together force the set of pole-surrounding rings to be
// R = {k - 1 : k surrounds O_f}. R must be closed under taking parents and
// form a single root path inside each tree (A3), so the pole hosts are the
// R-rings without an R-child.
class ForestSearch {
 public:
  ForestSearch(int p, const std::vector<Ring>& chain,
               const std::function<void(const Configuration&)>& emit)
      : p_(p), parent_(p, kUnassigned), r_children_(p, 0), emit_(emit) {
    for (Ring r : chain) omitted_ |= ring_bit(r);
    for (Ring r : chain) poles_ |= ring_bit((r + p - 1) % p);
    consistent_ = !contains(poles_, chain.front());
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const bool last = i + 1 == chain.size();
      parent_[chain[i]] = last ? kNoParent : chain[i + 1];
      if (!last && contains(poles_, chain[i])) {
        // R meets the chain in an upper segment.
        consistent_ = consistent_ && contains(poles_, chain[i + 1]);
        ++r_children_[chain[i + 1]];
      }
    }
    for (Ring r = 0; r < p; ++r)
      if (!contains(omitted_, r)) free_.push_back(r);
  }

  void run() {
    if (consistent_) assign(0);
  }

 private:
  bool closes_cycle(Ring x, Ring y) const {
    for (int r = y; r >= 0; r = parent_[r]) {
      if (r == x) return true;
    }
    return false;
  }

  void assign(std::size_t idx) {
    if (idx == free_.size()) {
      leaf();
      return;
    }
    const Ring x = free_[idx];
    const bool x_in_r = contains(poles_, x);

    parent_[x] = kNoParent;
    assign(idx + 1);

    for (Ring y = 0; y < p_; ++y) {
      if (y == x) continue;
      if (x_in_r && (!contains(poles_, y) || r_children_[y] > 0)) continue;
      if (closes_cycle(x, y)) continue;
      parent_[x] = y;
      if (x_in_r) ++r_children_[y];
      assign(idx + 1);
      if (x_in_r) --r_children_[y];
    }
    parent_[x] = kUnassigned;
  }

  void leaf() {
    std::vector<Ring> hosts;
    for (Ring r : members_of(poles_))
      if (r_children_[r] == 0) hosts.push_back(r);
    if (hosts.size() < 2) return;

    std::vector<RingSet> anc(p_, 0);
    for (Ring r = 0; r < p_; ++r)
      for (int a = parent_[r]; a >= 0; a = parent_[a]) anc[r] |= ring_bit(a);

    // A6 on raw arrays before paying for a Configuration.
    for (Ring b = 0; b < p_; ++b) {
      const Ring sb = (b + 1) % p_;
      for (Ring a : members_of(anc[b] & ~poles_)) {
        if (!contains(anc[sb], (a + 1) % p_)) return;
      }
    }

    std::vector<std::optional<Ring>> parent(p_);
    for (Ring r = 0; r < p_; ++r)
      if (parent_[r] >= 0) parent[r] = parent_[r];
    std::vector<Pole> poles;
    for (std::size_t i = 0; i < hosts.size(); ++i) {
      poles.push_back({"w" + std::to_string(i + 1), hosts[i]});
    }
    Configuration c(p_, std::move(parent), std::move(poles), 0);
    if (!validate(c).ok()) return;
    emit_(c);
  }

  int p_;
  std::vector<int> parent_;
  std::vector<int> r_children_;
  std::vector<Ring> free_;
  RingSet omitted_ = 0;
  RingSet poles_ = 0;
  bool consistent_ = true;
  const std::function<void(const Configuration&)>& emit_;
};

// All ancestor chains 0 = a_0 -> a_1 -> ... -> a_m of the omitted host.
// Ring 1 never appears: it would put ring 0 into R, against A5.
void collect_chains(int p, std::vector<Ring>& chain, std::vector<std::vector<Ring>>& out) {
  out.push_back(chain);
  for (Ring x = 2; x < p; ++x) {
    if (std::find(chain.begin(), chain.end(), x) != chain.end()) continue;
    chain.push_back(x);
    collect_chains(p, chain, out);
    chain.pop_back();
  }
}

struct Found {
  Encoding key;
  Configuration config;
  AnalysisSummary summary;
};

bool accepts(const EnumerateOptions& opts, const AnalysisSummary& s) {
  if (opts.h && s.h != *opts.h) return false;
  if (opts.basic_nest_has_pole && s.basic_nest_has_pole != *opts.basic_nest_has_pole) return false;
  if (opts.filter && !opts.filter(s)) return false;
  return true;
}

void expand_fatou(const Configuration& base, int q,
                  const std::function<void(const Configuration&)>& out) {
  const int p = base.period();
  const int choices = p + 2;
  std::vector<int> digit(q, 0);
  while (true) {
    FatouCycle u;
    u.q = q;
    for (int d : digit) {
      FatouMarker m;
      if (d < p) {
        m.kind = MarkerKind::ring;
        m.host = d;
      } else {
        m.kind = d == p ? MarkerKind::free_bounded : MarkerKind::unbounded;
      }
      u.markers.push_back(m);
    }
    Configuration c = base.with_fatou(std::move(u));
    if (validate(c).ok()) out(c);

    int i = 0;
    while (i < q && ++digit[i] == choices) digit[i++] = 0;
    if (i == q) break;
  }
}

// Canonicalizes a raw hit, applies filters and Fatou expansion.
void finish(const Configuration& raw, const EnumerateOptions& opts,
            const std::function<void(Found)>& out) {
  Configuration base = with_standard_pole_ids(canonical_form(raw));
  AnalysisSummary s = summarize(base);
  if (!accepts(opts, s)) return;
  if (opts.fatou_q <= 0) {
    out(Found{encode(base), base, std::move(s)});
    return;
  }
  expand_fatou(base, opts.fatou_q, [&](const Configuration& c) {
    Configuration canon = with_standard_pole_ids(canonical_form(c));
    out(Found{encode(canon), canon, summarize(canon)});
  });
}

}  // namespace

Configuration with_standard_pole_ids(const Configuration& c) {
  std::vector<Pole> poles(c.poles().begin(), c.poles().end());
  for (std::size_t i = 0; i < poles.size(); ++i) poles[i].id = "w" + std::to_string(i + 1);
  return Configuration(c.period(), c.parents(), std::move(poles), c.omitted_host(), c.fatou());
}

void EnumerationStats::record(const Configuration& c, const AnalysisSummary& s) {
  ++total_canonical_count;
  ++counts_by[StratumKey{s.h, s.basic_nest_has_pole, s.n, s.l}];
  const auto key = std::make_pair(s.h, s.basic_nest_has_pole);
  auto it = min_p_witnesses.find(key);
  if (it == min_p_witnesses.end()) {
    min_p_witnesses.emplace(key, c);
  } else if (c.period() < it->second.period()) {
    it->second = c;
  }
}

void EnumerationStats::merge(const EnumerationStats& other) {
  p = std::max(p, other.p);
  periods.insert(periods.end(), other.periods.begin(), other.periods.end());
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
  total_canonical_count += other.total_canonical_count;
  for (const auto& [k, v] : other.counts_by) counts_by[k] += v;
  for (const auto& [k, c] : other.min_p_witnesses) {
    auto it = min_p_witnesses.find(k);
    if (it == min_p_witnesses.end()) {
      min_p_witnesses.emplace(k, c);
    } else if (c.period() < it->second.period()) {
      it->second = c;
    }
  }
}

EnumerationStats enumerate_configs(int p, const EnumerateOptions& opts, const ConfigSink& sink) {
  if (p < 3) throw std::invalid_argument("enumeration requires p >= 3");
  if (p > kDefaultMaxPeriod && !opts.allow_large) {
    throw std::invalid_argument("p = " + std::to_string(p) + " exceeds the default budget of " +
                                std::to_string(kDefaultMaxPeriod) + "; pass allow_large");
  }
  if (p > kMaxPeriod) throw std::invalid_argument("p exceeds the supported maximum");
  if (opts.fatou_q > kMaxFatouQ) {
    throw std::invalid_argument("Fatou marker enumeration supports q <= " +
                                std::to_string(kMaxFatouQ));
  }

  EnumerationStats stats;
  stats.p = p;
  stats.periods = {p};

  std::vector<std::vector<Ring>> chains;
  std::vector<Ring> seed{0};
  collect_chains(p, seed, chains);

  if (p > kDefaultMaxPeriod) {
    // Streaming: one worker, search order.
    for (const auto& chain : chains) {
      std::function<void(const Configuration&)> emit = [&](const Configuration& raw) {
        finish(raw, opts, [&](Found f) {
          stats.record(f.config, f.summary);
          if (sink) sink(f.config, f.summary);
        });
      };
      ForestSearch(p, chain, emit).run();
    }
    return stats;
  }

  std::vector<std::vector<Found>> per_branch(chains.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < chains.size(); i = next++) {
      std::function<void(const Configuration&)> emit = [&](const Configuration& raw) {
        finish(raw, opts, [&](Found f) { per_branch[i].push_back(std::move(f)); });
      };
      ForestSearch(p, chains[i], emit).run();
    }
  };
  const unsigned workers = std::max(1U, opts.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<Found> all;
  for (auto& branch : per_branch)
    for (auto& f : branch) all.push_back(std::move(f));
  std::sort(all.begin(), all.end(), [](const Found& a, const Found& b) { return a.key < b.key; });
  auto dup = std::adjacent_find(all.begin(), all.end(),
                                [](const Found& a, const Found& b) { return a.key == b.key; });
  if (dup != all.end()) throw std::logic_error("enumerator produced a rotation-equivalent duplicate");

  for (const auto& f : all) {
    stats.record(f.config, f.summary);
    if (sink) sink(f.config, f.summary);
  }
  return stats;
}

EnumerationStats enumerate_configs(int p, const EnumerateOptions& opts) {
  return enumerate_configs(p, opts, nullptr);
}

std::string to_string(WitnessCriterion c) {
  switch (c) {
    case WitnessCriterion::bound_basic_pole: return "bound_basic_pole";
    case WitnessCriterion::bound_pole_free: return "bound_pole_free";
    case WitnessCriterion::equality_case1: return "equality_case1";
    case WitnessCriterion::equality_case2: return "equality_case2";
  }
  return "?";
}

std::optional<WitnessCriterion> parse_criterion(std::string_view s) {
  for (auto c : {WitnessCriterion::bound_basic_pole, WitnessCriterion::bound_pole_free,
                 WitnessCriterion::equality_case1, WitnessCriterion::equality_case2}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

bool matches(WitnessCriterion crit, int h, const Configuration& c, const AnalysisSummary& s) {
  if (s.h != h) return false;
  bool outermost = true;
  for (Ring r : members_of(c.pole_surrounders())) outermost = outermost && c.is_root(r);
  switch (crit) {
    case WitnessCriterion::bound_basic_pole: return s.basic_nest_has_pole;
    case WitnessCriterion::bound_pole_free: return !s.basic_nest_has_pole;
    case WitnessCriterion::equality_case1: return outermost && s.l == h;
    case WitnessCriterion::equality_case2:
      return outermost && s.l == h + 1 && !s.basic_nest_has_pole;
  }
  return false;
}

std::optional<Configuration> search_witness(int h, int max_p, WitnessCriterion crit,
                                            unsigned workers) {
  if (h < 2) throw std::invalid_argument("witness search requires h >= 2");
  if (max_p < 3) throw std::invalid_argument("witness search requires max_p >= 3");

  const bool pole_free = crit == WitnessCriterion::bound_pole_free ||
                         crit == WitnessCriterion::equality_case2;
  const int bound = period_lower_bound(h, !pole_free);

  EnumerateOptions opts;
  opts.h = h;
  opts.workers = workers;
  opts.allow_large = max_p > kDefaultMaxPeriod;
  for (int p = 3; p <= max_p; ++p) {
    std::optional<Configuration> found;
    enumerate_configs(p, opts, [&](const Configuration& c, const AnalysisSummary& s) {
      if (!found && matches(crit, h, c, s)) found = c;
    });
    if (found) {
      if (found->period() < bound) {
        throw std::logic_error("witness at p = " + std::to_string(found->period()) +
                               " beats the lower bound " + std::to_string(bound));
      }
      return found;
    }
  }
  return std::nullopt;
}

nlohmann::ordered_json to_json(const EnumerationStats& s) {
  nlohmann::ordered_json j;
  j["p"] = s.p;
  j["periods"] = s.periods;
  j["total_canonical_count"] = s.total_canonical_count;
  j["counts_by"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : s.counts_by) {
    j["counts_by"].push_back({{"h", k.h},
                              {"basic_nest_has_pole", k.basic_nest_has_pole},
                              {"n", k.n},
                              {"l", k.l},
                              {"count", v}});
  }
  j["min_p_witnesses"] = nlohmann::ordered_json::array();
  for (const auto& [k, c] : s.min_p_witnesses) {
    j["min_p_witnesses"].push_back({{"h", k.first},
                                    {"basic_nest_has_pole", k.second},
                                    {"p", c.period()},
                                    {"configuration", to_json(c)}});
  }
  return j;
}

}  // namespace hring
