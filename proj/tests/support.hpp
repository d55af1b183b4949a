#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hring/enumerator.hpp"
#include "hring/model.hpp"

namespace hring::test {

inline Configuration fixture(const std::string& name) {
  std::ifstream in(std::string(HRING_FIXTURE_DIR) + "/" + name + ".json");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_configuration(buf.str());
}

inline std::string fixture_path(const std::string& name) {
  return std::string(HRING_FIXTURE_DIR) + "/" + name + ".json";
}

// ---------------------------------------------------------------------------
// Independent axiom checker. Works from the raw parent array with plain walks
// and shares nothing with the bit-set implementation under test.

namespace oracle {

inline bool above(const Configuration& c, Ring a, Ring b) {
  for (auto x = c.parent(b); x; x = c.parent(*x))
    if (*x == a) return true;
  return false;
}

inline bool around(const Configuration& c, Ring ring, Ring host) {
  return ring == host || above(c, ring, host);
}

inline bool around_any_pole(const Configuration& c, Ring r) {
  for (const auto& w : c.poles())
    if (around(c, r, w.host)) return true;
  return false;
}

inline bool around_marker(const Configuration& c, Ring r, const FatouMarker& m) {
  return m.kind == MarkerKind::ring && around(c, r, m.host);
}

inline std::set<Axiom> violated(const Configuration& c, bool strict = false) {
  std::set<Axiom> out;
  const int p = c.period();
  const Ring o = c.omitted_host();
  auto next = [p](Ring r) { return (r + 1) % p; };
  auto prev = [p](Ring r) { return (r + p - 1) % p; };

  if (p < 3) out.insert(Axiom::A1);
  if (c.poles().size() < 2) out.insert(Axiom::A2);
  for (Ring r = 0; r < p; ++r) {
    int k = 0;
    for (const auto& w : c.poles()) k += around(c, r, w.host) ? 1 : 0;
    if (k > 1) out.insert(Axiom::A3);
    if (around_any_pole(c, r) && !around(c, next(r), o)) out.insert(Axiom::A4);
    if (around(c, r, o) && !around_any_pole(c, prev(r))) out.insert(Axiom::A7);
    for (Ring b = 0; b < p; ++b) {
      if (above(c, r, b) && !around_any_pole(c, r) && !above(c, next(r), next(b))) {
        out.insert(Axiom::A6);
      }
    }
  }
  if (around_any_pole(c, o)) out.insert(Axiom::A5);
  if (strict) {
    for (Ring r = 0; r < p; ++r)
      if (above(c, o, r)) out.insert(Axiom::A5);
  }

  if (const auto& u = c.fatou()) {
    if (u->is_ring_cycle) {
      if (u->q != p) out.insert(Axiom::STRUCT);
    } else {
      for (Ring r = 0; r < p; ++r) {
        if (around(c, r, o) && !around_marker(c, r, u->markers[0])) out.insert(Axiom::F1);
        for (int i = 0; i < u->q; ++i) {
          if (around_marker(c, r, u->markers[i]) && !around_any_pole(c, r) &&
              !around_marker(c, next(r), u->markers[(i + 1) % u->q])) {
            out.insert(Axiom::F2);
          }
        }
      }
      if (u->markers.back().kind != MarkerKind::unbounded) out.insert(Axiom::F3);
    }
  }
  return out;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Generators

/// Structurally valid configuration with random forest, markers and
/// (sometimes) a random Fatou cycle. Most are invalid under the axioms.
inline Configuration random_structural(std::mt19937& rng, int pmin = 1, int pmax = 8,
                                       bool allow_fatou = true) {
  std::uniform_int_distribution<int> pick_p(pmin, pmax);
  const int p = pick_p(rng);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::vector<Ring> order(p);
  for (Ring r = 0; r < p; ++r) order[r] = r;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::optional<Ring>> parent(p);
  for (int i = 1; i < p; ++i) {
    if (uniform(0, 2) != 0) parent[order[i]] = order[uniform(0, i - 1)];
  }

  std::vector<Pole> poles;
  const int h = uniform(0, std::min(p, 4));
  for (int i = 0; i < h; ++i) poles.push_back({"w" + std::to_string(i + 1), uniform(0, p - 1)});

  std::optional<FatouCycle> fatou;
  if (allow_fatou && uniform(0, 3) == 0) {
    FatouCycle u;
    u.q = uniform(1, 4);
    if (uniform(0, 4) == 0) {
      u.is_ring_cycle = true;
      u.q = uniform(0, 1) ? p : u.q;
    } else {
      for (int i = 0; i < u.q; ++i) {
        FatouMarker m;
        const int k = uniform(0, 2);
        m.kind = k == 0 ? MarkerKind::ring : (k == 1 ? MarkerKind::free_bounded : MarkerKind::unbounded);
        m.host = m.kind == MarkerKind::ring ? uniform(0, p - 1) : 0;
        u.markers.push_back(m);
      }
    }
    fatou = u;
  }
  return Configuration(p, std::move(parent), std::move(poles), uniform(0, p - 1), fatou);
}

/// All valid configurations for p = 3..max_p, canonical forms.
inline std::vector<Configuration> enumerated_upto(int max_p) {
  static std::vector<Configuration> cache;
  static int cached = 2;
  for (int p = cached + 1; p <= max_p; ++p) {
    enumerate_configs(p, {}, [&](const Configuration& c, const AnalysisSummary&) { cache.push_back(c); });
    cached = p;
  }
  std::vector<Configuration> out;
  for (const auto& c : cache)
    if (c.period() <= max_p) out.push_back(c);
  return out;
}

/// A valid configuration drawn from the enumeration and randomly rotated.
inline Configuration random_valid(std::mt19937& rng, int max_p = 6) {
  static const auto all = enumerated_upto(max_p);
  const auto& c = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  return rotate(c, std::uniform_int_distribution<int>(0, c.period() - 1)(rng));
}

}  // namespace hring::test
