#include <algorithm>

#include "hring/model.hpp"

namespace hring {

Encoding encode(const Configuration& c) {
  const int p = c.period();
  Encoding e;
  e.parent.reserve(p);
  for (const auto& a : c.parents()) e.parent.push_back(a ? *a : p);
  for (const auto& w : c.poles()) e.pole_hosts.push_back(w.host);
  std::sort(e.pole_hosts.begin(), e.pole_hosts.end());
  e.omitted_host = c.omitted_host();
  if (const auto& u = c.fatou()) {
    e.fatou.push_back(u->q);
    e.fatou.push_back(u->is_ring_cycle ? 1 : 0);
    for (const auto& m : u->markers) {
      switch (m.kind) {
        case MarkerKind::ring: e.fatou.push_back(m.host); break;
        case MarkerKind::free_bounded: e.fatou.push_back(p); break;
        case MarkerKind::unbounded: e.fatou.push_back(p + 1); break;
      }
    }
  }
  return e;
}

Configuration rotate(const Configuration& c, int k) {
  const int p = c.period();
  k = ((k % p) + p) % p;
  auto map = [&](Ring r) { return (r - k + p) % p; };

  std::vector<std::optional<Ring>> parent(p);
  for (Ring j = 0; j < p; ++j) {
    if (auto a = c.parent((j + k) % p)) parent[j] = map(*a);
  }
  std::vector<Pole> poles;
  for (const auto& w : c.poles()) poles.push_back({w.id, map(w.host)});

  std::optional<FatouCycle> fatou = c.fatou();
  if (fatou) {
    for (auto& m : fatou->markers)
      if (m.kind == MarkerKind::ring) m.host = map(m.host);
  }
  return Configuration(p, std::move(parent), std::move(poles), map(c.omitted_host()),
                       std::move(fatou));
}

Configuration canonical_form(const Configuration& c) {
  auto key = [](const Configuration& x) {
    std::vector<std::string> ids;
    for (const auto& w : x.poles()) ids.push_back(w.id);
    return std::make_pair(encode(x), std::move(ids));
  };
  Configuration best = c;
  auto best_key = key(c);
  for (int k = 1; k < c.period(); ++k) {
    Configuration r = rotate(c, k);
    auto r_key = key(r);
    if (r_key < best_key) {
      best = std::move(r);
      best_key = std::move(r_key);
    }
  }
  return best;
}

}  // namespace hring
