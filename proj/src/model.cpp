#include "hring/model.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace hring {

std::vector<Ring> members_of(RingSet s) {
  std::vector<Ring> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

ConfigError::ConfigError(std::string path, const std::string& what)
    : std::runtime_error(path.empty() ? what : what + " (at " + path + ")"), path_(std::move(path)) {}

namespace {

std::string ring_list(const std::vector<Ring>& rings) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < rings.size(); ++i) os << (i ? "," : "") << rings[i];
  os << '}';
  return os.str();
}

void check_index(Ring r, int p, const std::string& path) {
  if (r < 0 || r >= p) {
    throw ConfigError(path, "index out of range: " + std::to_string(r) + " not in [0," +
                                std::to_string(p) + ")");
  }
}

}  // namespace

Configuration::Configuration(int p, std::vector<std::optional<Ring>> parent,
                             std::vector<Pole> poles, Ring omitted_host,
                             std::optional<FatouCycle> fatou)
    : p_(p),
      parent_(std::move(parent)),
      poles_(std::move(poles)),
      omitted_host_(omitted_host),
      fatou_(std::move(fatou)) {
  if (p_ < 1 || p_ > kMaxPeriod) {
    throw ConfigError("/p", "period must lie in [1," + std::to_string(kMaxPeriod) + "], got " +
                                std::to_string(p_));
  }
  if (static_cast<int>(parent_.size()) != p_) {
    throw ConfigError("/parent", "parent array has length " + std::to_string(parent_.size()) +
                                     ", expected " + std::to_string(p_));
  }
  for (Ring r = 0; r < p_; ++r) {
    if (parent_[r]) check_index(*parent_[r], p_, "/parent/" + std::to_string(r));
  }

  // Acyclicity. state: 1 = on the current walk, 2 = known to reach a root.
  std::vector<int> state(p_, 0);
  for (Ring start = 0; start < p_; ++start) {
    std::vector<Ring> path;
    for (std::optional<Ring> r = start; r && state[*r] != 2; r = parent_[*r]) {
      if (state[*r] == 1) {
        std::vector<Ring> cycle(std::find(path.begin(), path.end(), *r), path.end());
        std::sort(cycle.begin(), cycle.end());
        throw ConfigError("/parent", "parent cycle detected at rings " + ring_list(cycle));
      }
      state[*r] = 1;
      path.push_back(*r);
    }
    for (Ring q : path) state[q] = 2;
  }

  ancestors_.assign(p_, 0);
  for (Ring r = 0; r < p_; ++r) {
    RingSet acc = 0;
    for (auto a = parent_[r]; a; a = parent_[*a]) acc |= ring_bit(*a);
    ancestors_[r] = acc;
  }

  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < poles_.size(); ++i) {
    const std::string base = "/poles/" + std::to_string(i);
    if (poles_[i].id.empty()) throw ConfigError(base + "/id", "empty pole id");
    if (!ids.insert(poles_[i].id).second) {
      throw ConfigError(base + "/id", "duplicate pole id '" + poles_[i].id + "'");
    }
    check_index(poles_[i].host, p_, base + "/host");
  }
  std::sort(poles_.begin(), poles_.end(), [](const Pole& a, const Pole& b) {
    return a.host != b.host ? a.host < b.host : a.id < b.id;
  });
  for (const auto& w : poles_) pole_surrounders_ |= ancestors_or_self(w.host);

  check_index(omitted_host_, p_, "/omitted_host");

  if (fatou_) {
    if (fatou_->q < 1) throw ConfigError("/fatou_cycle/q", "q must be at least 1");
    if (fatou_->is_ring_cycle) {
      if (!fatou_->markers.empty()) {
        throw ConfigError("/fatou_cycle/markers", "markers must be absent when is_ring_cycle is set");
      }
    } else {
      if (static_cast<int>(fatou_->markers.size()) != fatou_->q) {
        throw ConfigError("/fatou_cycle/markers", "expected " + std::to_string(fatou_->q) +
                                                      " markers, got " +
                                                      std::to_string(fatou_->markers.size()));
      }
      for (std::size_t i = 0; i < fatou_->markers.size(); ++i) {
        if (fatou_->markers[i].kind == MarkerKind::ring) {
          check_index(fatou_->markers[i].host, p_,
                      "/fatou_cycle/markers/" + std::to_string(i) + "/host");
        }
      }
    }
  }
}

std::vector<Ring> Configuration::roots() const {
  std::vector<Ring> out;
  for (Ring r = 0; r < p_; ++r)
    if (!parent_[r]) out.push_back(r);
  return out;
}

std::vector<Ring> Configuration::children(Ring r) const {
  std::vector<Ring> out;
  for (Ring c = 0; c < p_; ++c)
    if (parent_[c] == r) out.push_back(c);
  return out;
}

RingSet Configuration::descendants(Ring r) const {
  RingSet out = 0;
  for (Ring c = 0; c < p_; ++c)
    if (contains(ancestors_[c], r)) out |= ring_bit(c);
  return out;
}

Ring Configuration::root_of(Ring r) const {
  while (parent_[r]) r = *parent_[r];
  return r;
}

Configuration Configuration::with_fatou(std::optional<FatouCycle> fatou) const {
  return Configuration(p_, parent_, poles_, omitted_host_, std::move(fatou));
}

}  // namespace hring
