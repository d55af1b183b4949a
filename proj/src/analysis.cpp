#include "hring/analysis.hpp"

#include <algorithm>
#include <set>

namespace hring {

namespace {

void preorder(const Configuration& c, Ring r, std::vector<Ring>& out) {
  out.push_back(r);
  for (Ring k : c.children(r)) preorder(c, k, out);
}

// The single pole surrounded by ring r; throws if r surrounds none or several.
const Pole& pole_of(const Configuration& c, Ring r) {
  const Pole* found = nullptr;
  for (const auto& w : c.poles()) {
    if (!contains(c.surrounders_of(w), r)) continue;
    if (found) {
      throw ContractViolation("ring " + std::to_string(r) + " surrounds more than one pole");
    }
    found = &w;
  }
  if (!found) throw ContractViolation("ring " + std::to_string(r) + " surrounds no pole");
  return *found;
}

Chain chain_from(const Configuration& c, Ring start) {
  const RingSet poles = c.pole_surrounders();
  if (!contains(c.omitted_surrounders(), start) || contains(poles, start)) {
    throw ContractViolation("ring " + std::to_string(start) +
                            " cannot start a chain: it must surround O_f and no pole");
  }
  Chain ch;
  Ring r = start;
  ch.rings.push_back(r);
  while (!contains(poles, r)) {
    if (ch.length() > c.period()) {
      throw ContractViolation("chain from ring " + std::to_string(start) + " never meets a pole");
    }
    r = c.succ(r);
    ch.rings.push_back(r);
  }
  ch.pole = pole_of(c, r).id;
  ch.is_basic = start == c.omitted_host();
  return ch;
}

}  // namespace

const Chain& AnalysisSummary::basic_chain() const {
  auto it = std::find_if(chains.begin(), chains.end(), [](const Chain& ch) { return ch.is_basic; });
  if (it == chains.end()) throw ContractViolation("summary has no basic chain");
  return *it;
}

const Nest& AnalysisSummary::basic_nest() const {
  auto it = std::find_if(nests.begin(), nests.end(), [](const Nest& n) { return n.is_basic; });
  if (it == nests.end()) throw ContractViolation("summary has no basic nest");
  return *it;
}

std::vector<Nest> nest_partition(const Configuration& c) {
  std::vector<Nest> nests;
  for (Ring root : c.roots()) {
    Nest nest;
    nest.root = root;
    preorder(c, root, nest.members);
    const RingSet tree = c.descendants(root) | ring_bit(root);
    for (const auto& w : c.poles()) {
      if (!contains(tree, w.host)) continue;
      if (nest.pole) {
        throw ContractViolation("nest rooted at ring " + std::to_string(root) +
                                " surrounds more than one pole");
      }
      nest.pole = w.id;
    }
    nest.is_basic = contains(tree, c.omitted_host());
    nests.push_back(std::move(nest));
  }
  return nests;
}

Ring innermost_ring(const Configuration& c) { return c.omitted_host(); }

Chain basic_chain(const Configuration& c) { return chain_from(c, innermost_ring(c)); }

std::vector<Chain> all_chains(const Configuration& c) {
  std::vector<Chain> out;
  for (Ring r : members_of(c.omitted_surrounders() & ~c.pole_surrounders())) {
    out.push_back(chain_from(c, r));
  }
  return out;
}

AnalysisSummary summarize(const Configuration& c) {
  AnalysisSummary s;
  s.nests = nest_partition(c);
  s.chains = all_chains(c);
  s.innermost = innermost_ring(c);
  s.h = static_cast<int>(c.poles().size());
  s.n = static_cast<int>(s.nests.size());
  s.l = s.basic_chain().length();
  s.basic_nest_has_pole = s.basic_nest().pole.has_value();
  std::set<std::string> corresponded;
  for (const auto& ch : s.chains) corresponded.insert(ch.pole);
  s.independent_count = static_cast<int>(corresponded.size());
  return s;
}

nlohmann::ordered_json to_json(const Chain& ch) {
  return {{"rings", ch.rings}, {"pole", ch.pole}, {"length", ch.length()}, {"is_basic", ch.is_basic}};
}

nlohmann::ordered_json to_json(const Nest& nest) {
  nlohmann::ordered_json j;
  j["root"] = nest.root;
  j["members"] = nest.members;
  j["pole"] = nest.pole ? nlohmann::ordered_json(*nest.pole) : nlohmann::ordered_json(nullptr);
  j["is_basic"] = nest.is_basic;
  return j;
}

nlohmann::ordered_json to_json(const AnalysisSummary& s) {
  nlohmann::ordered_json j;
  j["h"] = s.h;
  j["n"] = s.n;
  j["l"] = s.l;
  j["basic_nest_has_pole"] = s.basic_nest_has_pole;
  j["independent_count"] = s.independent_count;
  j["H1"] = s.innermost;
  j["chains"] = nlohmann::ordered_json::array();
  for (const auto& ch : s.chains) j["chains"].push_back(to_json(ch));
  j["nests"] = nlohmann::ordered_json::array();
  for (const auto& n : s.nests) j["nests"].push_back(to_json(n));
  return j;
}

}  // namespace hring
