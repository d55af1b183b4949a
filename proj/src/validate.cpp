#include <algorithm>

#include "hring/model.hpp"

namespace hring {

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
    case Axiom::A6: return "A6";
    case Axiom::A7: return "A7";
    case Axiom::F1: return "F1";
    case Axiom::F2: return "F2";
    case Axiom::F3: return "F3";
    case Axiom::STRUCT: return "STRUCT";
  }
  return "?";
}

std::vector<Axiom> ViolationReport::axioms() const {
  std::vector<Axiom> out;
  for (const auto& e : entries) out.push_back(e.axiom);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ViolationReport::count(Axiom a) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [a](const Violation& v) { return v.axiom == a; }));
}

namespace {

std::vector<std::string> poles_surrounded_by(const Configuration& c, Ring r) {
  std::vector<std::string> out;
  for (const auto& w : c.poles())
    if (contains(c.surrounders_of(w), r)) out.push_back(w.id);
  return out;
}

RingSet marker_surrounders(const Configuration& c, const FatouMarker& m) {
  return m.kind == MarkerKind::ring ? c.ancestors_or_self(m.host) : RingSet{0};
}

void check_fatou(const Configuration& c, ViolationReport& report) {
  const FatouCycle& u = *c.fatou();
  const int p = c.period();
  if (u.is_ring_cycle) {
    if (u.q != p) {
      report.entries.push_back({Axiom::STRUCT, {}, {},
                                "ring-cycle Fatou cycle must have q equal to the period (q=" +
                                    std::to_string(u.q) + ", p=" + std::to_string(p) + ")"});
    }
    return;
  }

  const RingSet omitted = c.omitted_surrounders();
  const RingSet first = marker_surrounders(c, u.markers.front());
  if ((first & omitted) != omitted) {
    report.entries.push_back({Axiom::F1, members_of(omitted & ~first), {},
                              "rings surrounding O_f do not all surround marker 1"});
  }

  const RingSet poles = c.pole_surrounders();
  for (int i = 0; i < u.q; ++i) {
    const RingSet here = marker_surrounders(c, u.markers[i]);
    const RingSet next = marker_surrounders(c, u.markers[(i + 1) % u.q]);
    for (Ring a : members_of(here & ~poles)) {
      if (!contains(next, c.succ(a))) {
        report.entries.push_back(
            {Axiom::F2, {a, c.succ(a)}, {},
             "pole-free ring " + std::to_string(a) + " surrounds marker " + std::to_string(i + 1) +
                 " but ring " + std::to_string(c.succ(a)) + " does not surround marker " +
                 std::to_string((i + 1) % u.q + 1)});
      }
    }
  }

  if (u.markers.back().kind != MarkerKind::unbounded) {
    report.entries.push_back({Axiom::F3, {}, {}, "last Fatou marker is not unbounded"});
  }
}

}  // namespace

ViolationReport validate(const Configuration& c, ValidateOptions opts) {
  ViolationReport report;
  auto& out = report.entries;
  const int p = c.period();
  const int h = static_cast<int>(c.poles().size());
  const RingSet poles = c.pole_surrounders();
  const RingSet omitted = c.omitted_surrounders();
  const Ring o = c.omitted_host();

  if (p < 3) {
    out.push_back({Axiom::A1, {}, {}, "period " + std::to_string(p) + " is below 3"});
  }

  if (h == 0) {
    out.push_back({Axiom::A2, {}, {}, "no ring surrounds a pole"});
  } else if (h < 2) {
    out.push_back({Axiom::A2, {}, {c.poles().front().id},
                   "only one relevant pole; at least two are required"});
  }

  for (Ring r = 0; r < p; ++r) {
    auto ids = poles_surrounded_by(c, r);
    if (ids.size() > 1) {
      out.push_back({Axiom::A3, {r}, ids,
                     "ring " + std::to_string(r) + " surrounds " + std::to_string(ids.size()) +
                         " poles"});
    }
  }

  for (Ring i : members_of(poles)) {
    if (!contains(omitted, c.succ(i))) {
      out.push_back({Axiom::A4, {i, c.succ(i)}, poles_surrounded_by(c, i),
                     "ring " + std::to_string(i) + " surrounds a pole but ring " +
                         std::to_string(c.succ(i)) + " does not surround O_f"});
    }
  }

  if (contains(poles, o)) {
    out.push_back({Axiom::A5, {o}, poles_surrounded_by(c, o),
                   "innermost O_f ring " + std::to_string(o) + " surrounds a pole"});
  }
  if (opts.strict_innermost && c.descendants(o) != 0) {
    out.push_back({Axiom::A5, members_of(c.descendants(o) | ring_bit(o)), {},
                   "innermost O_f ring " + std::to_string(o) +
                       " surrounds other rings (strict innermost)"});
  }

  for (Ring b = 0; b < p; ++b) {
    for (Ring a : members_of(c.ancestors(b) & ~poles)) {
      if (!c.surrounds(c.succ(a), c.succ(b))) {
        out.push_back({Axiom::A6, {a, b}, {},
                       "pole-free ring " + std::to_string(a) + " surrounds ring " +
                           std::to_string(b) + " but ring " + std::to_string(c.succ(a)) +
                           " does not surround ring " + std::to_string(c.succ(b))});
      }
    }
  }

  for (Ring k : members_of(omitted)) {
    if (!contains(poles, c.pred(k))) {
      out.push_back({Axiom::A7, {k, c.pred(k)}, {},
                     "ring " + std::to_string(k) + " surrounds O_f but ring " +
                         std::to_string(c.pred(k)) + " surrounds no pole"});
    }
  }

  if (c.fatou()) check_fatou(c, report);
  return report;
}

}  // namespace hring
