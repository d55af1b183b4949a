#include "hring/theorems.hpp"

#include <algorithm>
#include <map>

namespace hring {

using nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

int period_lower_bound(int h, bool basic_nest_has_pole) {
  return basic_nest_has_pole ? h * (h + 1) / 2 : h * (h + 3) / 2;
}

namespace {

CheckResult make(std::string id, std::vector<std::string> failures, ordered_json witness,
                 const std::string& ok_message) {
  CheckResult r;
  r.check_id = std::move(id);
  r.witness = std::move(witness);
  if (failures.empty()) {
    r.status = Status::pass;
    r.message = ok_message;
  } else {
    r.status = Status::fail;
    for (std::size_t i = 0; i < failures.size(); ++i) r.message += (i ? "; " : "") + failures[i];
  }
  return r;
}

// Shortest chain length for every pole that has a chain.
std::map<std::string, int> representative_lengths(const AnalysisSummary& s) {
  std::map<std::string, int> reps;
  for (const auto& ch : s.chains) {
    auto [it, inserted] = reps.emplace(ch.pole, ch.length());
    if (!inserted) it->second = std::min(it->second, ch.length());
  }
  return reps;
}

AnalysisSummary require_valid(const Configuration& c) {
  auto report = validate(c);
  if (!report.ok()) {
    throw ContractViolation("checker called on an invalid configuration: " +
                            report.entries.front().message);
  }
  return summarize(c);
}

}  // namespace

CheckResult check_chain_properties(const Configuration&, const AnalysisSummary& s) {
  std::vector<std::string> failures;
  ordered_json lengths = ordered_json::array();
  for (const auto& ch : s.chains) {
    lengths.push_back({{"start", ch.start()}, {"pole", ch.pole}, {"length", ch.length()}});
    if (ch.length() > s.l) {
      failures.push_back("chain from ring " + std::to_string(ch.start()) + " has length " +
                         std::to_string(ch.length()) + " > l = " + std::to_string(s.l));
    }
  }
  for (std::size_t i = 0; i < s.chains.size(); ++i) {
    for (std::size_t j = i + 1; j < s.chains.size(); ++j) {
      const auto& a = s.chains[i];
      const auto& b = s.chains[j];
      if (a.pole != b.pole && a.length() == b.length()) {
        failures.push_back("independent chains from rings " + std::to_string(a.start()) + " and " +
                           std::to_string(b.start()) + " share length " +
                           std::to_string(a.length()));
      }
    }
  }
  return make("chain_properties", std::move(failures), {{"l", s.l}, {"chains", lengths}},
              "every chain is at most as long as the basic chain; independent chains differ in length");
}

CheckResult check_counting_lemmas(const Configuration&, const AnalysisSummary& s) {
  std::vector<std::string> failures;
  auto lhs_rhs = [&](int a, const char* an, int b, const char* bn) {
    if (a > b) {
      failures.push_back(std::string(an) + " = " + std::to_string(a) + " exceeds " + bn + " = " +
                         std::to_string(b));
    }
  };
  lhs_rhs(s.h, "h", s.n, "n");
  lhs_rhs(s.n, "n", s.l, "l");
  lhs_rhs(s.h, "h", s.l, "l");

  const auto& basic = s.basic_chain().rings;
  ordered_json per_nest = ordered_json::array();
  for (const auto& nest : s.nests) {
    const auto count = std::count_if(nest.members.begin(), nest.members.end(), [&](Ring r) {
      return std::find(basic.begin(), basic.end(), r) != basic.end();
    });
    per_nest.push_back({{"root", nest.root}, {"basic_rings", count}});
    if (count < 1) {
      failures.push_back("nest rooted at ring " + std::to_string(nest.root) +
                         " contains no basic ring");
    }
    if (s.h == s.l) {
      if (count != 1) {
        failures.push_back("h = l but nest rooted at ring " + std::to_string(nest.root) +
                           " contains " + std::to_string(count) + " basic rings");
      }
      if (!nest.pole) {
        failures.push_back("h = l but nest rooted at ring " + std::to_string(nest.root) +
                           " surrounds no pole");
      }
    }
  }
  return make("counting_lemmas", std::move(failures),
              {{"h", s.h}, {"n", s.n}, {"l", s.l}, {"nests", per_nest}}, "h <= n <= l");
}

CheckResult check_independent_chains(const Configuration& c, const AnalysisSummary& s) {
  std::vector<std::string> failures;
  const auto reps = representative_lengths(s);
  const int count = s.independent_count;
  const int h = s.h;

  if (count != h - 1 && count != h) {
    failures.push_back(std::to_string(count) + " independent chains; expected h-1 or h (h = " +
                       std::to_string(h) + ")");
  }
  if (!s.basic_nest_has_pole && count != h) {
    failures.push_back("basic nest surrounds no pole but only " + std::to_string(count) +
                       " independent chains exist");
  }

  std::vector<int> lengths;
  for (const auto& [pole, len] : reps) lengths.push_back(len);
  std::sort(lengths.begin(), lengths.end());
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    const int j = static_cast<int>(k) + 2;
    if (lengths[k] < j) {
      failures.push_back("independent chain #" + std::to_string(j) + " has length " +
                         std::to_string(lengths[k]) + " < " + std::to_string(j));
    }
  }

  // Every pole surrounded by a non-basic nest has a chain.
  for (const auto& nest : s.nests) {
    if (!nest.is_basic && nest.pole && !reps.contains(*nest.pole)) {
      failures.push_back("pole " + *nest.pole + " of non-basic nest rooted at ring " +
                         std::to_string(nest.root) + " has no chain");
    }
  }

  bool remark_active = false;
  if (const auto& basic = s.basic_nest(); basic.pole) {
    const auto& w = *std::find_if(c.poles().begin(), c.poles().end(),
                                  [&](const Pole& x) { return x.id == *basic.pole; });
    const RingSet omitted = c.omitted_surrounders();
    if ((c.surrounders_of(w) & ~omitted) == 0) {
      remark_active = true;
      if (count != h - 1) {
        failures.push_back("every ring around basic-nest pole " + w.id +
                           " surrounds O_f, yet the independent count is " + std::to_string(count));
      }
      if (reps.contains(w.id)) {
        failures.push_back("a chain corresponds to basic-nest pole " + w.id);
      }
    }
  }

  ordered_json rep_json = ordered_json::object();
  for (const auto& [pole, len] : reps) rep_json[pole] = len;
  return make("independent_chains", std::move(failures),
              {{"h", h},
               {"independent_count", count},
               {"representative_lengths", rep_json},
               {"basic_pole_fully_inside_omitted_surrounders", remark_active}},
              "independent chain count is h-1 or h with lengths |C_j| >= j");
}

CheckResult check_lower_bound(const Configuration& c, const AnalysisSummary& s) {
  std::vector<std::string> failures;
  const int p = c.period();
  const int weak = s.h * (s.h + 1) / 2;
  const int strong = s.h * (s.h + 3) / 2;
  if (p < weak) {
    failures.push_back("p = " + std::to_string(p) + " < h(h+1)/2 = " + std::to_string(weak));
  }
  if (!s.basic_nest_has_pole && p < strong) {
    failures.push_back("basic nest pole-free but p = " + std::to_string(p) +
                       " < h(h+3)/2 = " + std::to_string(strong));
  }
  return make("lower_bound", std::move(failures),
              {{"p", p},
               {"h", s.h},
               {"basic_nest_has_pole", s.basic_nest_has_pole},
               {"bound", period_lower_bound(s.h, s.basic_nest_has_pole)}},
              "period meets the lower bound");
}

CheckResult check_equality(const Configuration& c, const AnalysisSummary& s) {
  const int p = c.period();
  bool hyp = true;
  for (Ring r : members_of(c.pole_surrounders())) hyp = hyp && c.is_root(r);

  ordered_json witness = {{"pole_rings_outermost", hyp}, {"p", p}, {"h", s.h}, {"l", s.l},
                          {"basic_nest_has_pole", s.basic_nest_has_pole}};
  std::vector<std::string> failures;
  if (hyp && s.l == s.h) {
    witness["case"] = 1;
    if (p != s.h * (s.h + 1) / 2) {
      failures.push_back("case 1: p = " + std::to_string(p) + " != h(h+1)/2 = " +
                         std::to_string(s.h * (s.h + 1) / 2));
    }
    if (!s.basic_nest_has_pole) failures.push_back("case 1: basic nest surrounds no pole");
    return make("equality", std::move(failures), std::move(witness), "p = h(h+1)/2");
  }
  if (hyp && s.l == s.h + 1 && !s.basic_nest_has_pole) {
    witness["case"] = 2;
    if (p != s.h * (s.h + 3) / 2) {
      failures.push_back("case 2: p = " + std::to_string(p) + " != h(h+3)/2 = " +
                         std::to_string(s.h * (s.h + 3) / 2));
    }
    return make("equality", std::move(failures), std::move(witness), "p = h(h+3)/2");
  }
  CheckResult r;
  r.check_id = "equality";
  r.witness = std::move(witness);
  r.message = hyp ? "basic chain length matches neither equality case"
                  : "some pole-surrounding ring is not outermost";
  return r;
}

CheckResult check_fatou_period(const Configuration& c, const AnalysisSummary& s) {
  CheckResult r;
  r.check_id = "fatou_period";
  const auto& u = c.fatou();
  if (!u) {
    r.message = "no Fatou cycle attached";
    return r;
  }
  const int period = u->is_ring_cycle ? c.period() : u->q;
  r.witness = {{"h", s.h}, {"q", period}, {"l", s.l}, {"n", s.n}, {"is_ring_cycle", u->is_ring_cycle}};
  if (s.h >= period) {
    r.status = Status::fail;
    r.message = "h = " + std::to_string(s.h) + " is not below the Fatou period " + std::to_string(period);
    return r;
  }
  r.status = Status::pass;
  r.message = "h < Fatou period";
  if (!u->is_ring_cycle && u->q == 3) {
    const bool probe = s.h == 2 && s.l == 2 && s.n == 2;
    r.witness["tier2_q3"] = probe;
    if (!probe) {
      r.flagged = true;
      r.message += "; tier 2: q = 3 but (h, l, n) = (" + std::to_string(s.h) + ", " +
                   std::to_string(s.l) + ", " + std::to_string(s.n) + ") != (2, 2, 2)";
    }
  }
  return r;
}

CheckResult probe_small_period(const Configuration& c, const AnalysisSummary& s) {
  CheckResult r;
  r.check_id = "small_period";
  r.tier = 2;
  const int p = c.period();
  r.witness = {{"p", p}, {"h", s.h}, {"n", s.n}, {"l", s.l}};
  bool holds = true;
  if (p == 3) {
    holds = s.h == 2 && s.n == 2 && s.l == 2;
    r.message = "p = 3 expects h = n = l = 2";
  } else if (p == 4) {
    holds = s.l == 3 && s.h == 2 && (s.n == 2 || s.n == 3);
    r.message = "p = 4 expects l = 3, h = 2, n in {2, 3}";
  } else {
    r.message = "no probe for this period";
    return r;
  }
  r.status = holds ? Status::pass : Status::fail;
  r.flagged = !holds;
  return r;
}

#define HRING_SINGLE_ARG(name) \
  CheckResult name(const Configuration& c) { return name(c, require_valid(c)); }
HRING_SINGLE_ARG(check_chain_properties)
HRING_SINGLE_ARG(check_counting_lemmas)
HRING_SINGLE_ARG(check_independent_chains)
HRING_SINGLE_ARG(check_lower_bound)
HRING_SINGLE_ARG(check_equality)
HRING_SINGLE_ARG(check_fatou_period)
#undef HRING_SINGLE_ARG

std::vector<CheckResult> run_checks(const Configuration& c, const AnalysisSummary& s) {
  return {check_chain_properties(c, s), check_counting_lemmas(c, s), check_independent_chains(c, s),
          check_lower_bound(c, s),      check_equality(c, s),        check_fatou_period(c, s)};
}

CheckReport run_all(const Configuration& c, ValidateOptions opts) {
  CheckReport report;
  report.violations = validate(c, opts);
  if (!report.violations.ok()) {
    report.rejected = true;
    return report;
  }
  report.results = run_checks(c, summarize(c));
  return report;
}

bool CheckReport::pass() const {
  if (rejected) return false;
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.tier == 1 && r.status == Status::fail;
  });
}

bool CheckReport::flagged() const {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.flagged; });
}

ordered_json to_json(const CheckResult& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["tier"] = r.tier;
  j["status"] = to_string(r.status);
  j["flagged"] = r.flagged;
  j["message"] = r.message;
  j["witness"] = r.witness;
  return j;
}

ordered_json to_json(const CheckReport& r) {
  ordered_json j;
  j["overall"] = r.rejected ? "rejected" : (r.pass() ? "pass" : "fail");
  if (r.rejected) {
    j["violations"] = to_json(r.violations);
    return j;
  }
  j["flagged"] = r.flagged();
  j["results"] = ordered_json::array();
  for (const auto& x : r.results) j["results"].push_back(to_json(x));
  return j;
}

}  // namespace hring
