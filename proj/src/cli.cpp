#include "hring/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hring/analysis.hpp"
#include "hring/enumerator.hpp"
#include "hring/report.hpp"
#include "hring/theorems.hpp"

namespace hring {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Configuration load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_configuration(buf.str());
  } catch (const ConfigError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ordered_json violations_json(const ViolationReport& report) {
  ordered_json j;
  j["valid"] = report.ok();
  j["violations"] = to_json(report);
  return j;
}

int cmd_validate(const std::string& file, bool strict, std::ostream& out) {
  const auto report = validate(load(file), {strict});
  out << violations_json(report).dump(2) << '\n';
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_analyze(const std::string& file, bool strict, std::ostream& out) {
  const Configuration c = load(file);
  const auto report = validate(c, {strict});
  if (!report.ok()) {
    out << violations_json(report).dump(2) << '\n';
    return kExitFailure;
  }
  out << to_json(summarize(c)).dump(2) << '\n';
  return kExitOk;
}

int cmd_check(const std::string& file, bool strict, std::ostream& out) {
  const auto report = run_all(load(file), {strict});
  out << to_json(report).dump(2) << '\n';
  return report.pass() ? kExitOk : kExitFailure;
}

int cmd_enumerate(int p, std::optional<int> h, int fatou_q, const std::string& out_path,
                  unsigned workers, bool allow_large, std::ostream& out) {
  EnumerateOptions opts;
  opts.h = h;
  opts.fatou_q = fatou_q;
  opts.workers = workers;
  opts.allow_large = allow_large;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  std::ostream& sink_stream = out_path.empty() ? out : file;
  CorpusWriter writer(sink_stream);
  EnumerationStats stats;
  try {
    stats = enumerate_configs(p, opts, [&](const Configuration& c, const AnalysisSummary&) {
      writer.write(c);
    });
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  writer.write_trailer(stats);
  if (!out_path.empty()) out << to_json(stats).dump(2) << '\n';
  return kExitOk;
}

int cmd_witness(int h, int max_p, const std::string& criterion, unsigned workers,
                std::ostream& out) {
  const auto crit = parse_criterion(criterion);
  if (!crit) throw UsageError("unknown criterion '" + criterion + "'");
  std::optional<Configuration> w;
  try {
    w = search_witness(h, max_p, *crit, workers);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool pole_free =
      *crit == WitnessCriterion::bound_pole_free || *crit == WitnessCriterion::equality_case2;
  ordered_json j;
  j["h"] = h;
  j["max_p"] = max_p;
  j["criterion"] = criterion;
  j["bound"] = period_lower_bound(h, !pole_free);
  j["found"] = w.has_value();
  if (w) {
    j["p"] = w->period();
    j["configuration"] = to_json(*w);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial model of Herman ring cycles", "hring"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1, 1);

  std::string file;
  bool strict = false;
  auto add_file_command = [&](const char* name, const char* help, bool with_strict) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "configuration JSON document")->required();
    if (with_strict) {
      sub->add_flag("--strict-innermost", strict, "require the innermost O_f ring to be a leaf");
    }
    return sub;
  };
  auto* validate_cmd = add_file_command("validate", "check the axioms", true);
  auto* analyze_cmd = add_file_command("analyze", "nests, chains and summary counts", true);
  auto* check_cmd = add_file_command("check", "run every theorem checker", true);
  auto* dot_cmd = add_file_command("dot", "emit the nesting forest as Graphviz", false);

  int p = 0;
  std::optional<int> h;
  int fatou_q = 0;
  std::string out_path;
  unsigned workers = 1;
  bool allow_large = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "all valid configurations of a period");
  enumerate_cmd->add_option("--p", p, "period")->required();
  enumerate_cmd->add_option("--h", h, "keep only configurations with this many poles");
  enumerate_cmd->add_option("--fatou-q", fatou_q, "attach Fatou cycles of this period");
  enumerate_cmd->add_option("--out", out_path, "write the JSONL corpus here");
  enumerate_cmd->add_option("--workers", workers, "search threads");
  enumerate_cmd->add_flag("--allow-large", allow_large, "permit periods above the default budget");

  int wh = 0;
  int max_p = 0;
  std::string criterion;
  auto* witness_cmd = app.add_subcommand("witness", "smallest-period witness for a criterion");
  witness_cmd->add_option("--h", wh, "number of relevant poles")->required();
  witness_cmd->add_option("--max-p", max_p, "largest period searched")->required();
  witness_cmd->add_option("--criterion", criterion,
                          "bound_basic_pole | bound_pole_free | equality_case1 | equality_case2")
      ->required();
  witness_cmd->add_option("--workers", workers, "search threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, strict, out);
    if (analyze_cmd->parsed()) return cmd_analyze(file, strict, out);
    if (check_cmd->parsed()) return cmd_check(file, strict, out);
    if (dot_cmd->parsed()) {
      out << emit_dot(load(file));
      return kExitOk;
    }
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate(p, h, fatou_q, out_path, workers, allow_large, out);
    }
    if (witness_cmd->parsed()) return cmd_witness(wh, max_p, criterion, workers, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hring
