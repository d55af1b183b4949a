#include "hring/report.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hring {

namespace {

void write_subtree(const Configuration& c, Ring r, std::ostringstream& os,
                   const std::vector<std::string>& labels) {
  os << "    ring" << r << " [label=\"" << labels[r] << "\"];\n";
  for (Ring k : c.children(r)) write_subtree(c, k, os, labels);
}

}  // namespace

std::string emit_dot(const Configuration& c) {
  const int p = c.period();
  std::vector<std::vector<std::string>> tags(p);
  for (const auto& w : c.poles()) tags[w.host].push_back(w.id);
  tags[c.omitted_host()].push_back("O_f");
  if (const auto& u = c.fatou(); u && !u->is_ring_cycle) {
    for (std::size_t i = 0; i < u->markers.size(); ++i) {
      if (u->markers[i].kind == MarkerKind::ring) {
        tags[u->markers[i].host].push_back("U" + std::to_string(i + 1));
      }
    }
  }
  std::vector<std::string> labels(p);
  for (Ring r = 0; r < p; ++r) {
    labels[r] = "ring" + std::to_string(r);
    if (tags[r].empty()) continue;
    labels[r] += " [";
    for (std::size_t i = 0; i < tags[r].size(); ++i) labels[r] += (i ? ", " : "") + tags[r][i];
    labels[r] += "]";
  }

  std::ostringstream os;
  os << "digraph nesting {\n";
  os << "  label=\"p=" << p << "\";\n";
  for (Ring root : c.roots()) {
    const bool basic = contains(c.ancestors_or_self(c.omitted_host()), root);
    os << "  subgraph cluster_nest" << root << " {\n";
    os << "    label=\"nest " << root << (basic ? " (basic)" : "") << "\";\n";
    write_subtree(c, root, os, labels);
    os << "  }\n";
  }
  for (Ring r = 0; r < p; ++r) {
    if (auto a = c.parent(r)) os << "  ring" << *a << " -> ring" << r << ";\n";
  }
  os << "}\n";
  return os.str();
}

CorpusError::CorpusError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

CorpusReader::CorpusReader(std::istream& in, bool skip_malformed)
    : in_(in), skip_malformed_(skip_malformed) {}

std::optional<Configuration> CorpusReader::next() {
  std::string text;
  while (!done_ && std::getline(in_, text)) {
    ++line_;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto doc = nlohmann::json::parse(text);
      if (doc.is_object() && doc.contains("stats")) {
        trailer_ = std::move(doc);
        done_ = true;
        break;
      }
      return configuration_from_json(doc);
    } catch (const std::exception& e) {
      CorpusError err(line_, std::string("parse failure: ") + e.what());
      if (!skip_malformed_) throw err;
      errors_.emplace_back(err.what());
    }
  }
  done_ = true;
  return std::nullopt;
}

void CorpusWriter::write(const Configuration& c) {
  out_ << to_json(canonical_form(c)).dump() << '\n';
  ++written_;
}

void CorpusWriter::write_trailer(const EnumerationStats& stats) {
  nlohmann::ordered_json j;
  j["stats"] = to_json(stats);
  out_ << j.dump() << '\n';
}

std::vector<Configuration> read_corpus(const std::string& path, bool skip_malformed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  CorpusReader reader(in, skip_malformed);
  std::vector<Configuration> out;
  while (auto c = reader.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace hring
