#include "hring/model.hpp"

namespace hring {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& member(const json& obj, const char* key, const std::string& base) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(base + "/" + key, "missing member");
  return *it;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  auto x = v.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) throw ConfigError(path, "index out of range");
  return static_cast<int>(x);
}

FatouCycle parse_fatou(const json& doc) {
  const std::string base = "/fatou_cycle";
  if (!doc.is_object()) throw ConfigError(base, "expected an object");
  FatouCycle u;
  u.q = as_int(member(doc, "q", base), base + "/q");
  if (auto it = doc.find("is_ring_cycle"); it != doc.end()) {
    if (!it->is_boolean()) throw ConfigError(base + "/is_ring_cycle", "expected a boolean");
    u.is_ring_cycle = it->get<bool>();
  }
  if (auto it = doc.find("markers"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw ConfigError(base + "/markers", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = base + "/markers/" + std::to_string(i);
      const json& m = (*it)[i];
      if (!m.is_object()) throw ConfigError(path, "expected an object");
      const json& kind = member(m, "kind", path);
      if (!kind.is_string()) throw ConfigError(path + "/kind", "expected a string");
      const auto k = kind.get<std::string>();
      FatouMarker marker;
      if (k == "ring") {
        marker.kind = MarkerKind::ring;
        marker.host = as_int(member(m, "host", path), path + "/host");
      } else if (k == "free_bounded") {
        marker.kind = MarkerKind::free_bounded;
      } else if (k == "unbounded") {
        marker.kind = MarkerKind::unbounded;
      } else {
        throw ConfigError(path + "/kind", "unknown marker kind '" + k + "'");
      }
      u.markers.push_back(marker);
    }
  }
  return u;
}

}  // namespace

Configuration configuration_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "malformed document: expected a JSON object");
  const int p = as_int(member(doc, "p", ""), "/p");

  const json& parent_doc = member(doc, "parent", "");
  if (!parent_doc.is_array()) throw ConfigError("/parent", "expected an array");
  std::vector<std::optional<Ring>> parent;
  for (std::size_t i = 0; i < parent_doc.size(); ++i) {
    if (parent_doc[i].is_null()) {
      parent.emplace_back();
    } else {
      parent.emplace_back(as_int(parent_doc[i], "/parent/" + std::to_string(i)));
    }
  }

  const json& poles_doc = member(doc, "poles", "");
  if (!poles_doc.is_array()) throw ConfigError("/poles", "expected an array");
  std::vector<Pole> poles;
  for (std::size_t i = 0; i < poles_doc.size(); ++i) {
    const std::string path = "/poles/" + std::to_string(i);
    const json& w = poles_doc[i];
    if (!w.is_object()) throw ConfigError(path, "expected an object");
    const json& id = member(w, "id", path);
    if (!id.is_string()) throw ConfigError(path + "/id", "expected a string");
    poles.push_back({id.get<std::string>(), as_int(member(w, "host", path), path + "/host")});
  }

  const int omitted = as_int(member(doc, "omitted_host", ""), "/omitted_host");

  std::optional<FatouCycle> fatou;
  if (auto it = doc.find("fatou_cycle"); it != doc.end() && !it->is_null()) {
    fatou = parse_fatou(*it);
  }
  return Configuration(p, std::move(parent), std::move(poles), omitted, std::move(fatou));
}

Configuration parse_configuration(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed document: ") + e.what());
  }
  return configuration_from_json(doc);
}

ordered_json to_json(const Configuration& c) {
  ordered_json doc;
  doc["p"] = c.period();
  ordered_json parent = ordered_json::array();
  for (const auto& a : c.parents()) parent.push_back(a ? ordered_json(*a) : ordered_json(nullptr));
  doc["parent"] = std::move(parent);
  ordered_json poles = ordered_json::array();
  for (const auto& w : c.poles()) poles.push_back({{"id", w.id}, {"host", w.host}});
  doc["poles"] = std::move(poles);
  doc["omitted_host"] = c.omitted_host();
  if (const auto& u = c.fatou()) {
    ordered_json f;
    f["q"] = u->q;
    f["is_ring_cycle"] = u->is_ring_cycle;
    if (!u->is_ring_cycle) {
      ordered_json markers = ordered_json::array();
      for (const auto& m : u->markers) {
        switch (m.kind) {
          case MarkerKind::ring: markers.push_back({{"kind", "ring"}, {"host", m.host}}); break;
          case MarkerKind::free_bounded: markers.push_back({{"kind", "free_bounded"}}); break;
          case MarkerKind::unbounded: markers.push_back({{"kind", "unbounded"}}); break;
        }
      }
      f["markers"] = std::move(markers);
    }
    doc["fatou_cycle"] = std::move(f);
  }
  return doc;
}

ordered_json to_json(const ViolationReport& r) {
  ordered_json out = ordered_json::array();
  for (const auto& v : r.entries) {
    out.push_back({{"axiom", to_string(v.axiom)},
                   {"rings", v.rings},
                   {"poles", v.poles},
                   {"message", v.message}});
  }
  return out;
}

}  // namespace hring
