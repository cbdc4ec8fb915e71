#include "doxa/model_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace doxa {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw IoError("\"" + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw IoError("\"" + key + "\" must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

LoadedModel parse_model_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw IoError("model file must contain a JSON object");

  static const char* known[] = {"agents", "worlds", "relations", "valuation", "points"};
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw IoError("unknown key \"" + key + "\" in model file");
  }
  if (!doc.contains("agents")) throw IoError("model file is missing \"agents\"");
  if (!doc.contains("worlds")) throw IoError("model file is missing \"worlds\"");

  std::vector<std::string> agents = string_list(doc["agents"], "agents");
  std::vector<std::string> worlds = string_list(doc["worlds"], "worlds");

  std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations;
  if (doc.contains("relations")) {
    const json& rel = doc["relations"];
    if (!rel.is_object()) throw IoError("\"relations\" must be an object keyed by agent");
    for (const auto& [agent, edges] : rel.items()) {
      if (!edges.is_array()) throw IoError("relation for \"" + agent + "\" must be an array of pairs");
      auto& list = relations[agent];
      for (const auto& edge : edges) {
        if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string())
          throw IoError("relation for \"" + agent + "\" must contain [from, to] world pairs");
        list.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
      }
    }
  }

  std::map<std::string, std::vector<std::string>> valuation;
  if (doc.contains("valuation")) {
    const json& val = doc["valuation"];
    if (!val.is_object()) throw IoError("\"valuation\" must be an object keyed by atom");
    for (const auto& [atom, where] : val.items()) valuation[atom] = string_list(where, atom);
  }

  LoadedModel out = [&] {
    try {
      return LoadedModel{BeliefModel(agents, worlds, relations, valuation), {}};
    } catch (const ModelError& e) {
      throw IoError(e.what());
    }
  }();
  if (doc.contains("points")) {
    const json& pts = doc["points"];
    if (!pts.is_object()) throw IoError("\"points\" must be an object mapping names to worlds");
    for (const auto& [name, world] : pts.items()) {
      if (!world.is_string()) throw IoError("point \"" + name + "\" must name a world");
      int w = out.model.world_index(world.get<std::string>());
      if (w < 0) throw IoError("point \"" + name + "\" refers to unknown world \"" +
                               world.get<std::string>() + "\"");
      out.points[name] = w;
    }
  }
  return out;
}

LoadedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model_text(buf.str());
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string model_to_text(const BeliefModel& m, const std::map<std::string, int>& points) {
  json doc = json::object();
  doc["agents"] = m.agents();
  doc["worlds"] = m.worlds();

  json rel = json::object();
  for (int a = 0; a < m.agent_count(); ++a) {
    json edges = json::array();
    for (const auto& [from, to] : m.relation_pairs(a))
      edges.push_back(json::array({m.world_name(from), m.world_name(to)}));
    rel[m.agent_name(a)] = std::move(edges);
  }
  doc["relations"] = std::move(rel);

  json val = json::object();
  for (const auto& [atom, mask] : m.valuation()) {
    json where = json::array();
    for (int w : mask_indices(mask)) where.push_back(m.world_name(w));
    val[atom] = std::move(where);
  }
  doc["valuation"] = std::move(val);

  json pts = json::object();
  for (const auto& [name, w] : points) {
    if (w < 0 || w >= m.world_count())
      throw IoError("point \"" + name + "\" is out of range");
    pts[name] = m.world_name(w);
  }
  doc["points"] = std::move(pts);

  return doc.dump(2) + "\n";
}

void save_model(const BeliefModel& m, const std::string& path,
                const std::map<std::string, int>& points) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write \"" + path + "\"");
  out << model_to_text(m, points);
  if (!out) throw IoError("failed while writing \"" + path + "\"");
}

}  // namespace doxa
