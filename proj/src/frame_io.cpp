#include "gl/frame_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gl {

using nlohmann::json;

Frame frame_from_json(const json& doc) {
  if (!doc.is_object()) throw std::runtime_error("frame document must be a JSON object");
  for (const auto& item : doc.items())
    if (item.key() != "worlds" && item.key() != "edges")
      throw std::runtime_error("unknown key '" + item.key() + "' in frame document");
  if (!doc.contains("worlds") || !doc.contains("edges"))
    throw std::runtime_error("frame document needs both 'worlds' and 'edges'");

  std::vector<std::string> worlds;
  for (const json& w : doc.at("worlds")) {
    if (!w.is_string()) throw std::runtime_error("'worlds' entries must be strings");
    worlds.push_back(w.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const json& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw std::runtime_error("'edges' entries must be [from, to] name pairs");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Frame::from_names(std::move(worlds), edges);
}

json frame_to_json(const Frame& fr) {
  json edges = json::array();
  for (const auto& [a, b] : fr.edges())
    edges.push_back(json::array({fr.world_name(a), fr.world_name(b)}));
  return json{{"worlds", fr.world_names()}, {"edges", std::move(edges)}};
}

Frame load_frame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open frame file '" + path + "'");
  json doc = json::parse(in);
  return frame_from_json(doc);
}

json model_to_json(const Model& m) {
  json valuation = json::object();
  for (const auto& [var, set] : m.valuation) {
    json worlds = json::array();
    for (int w = 0; w < m.frame.size(); ++w)
      if (set.test(w)) worlds.push_back(m.frame.world_name(w));
    valuation[var] = std::move(worlds);
  }
  return json{{"frame", frame_to_json(m.frame)}, {"valuation", std::move(valuation)}};
}

json countermodel_to_json(const Countermodel& cm) {
  json out = model_to_json(cm.model);
  out["world"] = cm.model.frame.world_name(cm.world);
  return out;
}

json sequent_to_json(const Sequent& s) {
  json ante = json::array();
  for (Formula f : s.ante) ante.push_back(to_string(f));
  json succ = json::array();
  for (Formula f : s.succ) succ.push_back(to_string(f));
  return json{{"ante", std::move(ante)}, {"succ", std::move(succ)}};
}

json proof_tree_to_json(const ProofTree& t) {
  json children = json::array();
  for (const ProofTree& c : t.children) children.push_back(proof_tree_to_json(c));
  json out{{"sequent", sequent_to_json(t.sequent)}, {"rule", t.rule},
           {"children", std::move(children)}};
  if (t.principal) out["principal"] = to_string(*t.principal);
  return out;
}

}  // namespace gl
