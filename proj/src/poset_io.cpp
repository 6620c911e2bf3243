#include "linext/poset_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "linext/errors.hpp"

namespace linext {

poset parse_poset_text(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> relations;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string op;
    if (!(tokens >> op) || op[0] == '#') continue;
    if (op == "e") {
      std::string name;
      if (!(tokens >> name))
        throw parse_error("line " + std::to_string(lineno) + ": 'e' needs a name");
      labels.push_back(name);
    } else if (op == "r") {
      std::string x, y;
      if (!(tokens >> x >> y))
        throw parse_error("line " + std::to_string(lineno) + ": 'r' needs two names");
      relations.emplace_back(x, y);
    } else {
      throw parse_error("line " + std::to_string(lineno) + ": unknown directive '" + op + "'");
    }
    std::string extra;
    if (tokens >> extra)
      throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
  }
  return build_poset(std::move(labels), relations);
}

poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset_text(in);
}

std::string poset_to_text(const poset& p) {
  std::ostringstream out;
  for (int i = 0; i < p.size(); ++i) out << "e " << p.label(i) << "\n";
  for (auto [x, y] : p.covers())
    out << "r " << p.label(x) << " " << p.label(y) << "\n";
  return out.str();
}

poset parse_poset_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements"))
    throw parse_error("JSON poset needs an \"elements\" array");
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw parse_error("element names must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> relations;
  if (doc.contains("relations"))
    for (const auto& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
        throw parse_error("each relation must be a [x, y] string pair");
      relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  return build_poset(std::move(labels), relations);
}

std::string poset_to_json(const poset& p) {
  nlohmann::json doc;
  doc["elements"] = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) doc["elements"].push_back(p.label(i));
  doc["relations"] = nlohmann::json::array();
  for (auto [x, y] : p.covers())
    doc["relations"].push_back({p.label(x), p.label(y)});
  return doc.dump(2) + "\n";
}

poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open poset file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_poset_json(text);
  return parse_poset_text(text);
}

}  // namespace linext
