#include <fstream>
#include <json.hpp>
#include <sstream>

#include "kacq/errors.hpp"
#include "kacq/quiver.hpp"

namespace kacq {

Quiver quiver_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) arrows.push_back({a.at("src").get<int>(), a.at("dst").get<int>()});
    std::vector<int> mult;
    if (j.contains("multiplicities")) mult = j.at("multiplicities").get<std::vector<int>>();
    return Quiver(labels, arrows, mult);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("quiver JSON: ") + e.what());
  }
}

std::string quiver_to_json(const Quiver& Q) {
  nlohmann::json j;
  j["vertices"] = Q.labels();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : Q.arrows()) j["arrows"].push_back({{"src", a.src}, {"dst", a.dst}});
  j["multiplicities"] = Q.multiplicities();
  return j.dump();
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open quiver file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return quiver_from_json(ss.str());
}

}  // namespace kacq
