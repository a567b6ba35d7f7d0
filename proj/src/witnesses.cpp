#include "hnlie/witnesses.hpp"

#include <fstream>
#include <sstream>

#include "hnlie/error.hpp"
#include "json.hpp"

#ifndef HNLIE_DATA_DIR
#define HNLIE_DATA_DIR "data"
#endif

namespace hnlie {

namespace {

std::vector<Witness> read_list(const nlohmann::json& list) {
  std::vector<Witness> out;
  for (const auto& item : list) {
    Witness w;
    w.family = item.at("family").get<std::string>();
    if (item.contains("params")) {
      for (const auto& [k, v] : item.at("params").items()) w.bindings[k] = parse_scalar(v.get<std::string>());
    }
    w.row = item.value("row", "");
    w.note = item.value("note", "");
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::string default_witness_path() { return std::string(HNLIE_DATA_DIR) + "/witnesses.json"; }

WitnessSet parse_witnesses(const std::string& json_text) {
  try {
    const auto doc = nlohmann::json::parse(json_text);
    WitnessSet set;
    set.version = doc.at("version").get<int>();
    if (doc.contains("table2")) set.table2 = read_list(doc.at("table2"));
    if (doc.contains("theorem5")) set.theorem5 = read_list(doc.at("theorem5"));
    return set;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("witness file: ") + e.what());
  }
}

WitnessSet load_witnesses(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_witnesses(buf.str());
}

}  // namespace hnlie
