#include "hnlie/report.hpp"

#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "hnlie/error.hpp"

namespace hnlie {

using nlohmann::json;

namespace {

json meta(std::uint64_t seed = 0, int samples = 0) {
  return json{{"version", kToolVersion}, {"seed", seed}, {"samples", samples}};
}

json inputs_of(const AlgebraInput& in) {
  json j{{"algebra", in.algebra.name()}, {"bindings", to_json(in.algebra.bindings())}};
  if (!in.family.empty()) j["family"] = in.family;
  if (!in.file.empty()) j["file"] = in.file;
  return j;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

json labels_json(const std::array<std::string, 3>& l) { return json{{"J1", l[0]}, {"J2", l[1]}, {"J3", l[2]}}; }

std::string plane_key(const Plane& p) { return std::to_string(p.first) + std::to_string(p.second); }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

/// Renders rows as an aligned grid with a header rule.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (c) line += " | ";
      line += c + 1 == rows[i].size() ? rows[i][c] : pad(rows[i][c], width[c]);
    }
    os << line << '\n';
    if (i == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 3;
      os << std::string(total > 3 ? total - 3 : 0, '-') << '\n';
    }
  }
  return os.str();
}

std::string bindings_text(const json& b) {
  if (b.empty()) return "-";
  std::string s;
  for (const auto& [k, v] : b.items()) s += (s.empty() ? "" : ", ") + k + "=" + v.get<std::string>();
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string text_classify(const Report& r) {
  const auto& p = r.payload;
  std::vector<std::vector<std::string>> rows{{"Lie algebra", "Parameters", "J1", "J2", "J3"}};
  rows.push_back({p.at("family").get<std::string>(), bindings_text(p.at("bindings")), p["labels"]["J1"],
                  p["labels"]["J2"], p["labels"]["J3"]});
  return grid(rows);
}

std::string text_curvature(const Report& r) {
  const auto& p = r.payload;
  std::ostringstream os;
  os << "algebra: " << p.at("family").get<std::string>() << " (" << bindings_text(p.at("bindings")) << ")\n";
  os << "tau = " << p["tau"].get<std::string>() << '\n';
  for (int a = 0; a < 3; ++a)
    os << "tau*_" << a + 1 << " = " << p["tau_star"][a].get<std::string>() << "    tau**_" << a + 1 << " = "
       << p["tau_star_star"][a].get<std::string>() << '\n';
  os << "flat: " << yes(p["flat"].get<bool>()) << "\n\n";

  std::vector<std::vector<std::string>> rows{{"plane", "k", "J1", "J2", "J3"}};
  for (const auto& [key, v] : p["k"].items()) {
    const auto& t = p["plane_types"][key];
    rows.push_back({"e" + key.substr(0, 1) + "e" + key.substr(1, 1), v.get<std::string>(), t[0], t[1], t[2]});
  }
  os << grid(rows) << '\n';

  os << "rho:\n";
  for (const auto& row : p["rho"]) {
    os << "  ";
    for (const auto& x : row) os << std::setw(12) << x.get<std::string>();
    os << '\n';
  }
  os << "nonzero R_ijkl (i<j, k<l):\n";
  for (const auto& [key, v] : p["R"].items()) os << "  R" << key << " = " << v.get<std::string>() << '\n';
  return os.str();
}

std::string text_table2(const Report& r) {
  const auto& p = r.payload;
  std::ostringstream os;
  std::vector<std::vector<std::string>> rows{
      {"row", "parameters", "source", "expected J1/J2/J3", "computed J1/J2/J3", "verdict"}};
  for (const auto& c : p["checks"]) {
    auto triple = [](const json& l) {
      return l.is_null() ? std::string("-")
                         : l["J1"].get<std::string>() + " " + l["J2"].get<std::string>() + " " + l["J3"].get<std::string>();
    };
    std::string verdict = c["exact"].get<bool>() ? "exact" : (c["contained"].get<bool>() ? "refines" : "MISMATCH");
    if (!c["asserted"].get<bool>()) verdict += " (annotated)";
    if (!c["bullet_violations"].empty()) verdict += " BULLET";
    rows.push_back({c["row"].get<std::string>(), bindings_text(c["bindings"]), c["source"].get<std::string>(),
                    triple(c["expected"]), triple(c["computed"]), verdict});
  }
  os << grid(rows);
  os << "\nannotations:\n";
  std::set<std::string> seen;
  for (const auto& c : p["checks"]) {
    const std::string a = c["annotation"].get<std::string>();
    if (!a.empty() && seen.insert(c["row"].get<std::string>() + a).second) os << "  " << c["row"].get<std::string>() << ": " << a << '\n';
    for (const auto& b : c["bullet_violations"])
      os << "  " << c["family"].get<std::string>() << " (" << bindings_text(c["bindings"]) << "): " << b.get<std::string>() << '\n';
  }
  for (const auto& n : p["notes"]) os << "  " << n.get<std::string>() << '\n';
  const auto& s = p["summary"];
  os << "\nwitnesses exact: " << yes(s["witnesses_exact"]) << "\nsamples contained: " << yes(s["samples_contained"])
     << "\nnegative bullets hold: " << yes(s["bullets_hold"]) << '\n';
  return os.str();
}

std::string text_theorem5(const Report& r) {
  const auto& p = r.payload;
  std::ostringstream os;
  std::map<int, std::pair<int, int>> tally;  // item -> (checked, disagreements)
  for (const auto& v : p["verdicts"]) {
    auto& t = tally[v["item"].get<int>()];
    ++t.first;
    if (!v["agree"].get<bool>()) ++t.second;
  }
  std::vector<std::vector<std::string>> rows{{"item", "property", "checked", "disagree"}};
  for (const auto& item : theorem5_items()) {
    const auto& t = tally[item.number];
    rows.push_back({std::to_string(item.number), item.property, std::to_string(t.first), std::to_string(t.second)});
  }
  os << grid(rows);
  os << "\ndisagreements:\n";
  std::vector<std::vector<std::string>> diff{{"item", "family", "parameters", "source", "claim", "computed", "values"}};
  for (const auto& v : p["verdicts"]) {
    if (v["agree"].get<bool>()) continue;
    std::string values;
    for (const auto& [k, x] : v["values"].items()) values += (values.empty() ? "" : ", ") + k + "=" + x.get<std::string>();
    diff.push_back({std::to_string(v["item"].get<int>()), v["family"].get<std::string>(), bindings_text(v["witness"]),
                    v["source"].get<std::string>(), v["claim"].get<bool>() ? "holds" : "fails",
                    v["computed"].get<bool>() ? "holds" : "fails", values});
  }
  os << grid(diff);
  os << "\nnotes:\n";
  for (const auto& n : p["notes"]) os << "  " << n.get<std::string>() << '\n';
  return os.str();
}

}  // namespace

json to_json(const Bindings& b) {
  json j = json::object();
  for (const auto& [k, v] : b) j[k] = v.to_string();
  return j;
}

Bindings bindings_from_json(const json& j) {
  Bindings b;
  for (const auto& [k, v] : j.items()) b[k] = parse_scalar(v.get<std::string>());
  return b;
}

json Report::to_json() const {
  return json{{"kind", kind}, {"meta", meta}, {"inputs", inputs}, {"payload", payload}};
}

Report Report::from_json(const json& j) {
  return Report{j.at("kind").get<std::string>(), j.at("meta"), j.at("inputs"), j.at("payload")};
}

Report make_classify_report(const AlgebraInput& input, const std::array<ClassLabel, 3>& labels) {
  Report r{"classify", meta(), inputs_of(input), json::object()};
  r.payload["family"] = input.family.empty() ? input.algebra.name() : input.family;
  r.payload["bindings"] = to_json(input.algebra.bindings());
  r.payload["labels"] = labels_json({labels[0].label(), labels[1].label(), labels[2].label()});
  return r;
}

Report make_curvature_report(const AlgebraInput& input, const Connection& conn, const CurvatureReport& c) {
  Report r{"curvature", meta(), inputs_of(input), json::object()};
  auto& p = r.payload;
  p["family"] = input.family.empty() ? input.algebra.name() : input.family;
  p["bindings"] = to_json(input.algebra.bindings());

  json nabla = json::object();  // "ij" -> coefficients of nabla_{e_i} e_j
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      json v = json::array();
      bool nonzero = false;
      for (int k = 1; k <= kDim; ++k) {
        v.push_back(conn.gamma(i, j, k).to_string());
        nonzero = nonzero || !conn.gamma(i, j, k).is_zero();
      }
      if (nonzero) nabla[std::to_string(i) + std::to_string(j)] = v;
    }
  p["nabla"] = nabla;

  json R = json::object();
  for (int i = 1; i <= kDim; ++i)
    for (int j = i + 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        for (int l = k + 1; l <= kDim; ++l) {
          const Scalar& v = c.riemann.R04(i, j, k, l);
          if (!v.is_zero()) R[std::to_string(i) + std::to_string(j) + std::to_string(k) + std::to_string(l)] = v.to_string();
        }
  p["R"] = R;
  p["flat"] = c.riemann.R04.is_zero();
  p["rho"] = matrix_json(c.ricci.rho);
  p["rho_star"] = json::array();
  for (const auto& m : c.ricci.rho_star) p["rho_star"].push_back(matrix_json(m));
  p["tau"] = c.ricci.tau.to_string();
  p["tau_star"] = json::array();
  p["tau_star_star"] = json::array();
  for (int a = 0; a < 3; ++a) {
    p["tau_star"].push_back(c.ricci.tau_star[static_cast<std::size_t>(a)].to_string());
    p["tau_star_star"].push_back(c.ricci.tau_star_star[static_cast<std::size_t>(a)].to_string());
  }
  p["k"] = json::object();
  p["plane_types"] = json::object();
  for (const auto& plane : basic_planes()) {
    p["k"][plane_key(plane)] = c.sectional.k.at(plane).to_string();
    json t = json::array();
    for (auto type : c.sectional.type.at(plane)) t.push_back(to_string(type));
    p["plane_types"][plane_key(plane)] = t;
  }
  return r;
}

Report make_table2_report(const Table2Report& t) {
  Report r{"verify-table2", meta(t.seed, t.samples), json{{"suite", "table2"}}, json::object()};
  json checks = json::array();
  for (const auto& c : t.checks) {
    checks.push_back(json{{"row", c.row},
                          {"family", c.family},
                          {"bindings", to_json(c.bindings)},
                          {"source", c.source},
                          {"expected", c.row.empty() ? json(nullptr) : labels_json(c.expected)},
                          {"computed", labels_json(c.computed)},
                          {"exact", c.exact},
                          {"contained", c.contained},
                          {"asserted", c.asserted},
                          {"bullet_violations", c.bullet_violations},
                          {"annotation", c.annotation}});
  }
  r.payload["checks"] = checks;
  r.payload["notes"] = t.notes;
  r.payload["summary"] = json{{"witnesses_exact", t.witnesses_exact()},
                              {"samples_contained", t.samples_contained()},
                              {"bullets_hold", t.bullets_hold()},
                              {"all_agree", t.all_agree()}};
  return r;
}

Report make_theorem5_report(const Theorem5Report& t) {
  Report r{"verify-theorem5", meta(t.seed, t.samples), json{{"suite", "theorem5"}}, json::object()};
  json verdicts = json::array();
  for (const auto& v : t.verdicts) {
    json values = json::object();
    for (const auto& [k, x] : v.values) values[k] = x.to_string();
    verdicts.push_back(json{{"item", v.item},
                            {"family", v.family},
                            {"witness", to_json(v.witness)},
                            {"source", v.source},
                            {"region", v.region},
                            {"claim", v.claim},
                            {"computed", v.computed},
                            {"agree", v.agree()},
                            {"values", values}});
  }
  r.payload["verdicts"] = verdicts;
  r.payload["notes"] = t.notes;
  r.payload["summary"] = json{{"all_agree", t.all_agree()}};
  return r;
}

std::string emit(const Report& report, Format format) {
  if (format == Format::Json) return report.to_json().dump(2) + "\n";
  if (report.kind == "classify") return text_classify(report);
  if (report.kind == "curvature") return text_curvature(report);
  if (report.kind == "verify-table2") return text_table2(report);
  if (report.kind == "verify-theorem5") return text_theorem5(report);
  throw Error(ErrorCode::SyntaxError, "unknown report kind '" + report.kind + "'");
}

}  // namespace hnlie
