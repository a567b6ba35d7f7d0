#include "hnlie/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hnlie/error.hpp"
#include "hnlie/report.hpp"

namespace hnlie {

namespace {

struct Selector {
  std::string family;
  std::string file;
  std::vector<std::string> params;
};

void add_selector(CLI::App* cmd, Selector& s) {
  auto* fam = cmd->add_option("--family", s.family, "builtin family g4_1 .. g4_12");
  auto* file = cmd->add_option("--file", s.file, "algebra file");
  fam->excludes(file);
  cmd->add_option("--param", s.params, "parameter binding k=v (repeatable)");
}

Bindings parse_params(const std::vector<std::string>& params) {
  Bindings b;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::SyntaxError, "--param expects k=v, got '" + p + "'");
    b[p.substr(0, eq)] = parse_scalar(p.substr(eq + 1));
  }
  return b;
}

AlgebraInput resolve(const Selector& s) {
  AlgebraInput in;
  const Bindings b = parse_params(s.params);
  if (!s.family.empty()) {
    in.family = find_family(s.family).id;
    in.algebra = builtin(in.family, b);
  } else if (!s.file.empty()) {
    in.file = s.file;
    in.algebra = LieAlgebra::instantiate(load_algebra(s.file), b);
  } else {
    throw Error(ErrorCode::SyntaxError, "one of --family or --file is required");
  }
  const AlgebraReport check = check_jacobi(in.algebra);
  if (!check.ok()) {
    std::string what = "input is not a Lie algebra:";
    for (const auto& v : check.jacobi_violations)
      what += " Jacobi fails on (e" + std::to_string(v.i) + ",e" + std::to_string(v.j) + ",e" + std::to_string(v.k) + ")";
    if (!check.antisymmetry_violations.empty()) what += " structure constants not antisymmetric";
    throw Error(ErrorCode::DomainViolation, what);
  }
  return in;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermitian-Norden geometry of 4-dimensional Lie algebras"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  std::string data = default_witness_path();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "write the report to this file");
  app.add_option("--data", data, "witness file");

  Selector cls_sel, curv_sel;
  auto* classify_cmd = app.add_subcommand("classify", "class of the algebra w.r.t. J1, J2, J3");
  add_selector(classify_cmd, cls_sel);
  auto* curvature_cmd = app.add_subcommand("curvature", "curvature tensors and scalars");
  add_selector(curvature_cmd, curv_sel);

  std::string suite;
  int samples = 5;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run a regression suite against the reference tables");
  verify_cmd->add_option("suite", suite, "table2 or theorem5")->required()->check(CLI::IsMember({"table2", "theorem5"}));
  verify_cmd->add_option("--samples", samples, "random samples per region")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "sampler seed");

  for (auto* sub : {classify_cmd, curvature_cmd, verify_cmd}) {
    // allow global options after the subcommand
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? 0 : 1;
  }

  try {
    Report report;
    int status = 0;
    if (*classify_cmd) {
      const AlgebraInput in = resolve(cls_sel);
      report = make_classify_report(in, classify(in.algebra, standard_h()));
    } else if (*curvature_cmd) {
      const AlgebraInput in = resolve(curv_sel);
      const HNStructure h = standard_h();
      const Connection conn = koszul_connection(in.algebra, h);
      CurvatureReport c;
      c.riemann = riemann(conn, in.algebra, h);
      c.ricci = ricci_and_scalars(c.riemann.R04, h);
      c.sectional = sectional(c.riemann.R04, h);
      report = make_curvature_report(in, conn, c);
    } else {
      const WitnessSet w = load_witnesses(data);
      if (suite == "table2") {
        const Table2Report t = table2_report(w, samples, seed);
        report = make_table2_report(t);
        status = t.all_agree() ? 0 : 2;
      } else {
        const Theorem5Report t = theorem5_report(w, samples, seed);
        report = make_theorem5_report(t);
        status = t.all_agree() ? 0 : 2;
      }
      report.inputs["data"] = data;
    }

    const std::string text = emit(report, format == "json" ? Format::Json : Format::Text);
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output);
      if (!file) throw Error(ErrorCode::Io, "cannot write " + output);
      file << text;
    }
    if (status == 2) err << "regression: disagreements with the reference tables (see report)\n";
    return status;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hnlie
