#include "axialkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "axialkit/decomp.hpp"
#include "axialkit/errors.hpp"
#include "axialkit/io.hpp"
#include "axialkit/matsuo.hpp"
#include "axialkit/report.hpp"

namespace axialkit::cli {

namespace {

std::optional<std::size_t> env_cap() {
  const char* v = std::getenv("AXIALKIT_CAP");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw std::invalid_argument("AXIALKIT_CAP must be a positive integer");
  return static_cast<std::size_t>(n);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

PermGroupData group_from_config(const Json& g, const std::string& where) {
  if (g.is_string()) return builtin_group(g.get<std::string>());
  if (g.is_object() && g.contains("file") && g["file"].is_string()) {
    PermGroupData d = read_group_file(g["file"].get<std::string>());
    if (g.contains("label") && g["label"].is_string()) d.label = g["label"].get<std::string>();
    return d;
  }
  throw ParseError("expected a builtin name or {\"file\": path}", 0, where);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in axial algebras", "axialkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "axialkit 1.0.0");

  std::string file, file2, group_file, builtin, eta_text, out_path, config, format = "json", dot_dir;
  std::optional<std::size_t> cap;
  AnalyzeOptions opt;

  auto* validate = app.add_subcommand("validate", "Check axioms A1-A3 for every designated axis");
  validate->add_option("file", file, "Algebra file")->required();

  auto* analyze = app.add_subcommand("analyze", "Full structural report");
  analyze->add_option("file", file, "Algebra file")->required();
  analyze->add_flag("--radical", opt.radical, "Algebra radical and annihilator");
  analyze->add_flag("--form", opt.form, "Frobenius form and the radical theorem");
  analyze->add_flag("--graphs", opt.graphs, "Projection, orbit and non-annihilating graphs");
  analyze->add_flag("--group", opt.group, "Miyamoto group and axis closure");
  analyze->add_flag("--decompose", opt.decompose, "Sum decomposition along the non-annihilating graph");
  analyze->add_flag("--body", opt.body, "Body and m-closure");
  analyze->add_option("--cap", cap, "Cap on group order and axis closure size")->check(CLI::PositiveNumber);
  analyze->add_option("--dot", dot_dir, "Directory for DOT graph files");
  analyze->add_flag("--parallel", opt.parallel, "Evaluate sections concurrently");

  auto* matsuo = app.add_subcommand("matsuo", "Build a Matsuo algebra file");
  matsuo->add_option("groupfile", group_file, "Group description file");
  matsuo->add_option("--builtin", builtin, "S3, S4, S5 or a product such as S3xS3");
  matsuo->add_option("--eta", eta_text, "Parameter eta as p/q")->required();
  matsuo->add_option("--out", out_path, "Output file (default stdout)");

  auto* explore = app.add_subcommand("explore", "Sweep Matsuo algebras and record their decompositions");
  explore->add_option("config", config, "JSON config: {\"groups\": [...], \"etas\": [...]}")->required();
  explore->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  explore->add_option("--out", out_path, "Output file (default stdout)");

  auto* closure = app.add_subcommand("closure", "Close the axis set under its Miyamoto involutions");
  closure->add_option("file", file, "Algebra file")->required();
  closure->add_option("--with", file2, "Second algebra file; report whether the two axis sets are equivalent");
  closure->add_option("--cap", cap, "Cap on the closure size")->check(CLI::PositiveNumber);

  auto* body_cmd = app.add_subcommand("body", "Body of the algebra and full-bodiedness");
  body_cmd->add_option("file", file, "Algebra file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const std::size_t default_cap = env_cap().value_or(0);
    const std::size_t group_cap = cap ? *cap : (default_cap ? default_cap : kDefaultGroupCap);
    const std::size_t axis_cap = cap ? *cap : (default_cap ? default_cap : kDefaultAxisCap);

    if (*validate) {
      bool ok = false;
      emit(out, validate_report(read_algebra_file(file), ok));
      return ok ? kExitOk : kExitFinding;
    }
    if (*analyze) {
      opt.group_cap = group_cap;
      opt.axis_cap = axis_cap;
      opt.dot_dir = dot_dir;
      emit(out, analyze_report(read_algebra_file(file), opt));
      return kExitOk;
    }
    if (*matsuo) {
      if (group_file.empty() == builtin.empty()) throw std::invalid_argument("give exactly one of groupfile or --builtin");
      const PermGroupData data = builtin.empty() ? read_group_file(group_file) : builtin_group(builtin);
      const auto check = verify_3transpositions(data);
      if (!check.ok) {
        err << "error: not a 3-transposition class: " << check.violations.front() << '\n';
        return kExitError;
      }
      write_output(out_path, out, write_algebra(matsuo_algebra(data, Rational::parse(eta_text))));
      return kExitOk;
    }
    if (*explore) {
      std::ifstream in(config);
      if (!in) throw std::runtime_error("cannot open " + config);
      Json cfg;
      try {
        cfg = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0, config);
      }
      std::vector<ExploreCase> cases;
      std::vector<Rational> etas;
      if (cfg.contains("groups")) {
        if (!cfg["groups"].is_array()) throw ParseError("expected an array", 0, "groups");
        for (std::size_t i = 0; i < cfg["groups"].size(); ++i) {
          PermGroupData g = group_from_config(cfg["groups"][i], "groups[" + std::to_string(i) + "]");
          cases.push_back({g.label, std::move(g)});
        }
      }
      if (cfg.contains("etas")) {
        if (!cfg["etas"].is_array()) throw ParseError("expected an array", 0, "etas");
        for (std::size_t i = 0; i < cfg["etas"].size(); ++i) {
          const Json& e = cfg["etas"][i];
          if (!e.is_string() && !e.is_number_integer()) throw ParseError("expected \"p/q\"", 0, "etas[" + std::to_string(i) + "]");
          etas.push_back(e.is_string() ? Rational::parse(e.get<std::string>()) : Rational(e.get<long>()));
        }
      }
      const auto rows = explore_conjecture(cases, etas);
      write_output(out_path, out, format == "csv" ? explore_csv(rows) : explore_json(rows).dump(2) + "\n");
      for (const auto& r : rows) {
        if (is_counterexample(r)) {
          err << "flag: " << r.group << " at eta " << r.eta << " has components that do not annihilate each other\n";
          return kExitFinding;
        }
      }
      return kExitOk;
    }
    if (*closure) {
      const AxialAlgebra alg = read_algebra_file(file);
      Json report = closure_report(alg, axis_cap);
      if (!file2.empty()) {
        const AxialAlgebra other = read_algebra_file(file2);
        if (!(other.algebra() == alg.algebra())) throw std::invalid_argument("the two files describe different algebras");
        if (!alg.law().grading()) throw std::invalid_argument("fusion law has no C2 grading");
        report["equivalent"] = equivalent(alg.algebra(), alg.axes(), other.axes(), alg.law(), *alg.law().grading(), axis_cap);
      }
      emit(out, report);
      return kExitOk;
    }
    if (*body_cmd) {
      emit(out, body_report(read_algebra_file(file)));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace axialkit::cli
