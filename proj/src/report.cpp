#include "axialkit/report.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>

#include "axialkit/axes.hpp"
#include "axialkit/frobenius.hpp"
#include "axialkit/graphs.hpp"

namespace axialkit {

namespace {

Json names_of(const AxialAlgebra& alg, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(alg.axis_names()[i]);
  return out;
}

Json partition_json(const AxialAlgebra& alg, const std::vector<std::vector<std::size_t>>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(names_of(alg, b));
  return out;
}

Json digraph_json(const DiGraph& g) {
  Json edges = Json::array();
  for (const auto& [v, w] : g.edges()) edges.push_back(Json::array({g.labels[v], g.labels[w]}));
  return {{"vertices", g.labels}, {"edges", std::move(edges)}};
}

std::vector<std::vector<std::size_t>> orbits_or_singletons(const AxialAlgebra& alg, std::size_t cap) {
  if (alg.law().grading()) return axis_orbits(alg, cap);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < alg.axes().size(); ++a) out.push_back({a});
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

Json radical_section(const AxialAlgebra& alg) {
  return {{"algebra_radical", subspace_json(algebra_radical(alg))},
          {"annihilator", subspace_json(annihilator(alg.algebra()))}};
}

Json form_section(const AxialAlgebra& alg) {
  const bool prescribed = alg.axis_values().has_value();
  const FormSolution f = prescribed ? solve_form(alg) : projection_form(alg);
  Json out = {{"prescription", prescribed ? "axis_values" : "projection"}, {"status", to_string(f.status)}};
  if (f.status == FormStatus::family) out["family_dim"] = f.family_dim;
  if (!f.is_unique()) return out;
  out["gram"] = to_json(f.gram);
  out["associating"] = is_associating(alg.algebra(), f.gram);
  out["positive_definite"] = is_positive_definite(f.gram);
  out["form_radical"] = subspace_json(form_radical(f));
  const RadicalTheoremReport t = verify_radical_theorem(alg, f);
  Json tj = {{"all_axis_values_nonzero", t.all_axis_values_nonzero},
             {"radicals_equal", t.radicals_equal},
             {"algebra_radical_dim", t.algebra_radical_dim},
             {"form_radical_dim", t.form_radical_dim},
             {"holds", t.holds}};
  if (t.certificate) tj["certificate"] = to_json(*t.certificate);
  out["radical_theorem"] = std::move(tj);
  return out;
}

Json graphs_section(const AxialAlgebra& alg, const AnalyzeOptions& opt) {
  const DiGraph gamma = projection_graph(alg);
  const SccResult s = scc(gamma);
  const auto orbits = orbits_or_singletons(alg, opt.axis_cap);
  const DiGraph quotient = orbit_projection_graph(gamma, orbits);
  const SccResult qs = scc(quotient);
  const DeltaGraph delta = nonannihilating_graph(alg);

  Json delta_edges = Json::array();
  for (const auto& [a, b] : delta.graph.edges()) delta_edges.push_back(Json::array({delta.graph.labels[a], delta.graph.labels[b]}));
  Json out = {
      {"projection_graph", digraph_json(gamma)},
      {"projection_scc", partition_json(alg, s.components)},
      {"strongly_connected", s.strongly_connected},
      {"orbits", partition_json(alg, orbits)},
      {"orbit_graph", digraph_json(quotient)},
      {"orbit_graph_strongly_connected", qs.strongly_connected},
      {"delta", {{"edges", std::move(delta_edges)}, {"components", partition_json(alg, delta.components)}}},
  };
  if (!opt.dot_dir.empty()) {
    const std::filesystem::path dir(opt.dot_dir);
    std::filesystem::create_directories(dir);
    write_text(dir / "gamma.dot", to_dot(gamma, "Gamma"));
    write_text(dir / "gamma_orbits.dot", to_dot(quotient, "GammaOrbits"));
    write_text(dir / "delta.dot", to_dot(delta.graph, "Delta"));
    out["dot_files"] = {(dir / "gamma.dot").string(), (dir / "gamma_orbits.dot").string(), (dir / "delta.dot").string()};
  }
  return out;
}

Json group_section(const AxialAlgebra& alg, const AnalyzeOptions& opt) {
  const MatrixGroup g = miyamoto_group(alg, opt.group_cap);
  const AxisOrbitSet closure = close_axes(alg, opt.axis_cap);
  Json out = {{"status", g.complete ? "complete" : "incomplete"},
              {"order", g.order()},
              {"cap", g.cap},
              {"generators", g.generators.size()},
              {"closure_size", closure.axes.size()},
              {"closure_closed", closure.closed}};
  if (g.complete) out["orbits"] = partition_json(alg, axis_orbits(alg.axes(), g));
  return out;
}

Json decompose_section(const AxialAlgebra& alg) {
  const SumDecomposition d = decompose_by_delta(alg);
  Json parts = Json::array();
  for (const auto& p : d.parts) parts.push_back({{"axes", names_of(alg, p.axes)}, {"dim", p.span.dim()}});
  Json out = {{"parts", std::move(parts)},
              {"pairwise_zero", d.pairwise_zero},
              {"spans_all", d.spans_all},
              {"direct", d.direct},
              {"annihilator_dim", annihilator(alg.algebra()).dim()}};
  if (d.parts.size() >= 2 && is_seress(alg.law()) && d.pairwise_zero) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i < d.parts.size(); ++i) rest.insert(rest.end(), d.parts[i].axes.begin(), d.parts[i].axes.end());
    const SplitoffReport s = splitoff_check(alg, d.parts[0].axes, rest);
    Json sj = {{"annihilates", s.annihilates}, {"a1_full_bodied", s.a1_full_bodied}, {"holds", s.holds()}};
    if (s.sum_is_all) sj["sum_is_all"] = *s.sum_is_all;
    out["splitoff_first_part"] = std::move(sj);
  }
  return out;
}

Json guarded(const std::function<Json()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {{"error", e.what()}};
  }
}

}  // namespace

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(to_json(s.basis().row(r)));
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json validate_report(const AxialAlgebra& alg, bool& all_axes_ok) {
  all_axes_ok = true;
  const FusionLaw& law = alg.law();
  Json axes = Json::array();
  for (std::size_t i = 0; i < alg.axes().size(); ++i) {
    const AxisReport r = check_axis(alg.algebra(), alg.axes()[i], law);
    Json dims = Json::object();
    for (std::size_t k = 0; k < law.size(); ++k) dims[law.eigenvalue(k).str()] = r.eigenspace_dims[k];
    Json violations = Json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}, {"witness", to_json(v.witness)}});
    }
    Json a = {{"name", alg.axis_names()[i]},
              {"A1_idempotent", r.idempotent},
              {"A2_semisimple", r.semisimple_in_law},
              {"A3_fusion", r.fusion_ok},
              {"primitive", r.primitive},
              {"eigenspace_dims", std::move(dims)},
              {"eigenspace_total", r.eigenspace_total}};
    if (!r.idempotent) a["idempotent_defect"] = to_json(r.idempotent_defect);
    a["violations"] = std::move(violations);
    a["axis"] = r.is_axis();
    if (!r.is_axis()) all_axes_ok = false;
    axes.push_back(std::move(a));
  }
  Json lawj = {{"name", law.name()}, {"size", law.size()}, {"seress", is_seress(law)}};
  if (law.grading()) lawj["grading_valid"] = validate_grading(law, *law.grading());
  return {{"dim", alg.dim()}, {"fusion_law", std::move(lawj)}, {"axes", std::move(axes)}, {"all_axes_ok", all_axes_ok}};
}

Json analyze_report(const AxialAlgebra& alg, const AnalyzeOptions& opt) {
  const bool all = opt.none_selected();
  std::vector<std::pair<std::string, std::function<Json()>>> sections;
  sections.emplace_back("validate", [&] {
    bool ok = false;
    return validate_report(alg, ok);
  });
  if (all || opt.radical) sections.emplace_back("radical", [&] { return radical_section(alg); });
  if (all || opt.form) sections.emplace_back("form", [&] { return form_section(alg); });
  if (all || opt.graphs) sections.emplace_back("graphs", [&] { return graphs_section(alg, opt); });
  if (all || opt.group) sections.emplace_back("group", [&] { return group_section(alg, opt); });
  if (all || opt.decompose) sections.emplace_back("decompose", [&] { return decompose_section(alg); });
  if (all || opt.body) sections.emplace_back("body", [&] { return body_report(alg); });

  std::vector<Json> results(sections.size());
  if (opt.parallel) {
    std::vector<std::future<Json>> futures;
    for (const auto& s : sections) futures.push_back(std::async(std::launch::async, guarded, s.second));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < sections.size(); ++i) results[i] = guarded(sections[i].second);
  }
  Json out = Json::object();
  for (std::size_t i = 0; i < sections.size(); ++i) out[sections[i].first] = std::move(results[i]);
  return out;
}

Json closure_report(const AxialAlgebra& alg, std::size_t cap) {
  const AxisOrbitSet c = close_axes(alg, cap);
  Json added = Json::array();
  for (std::size_t i = alg.axes().size(); i < c.axes.size(); ++i) added.push_back(to_json(c.axes[i]));
  return {{"input_axes", alg.axes().size()}, {"closure_size", c.axes.size()}, {"closed", c.closed}, {"added", std::move(added)}};
}

Json body_report(const AxialAlgebra& alg) {
  const Body b = body(alg);
  const SubalgebraClosure s = subalgebra_closure(alg.algebra(), alg.axes());
  return {{"body", subspace_json(b.span)},
          {"full_bodied", b.full_bodied},
          {"generated_dim", s.span.dim()},
          {"m_closed", s.m}};
}

Json explore_json(std::span<const ExploreRow> rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"group", r.group},
                   {"eta", r.eta.str()},
                   {"n_components", r.n_components},
                   {"pairwise_zero", r.pairwise_zero},
                   {"spans_all", r.spans_all},
                   {"direct", r.direct},
                   {"radical_dim", r.radical_dim},
                   {"ann_dim", r.ann_dim},
                   {"full_bodied", r.full_bodied},
                   {"m_closed", r.m_closed},
                   {"error", r.error}});
  }
  return out;
}

std::string explore_csv(std::span<const ExploreRow> rows) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << "group,eta,n_components,pairwise_zero,spans_all,direct,radical_dim,ann_dim,full_bodied,m_closed,error\n";
  for (const auto& r : rows) {
    os << field(r.group) << ',' << r.eta.str() << ',' << r.n_components << ',' << b(r.pairwise_zero) << ','
       << b(r.spans_all) << ',' << b(r.direct) << ',' << r.radical_dim << ',' << r.ann_dim << ','
       << b(r.full_bodied) << ',' << r.m_closed << ',' << field(r.error) << '\n';
  }
  return os.str();
}

}  // namespace axialkit
