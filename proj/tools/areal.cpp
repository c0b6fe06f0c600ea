// Command line front end: generate family graphs, decide the
// area-universality criterion, realize prescribed face areas, verify and
// render drawings.

#include "areal/area_assignment.hpp"
#include "areal/generators.hpp"
#include "areal/graph_io.hpp"
#include "areal/porder.hpp"
#include "areal/realizer.hpp"
#include "areal/svg.hpp"
#include "areal/symbolic.hpp"
#include "areal/triangulation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitNoPOrder = 3;
constexpr int kExitRealizeFailed = 4;
constexpr int kExitVerifyFailed = 5;

areal::Rational parse_tol(const std::string& text) {
  auto q = areal::parse_rational(text);
  if (!q || areal::sign(*q) <= 0) throw CLI::ValidationError("--tol must be a positive rational");
  return *q;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct ComponentVerdict {
  areal::AnalysisReport report;
  std::vector<int> vertices;  // input ids
};

struct CombinedAnalysis {
  areal::Verdict verdict;
  std::vector<ComponentVerdict> components;
  bool graph_eulerian = false;
};

// The criterion applies to 4-connected pieces; a triangulation is
// area-universal exactly when all its decomposition leaves are, and an
// Eulerian graph (or leaf) larger than a triangle never is.
CombinedAnalysis analyze_graph(const areal::PlaneTriangulation& t, int samples,
                               std::uint64_t seed) {
  CombinedAnalysis out;
  out.graph_eulerian = t.n > 3 && areal::is_eulerian(t);
  areal::DecompositionTree tree = areal::decompose(t);
  for (const areal::DecompositionNode* leaf : tree.leaves()) {
    ComponentVerdict cv;
    cv.report = areal::analyze(leaf->piece, samples, seed);
    cv.vertices = leaf->vmap;
    out.components.push_back(std::move(cv));
  }

  bool any_eulerian = out.graph_eulerian;
  bool all_universal = true;
  bool any_noporder = false, any_inconclusive = false;
  for (const ComponentVerdict& cv : out.components) {
    switch (cv.report.verdict) {
      case areal::Verdict::AreaUniversal:
        break;
      case areal::Verdict::NotAreaUniversalEulerian:
        any_eulerian = true;
        break;
      case areal::Verdict::NoPOrder:
        any_noporder = true;
        break;
      case areal::Verdict::Inconclusive:
        any_inconclusive = true;
        break;
    }
    if (cv.report.verdict != areal::Verdict::AreaUniversal) all_universal = false;
  }
  if (any_eulerian)
    out.verdict = areal::Verdict::NotAreaUniversalEulerian;
  else if (all_universal)
    out.verdict = areal::Verdict::AreaUniversal;
  else if (any_noporder)
    out.verdict = areal::Verdict::NoPOrder;
  else {
    (void)any_inconclusive;
    out.verdict = areal::Verdict::Inconclusive;
  }
  return out;
}

std::string human_verdict(const areal::AnalysisReport& r) {
  switch (r.verdict) {
    case areal::Verdict::AreaUniversal: {
      if (r.numerator_degree < 0) return "AREA-UNIVERSAL (" + r.detail + ")";
      return "AREA-UNIVERSAL (degrees " + std::to_string(r.numerator_degree) + "/" +
             std::to_string(r.denominator_degree) + ", crr, odd max-degree)";
    }
    case areal::Verdict::NotAreaUniversalEulerian:
      return "NOT AREA-UNIVERSAL (Eulerian)";
    case areal::Verdict::NoPOrder:
      return "NO P-ORDER (criterion not applicable)";
    case areal::Verdict::Inconclusive: {
      std::string s = "INCONCLUSIVE";
      if (r.numerator_degree >= 0)
        s += " (degrees " + std::to_string(r.numerator_degree) + "/" +
             std::to_string(r.denominator_degree) + (r.crr ? ", crr" : ", common real root") +
             (r.odd_max_degree ? ", odd" : ", even max-degree") + ")";
      return s;
    }
  }
  return "?";
}

json report_json(const areal::AnalysisReport& r) {
  json j;
  j["verdict"] = areal::verdict_name(r.verdict);
  j["detail"] = r.detail;
  if (r.numerator_degree >= 0) {
    j["degrees"] = {r.numerator_degree, r.denominator_degree};
    j["crr"] = r.crr;
    j["odd_max_degree"] = r.odd_max_degree;
  }
  j["samples_used"] = r.samples_used;
  j["candidates_tried"] = r.candidates_tried;
  if (r.porder) j["porder"] = r.porder->order;
  return j;
}

int run_generate(const areal::FamilySpec& spec, const std::string& output) {
  areal::PlaneTriangulation t = areal::generate(spec);
  areal::require_valid(t);
  emit(areal::write_graph(t), output);
  std::cerr << "n=" << t.n << " faces=" << t.face_count() << " (" << t.inner_faces.size()
            << " inner) eulerian=" << (areal::is_eulerian(t) ? "yes" : "no") << "\n";
  return 0;
}

int run_analyze(const std::string& graph_path, int samples, std::uint64_t seed, bool as_json) {
  areal::PlaneTriangulation t = areal::load_graph(graph_path);
  areal::require_valid(t);
  CombinedAnalysis res = analyze_graph(t, samples, seed);

  if (as_json) {
    json j;
    j["n"] = t.n;
    j["inner_faces"] = t.inner_faces.size();
    j["eulerian"] = res.graph_eulerian;
    j["verdict"] = areal::verdict_name(res.verdict);
    j["components"] = json::array();
    for (const ComponentVerdict& cv : res.components) {
      json c = report_json(cv.report);
      c["vertices"] = cv.vertices;
      j["components"].push_back(std::move(c));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graph: n=" << t.n << ", inner faces=" << t.inner_faces.size()
              << ", eulerian=" << (res.graph_eulerian ? "yes" : "no")
              << ", components=" << res.components.size() << "\n";
    for (std::size_t k = 0; k < res.components.size(); ++k) {
      const ComponentVerdict& cv = res.components[k];
      std::cout << "component " << k + 1 << " (" << cv.vertices.size()
                << " vertices): " << human_verdict(cv.report) << "\n";
      if (cv.report.porder) {
        std::cout << "  order:";
        for (int v : cv.report.porder->order) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    if (res.components.size() == 1) {
      std::cout << "verdict: " << human_verdict(res.components.front().report) << "\n";
    } else {
      areal::AnalysisReport combined;
      combined.verdict = res.verdict;
      std::cout << "verdict: " << human_verdict(combined) << "\n";
    }
  }

  switch (res.verdict) {
    case areal::Verdict::AreaUniversal:
    case areal::Verdict::NotAreaUniversalEulerian:
      return 0;
    case areal::Verdict::Inconclusive:
      return kExitInconclusive;
    case areal::Verdict::NoPOrder:
      return kExitNoPOrder;
  }
  return kExitError;
}

int run_realize(const std::string& graph_path, const std::string& areas_path, const std::string& tol_text,
                const std::string& output, const std::string& svg_path, bool as_json) {
  areal::PlaneTriangulation t = areal::load_graph(graph_path);
  areal::require_valid(t);
  areal::AreaAssignment a = areal::load_areas(areas_path);
  if (a.values.size() != t.inner_faces.size())
    throw std::runtime_error("area count " + std::to_string(a.values.size()) +
                             " does not match the inner face count " +
                             std::to_string(t.inner_faces.size()));
  areal::Rational tol = parse_tol(tol_text);

  areal::RealizeOutcome out = areal::realize(t, a, tol);
  if (out.status != areal::RealizeStatus::Ok) {
    std::cerr << "realization failed: " << out.error << "\n";
    return kExitRealizeFailed;
  }
  emit(areal::write_drawing(areal::make_drawing_file(out.drawing, out.report)), output);
  if (!svg_path.empty()) areal::save_svg(t, out.drawing, &a, tol, svg_path);

  if (as_json) {
    json j;
    j["status"] = "ok";
    j["max_rel_residual"] = areal::to_string(out.report.max_rel_residual);
    j["residual_faces"] = out.report.residual_faces;
    j["sum_identity"] = out.report.sum_identity_ok;
    j["orientations_ok"] = out.report.orientations_ok;
    if (out.report.x4) j["x4"] = areal::to_string(*out.report.x4);
    j["notes"] = out.report.notes;
    std::cerr << j.dump(2) << "\n";
  } else {
    std::cerr << "realized: max relative residual " << areal::to_string(out.report.max_rel_residual)
              << " on " << out.report.residual_faces.size() << " face(s); sum identity "
              << (out.report.sum_identity_ok ? "exact" : "BROKEN") << "; orientations "
              << (out.report.orientations_ok ? "ok" : "VIOLATED") << "\n";
    for (const std::string& note : out.report.notes) std::cerr << "  " << note << "\n";
  }
  return out.report.ok(tol) ? 0 : kExitRealizeFailed;
}

int run_verify(const std::string& graph_path, const std::string& areas_path,
               const std::string& drawing_path, const std::string& tol_text, bool as_json) {
  areal::PlaneTriangulation t = areal::load_graph(graph_path);
  areal::require_valid(t);
  areal::AreaAssignment a = areal::load_areas(areas_path);
  areal::DrawingFile df = areal::load_drawing(drawing_path);
  areal::Rational tol = parse_tol(tol_text);
  if (df.drawing.position.size() != static_cast<std::size_t>(t.n))
    throw std::runtime_error("drawing vertex count does not match the graph");

  areal::RealizationReport rep = areal::verify(t, a, df.drawing, tol);
  if (as_json) {
    json j;
    j["sum_identity"] = rep.sum_identity_ok;
    j["orientations_ok"] = rep.orientations_ok;
    j["max_rel_residual"] = areal::to_string(rep.max_rel_residual);
    j["faces"] = json::array();
    for (const areal::FaceCheck& c : rep.faces) {
      json f;
      f["face"] = c.face;
      f["target"] = areal::to_string(c.target);
      f["achieved"] = areal::to_string(c.achieved);
      f["residual"] = areal::to_string(c.residual);
      f["orientation_ok"] = c.orientation_ok;
      f["degenerate"] = c.degenerate;
      j["faces"].push_back(std::move(f));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const areal::FaceCheck& c : rep.faces) {
      std::cout << (t.is_outer(c.face) ? "outer" : "face " + std::to_string(c.face)) << ": target "
                << areal::to_string(c.target) << ", achieved " << areal::to_string(c.achieved)
                << ", residual " << areal::to_string(c.residual)
                << (c.orientation_ok ? "" : " ORIENTATION") << (c.degenerate ? " degenerate" : "")
                << "\n";
    }
    std::cout << "sum identity: " << (rep.sum_identity_ok ? "exact" : "BROKEN")
              << "; orientations: " << (rep.orientations_ok ? "ok" : "VIOLATED")
              << "; max relative residual: " << areal::to_string(rep.max_rel_residual) << "\n";
  }
  return rep.ok(tol) ? 0 : kExitVerifyFailed;
}

int run_render(const std::string& graph_path, const std::string& drawing_path,
               const std::string& areas_path, const std::string& tol_text, const std::string& output) {
  areal::PlaneTriangulation t = areal::load_graph(graph_path);
  areal::require_valid(t);
  areal::DrawingFile df = areal::load_drawing(drawing_path);
  std::optional<areal::AreaAssignment> a;
  if (!areas_path.empty()) a = areal::load_areas(areas_path);
  areal::Rational tol = parse_tol(tol_text);
  std::string svg = areal::render_svg(t, df.drawing, a ? &*a : nullptr, tol);
  emit(svg, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"areal: area-universality analysis and prescribed-area drawings of plane triangulations"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate a family graph");
  std::string family;
  std::vector<int> params;
  std::string gen_out;
  std::uint64_t gen_seed = 1;
  gen->add_option("family", family, "octahedron | k4 | accordion L | double-stacking L K | stacked N")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("-o,--output", gen_out, "output graph file (default: stdout)");
  gen->add_option("--seed", gen_seed, "seed for stacked");

  // analyze
  auto* ana = app.add_subcommand("analyze", "decide the area-universality criterion");
  std::string ana_graph;
  int samples = 3;
  std::uint64_t ana_seed = 1;
  bool ana_json = false;
  ana->add_option("graph", ana_graph, "graph file")->required();
  ana->add_option("--samples", samples, "independent generic assignments per candidate order")
      ->default_val(3);
  ana->add_option("--seed", ana_seed, "sampling seed")->default_val(1);
  ana->add_flag("--json", ana_json, "machine-readable output");

  // realize
  auto* rea = app.add_subcommand("realize", "construct a drawing with prescribed face areas");
  std::string rea_graph, rea_areas, rea_out, rea_svg, rea_tol = "1e-9";
  bool rea_json = false;
  rea->add_option("graph", rea_graph, "graph file")->required();
  rea->add_option("areas", rea_areas, "area file")->required();
  rea->add_option("--tol", rea_tol, "relative tolerance for the residual faces")->capture_default_str();
  rea->add_option("-o,--output", rea_out, "output drawing file (default: stdout)");
  rea->add_option("--svg", rea_svg, "also render an SVG to this path");
  rea->add_flag("--json", rea_json, "machine-readable summary");

  // verify
  auto* ver = app.add_subcommand("verify", "check a drawing against a graph and area file");
  std::string ver_graph, ver_areas, ver_drawing, ver_tol = "1e-9";
  bool ver_json = false;
  ver->add_option("graph", ver_graph, "graph file")->required();
  ver->add_option("areas", ver_areas, "area file")->required();
  ver->add_option("drawing", ver_drawing, "drawing file")->required();
  ver->add_option("--tol", ver_tol, "relative tolerance")->capture_default_str();
  ver->add_flag("--json", ver_json, "machine-readable output");

  // render
  auto* ren = app.add_subcommand("render", "render an SVG from an existing drawing file");
  std::string ren_graph, ren_drawing, ren_areas, ren_out, ren_tol = "1e-9";
  ren->add_option("graph", ren_graph, "graph file")->required();
  ren->add_option("drawing", ren_drawing, "drawing file")->required();
  ren->add_option("--areas", ren_areas, "area file for shading and labels");
  ren->add_option("--tol", ren_tol, "relative tolerance for shading")->capture_default_str();
  ren->add_option("-o,--output,--svg", ren_out, "output SVG (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      areal::FamilySpec spec;
      spec.seed = gen_seed;
      auto need = [&](std::size_t k) {
        if (params.size() != k)
          throw std::runtime_error("family '" + family + "' takes " + std::to_string(k) +
                                   " parameter(s)");
      };
      if (family == "octahedron") {
        need(0);
        spec.kind = areal::FamilySpec::Kind::Octahedron;
      } else if (family == "k4") {
        need(0);
        spec.kind = areal::FamilySpec::Kind::K4;
      } else if (family == "accordion") {
        need(1);
        spec.kind = areal::FamilySpec::Kind::Accordion;
        spec.l = params[0];
      } else if (family == "double-stacking") {
        need(2);
        spec.kind = areal::FamilySpec::Kind::DoubleStacking;
        spec.l = params[0];
        spec.k = params[1];
      } else if (family == "stacked") {
        need(1);
        spec.kind = areal::FamilySpec::Kind::Stacked;
        spec.n = params[0];
      } else {
        throw std::runtime_error("unknown family '" + family + "'");
      }
      return run_generate(spec, gen_out);
    }
    if (ana->parsed()) return run_analyze(ana_graph, samples, ana_seed, ana_json);
    if (rea->parsed()) return run_realize(rea_graph, rea_areas, rea_tol, rea_out, rea_svg, rea_json);
    if (ver->parsed()) return run_verify(ver_graph, ver_areas, ver_drawing, ver_tol, ver_json);
    if (ren->parsed()) return run_render(ren_graph, ren_drawing, ren_areas, ren_tol, ren_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
