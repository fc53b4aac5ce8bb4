// skelefib: command-line driver for degeneration model files.
//
// Exit status: 0 success, 1 domain error (invalid model, failed
// construction), 2 malformed input (unreadable or ill-formed file, bad
// arguments).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skelefib/model_io.hpp"
#include "skelefib/report.hpp"

using namespace skelefib;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string file;
  FaceId face = 0;
  std::vector<FaceId> cycle;
  std::vector<FaceId> via;
  std::vector<std::string> point;
  std::string out;
  bool paper_basis = false;
  bool compact = false;
};

void emit(const json& j, const Options& o) { std::cout << (o.compact ? j.dump() : j.dump(2)) << '\n'; }

void write_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

BasisChoice basis_of(const Options& o) { return o.paper_basis ? BasisChoice::Explicit : BasisChoice::Hnf; }

DegenerationModel load_valid(const Options& o) {
  DegenerationModel m = load_model(o.file);
  require_valid(m);
  return m;
}

int cmd_report(const Options& o) {
  const DegenerationModel m = load_model(o.file);
  const json r = report_json(m);
  emit(r, o);
  if (r["valid"].get<bool>()) return 0;
  for (const auto& issue : r["issues"])
    std::cerr << "invalid: " << issue["check"].get<std::string>() << ' ' << issue["subject"].get<long>() << ": "
              << issue["message"].get<std::string>() << '\n';
  return 1;
}

int cmd_fan(const Options& o) {
  const DegenerationModel m = load_valid(o);
  json out = stratum_fan_json(chart_for_codim1_face(m, o.face, basis_of(o)));
  out["face"] = o.face;
  emit(out, o);
  return 0;
}

int cmd_chart(const Options& o) {
  const DegenerationModel m = load_valid(o);
  const Face& f = m.face(o.face);
  json out;
  out["face"] = o.face;
  if (f.dim() == m.n) {
    out["kind"] = "top";
    out["chart"] = canonical_chart_json(canonical_chart(m, o.face));
  } else if (f.dim() == m.n - 1) {
    const StratumCurveData* c = m.curve(o.face);
    if (!c) throw Error(ErrorCode::NotLogCalabiYau, "face " + std::to_string(o.face) + " has no curve data");
    out["kind"] = "stratum";
    out["fan"] = stratum_fan_json(chart_for_codim1_face(m, o.face, basis_of(o)));
    out["source"] = canonical_chart_json(canonical_chart(m, c->endpoint_faces.first));
    out["target"] = canonical_chart_json(canonical_chart(m, c->endpoint_faces.second));
    out["transition"] = transition_json(transition_across(m, o.face));
  } else {
    throw Error(ErrorCode::InvalidModel, "charts exist for top faces and codimension-one faces only");
  }
  emit(out, o);
  return 0;
}

int cmd_monodromy(const Options& o) {
  const DegenerationModel m = load_valid(o);
  const AffineTransition t = monodromy(m, o.cycle, o.via);
  json out = transition_json(t);
  out["cycle"] = o.cycle;
  emit(out, o);
  return 0;
}

int cmd_subdivide(const Options& o) {
  const DegenerationModel m = load_valid(o);
  const Subdivision s = star_subdivide(m, o.face);
  if (o.out.empty()) {
    std::cout << serialize_model(s.model, o.compact);
    if (o.compact) std::cout << '\n';
    return 0;
  }
  write_text(serialize_model(s.model), o.out);
  emit(json{{"subdivided_face", s.subdivided_face},
            {"new_vertex", s.new_vertex},
            {"new_top_faces", s.new_top_faces},
            {"out", o.out}},
       o);
  return 0;
}

int cmd_retract(const Options& o) {
  const DegenerationModel m = load_valid(o);
  const Face& f = m.face(o.face);
  if (o.point.size() != f.vertices.size())
    throw ParseError("--point needs " + std::to_string(f.vertices.size()) + " values, one per vertex of face " +
                     std::to_string(o.face));
  ValuedPoint x{o.face, {}};
  for (std::size_t k = 0; k < f.vertices.size(); ++k) x.q.emplace(f.vertices[k], parse_rational(o.point[k]));
  emit(skeleton_point_json(retract(m, x)), o);
  return 0;
}

int cmd_export_dot(const Options& o) {
  write_text(export_dot(load_valid(o)), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential skeletons, stratum fans and integral affine structures of degenerations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.compact, "Compact single-line JSON output");

  auto file_arg = [&o](CLI::App* sub) { sub->add_option("file", o.file, "Model file (JSON)")->required(); };
  auto face_arg = [&o](CLI::App* sub, const char* what) { sub->add_option("--face", o.face, what)->required(); };

  CLI::App* report = app.add_subcommand("report", "Validation, skeleton, pseudomanifold and homology summary");
  file_arg(report);

  CLI::App* fan = app.add_subcommand("fan", "Toric fan of a one-dimensional stratum");
  file_arg(fan);
  face_arg(fan, "Codimension-one face carrying curve data");
  fan->add_flag("--paper-basis", o.paper_basis, "Explicit basis u_0 = e_1, u_j = e_{j+1}, last u_j = 0 (reduced strata)");

  CLI::App* chart = app.add_subcommand("chart", "Canonical chart of a top face, or fan slice and transition of a stratum");
  file_arg(chart);
  face_arg(chart, "Top face or codimension-one face");
  chart->add_flag("--paper-basis", o.paper_basis, "Explicit basis for the fan slice (reduced strata)");

  CLI::App* mono = app.add_subcommand("monodromy", "Composed transition around a cycle of top faces");
  file_arg(mono);
  mono->add_option("--cycle", o.cycle, "Top face ids, comma separated")->delimiter(',')->required();
  mono->add_option("--via", o.via, "Codimension-one face crossed after each cycle entry")->delimiter(',');

  CLI::App* subdivide = app.add_subcommand("subdivide", "Star subdivision of a top face");
  file_arg(subdivide);
  face_arg(subdivide, "Top face to subdivide");
  subdivide->add_option("--out", o.out, "Write the subdivided model here");

  CLI::App* retract_cmd = app.add_subcommand("retract", "Retraction of a valued point to the skeleton");
  file_arg(retract_cmd);
  face_arg(retract_cmd, "Face containing the reduction of the point");
  retract_cmd->add_option("--point", o.point, "Valuations q_i in the face's vertex order, e.g. 1/3,2/3")
      ->delimiter(',')
      ->required();

  CLI::App* dot = app.add_subcommand("export-dot", "Graphviz drawing of the dual complex");
  file_arg(dot);
  dot->add_option("--out", o.out, "Write the DOT file here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (report->parsed()) return cmd_report(o);
    if (fan->parsed()) return cmd_fan(o);
    if (chart->parsed()) return cmd_chart(o);
    if (mono->parsed()) return cmd_monodromy(o);
    if (subdivide->parsed()) return cmd_subdivide(o);
    if (retract_cmd->parsed()) return cmd_retract(o);
    if (dot->parsed()) return cmd_export_dot(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
