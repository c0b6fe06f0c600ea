#include "areal/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace areal {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    number++;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line;
    line.number = number;
    std::string tok;
    while (is >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(line.number) + ": " + msg);
}

int parse_int(const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + tok + "'");
  }
}

Rational parse_value(const Line& line, const std::string& tok) {
  auto q = parse_rational(tok);
  if (!q) fail(line, "expected an exact rational, got '" + tok + "'");
  return *q;
}

std::string file_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

std::string write_graph(const PlaneTriangulation& t) {
  std::ostringstream os;
  os << "triangulation " << t.n << "\n";
  for (const FaceTriple& f : t.inner_faces) os << "inner " << f[0] << " " << f[1] << " " << f[2] << "\n";
  os << "outer " << t.outer_face[0] << " " << t.outer_face[1] << " " << t.outer_face[2] << "\n";
  for (std::size_t v = 0; v < t.labels.size(); ++v)
    if (!t.labels[v].empty()) os << "label " << v << " " << t.labels[v] << "\n";
  return os.str();
}

PlaneTriangulation parse_graph(std::string_view text) {
  PlaneTriangulation t;
  bool have_header = false, have_outer = false;
  for (const Line& line : tokenize(text)) {
    const std::string& kind = line.tokens.front();
    if (kind == "triangulation") {
      if (have_header) fail(line, "duplicate triangulation header");
      if (line.tokens.size() != 2) fail(line, "usage: triangulation <n>");
      t.n = parse_int(line, line.tokens[1]);
      have_header = true;
    } else if (kind == "inner" || kind == "outer") {
      if (!have_header) fail(line, "face before the triangulation header");
      if (line.tokens.size() != 4) fail(line, "usage: " + kind + " <a> <b> <c>");
      FaceTriple f{parse_int(line, line.tokens[1]), parse_int(line, line.tokens[2]),
                   parse_int(line, line.tokens[3])};
      if (kind == "inner") {
        t.inner_faces.push_back(f);
      } else {
        if (have_outer) fail(line, "duplicate outer face");
        t.outer_face = f;
        have_outer = true;
      }
    } else if (kind == "label") {
      if (!have_header) fail(line, "label before the triangulation header");
      if (line.tokens.size() != 3) fail(line, "usage: label <vertex> <text>");
      int v = parse_int(line, line.tokens[1]);
      if (v < 0 || v >= t.n) fail(line, "label vertex out of range");
      if (t.labels.empty()) t.labels.assign(static_cast<std::size_t>(t.n), "");
      t.labels[static_cast<std::size_t>(v)] = line.tokens[2];
    } else {
      fail(line, "unknown record '" + kind + "'");
    }
  }
  if (!have_header) throw std::runtime_error("missing triangulation header");
  if (!have_outer) throw std::runtime_error("missing outer face");
  return t;
}

PlaneTriangulation load_graph(const std::string& path) { return parse_graph(file_text(path)); }

void save_graph(const PlaneTriangulation& t, const std::string& path) {
  write_file(path, write_graph(t));
}

std::string write_areas(const AreaAssignment& a) {
  std::ostringstream os;
  os << "areas " << a.values.size() << "\n";
  for (std::size_t k = 0; k < a.values.size(); ++k) os << k << " " << to_string(a.values[k]) << "\n";
  return os.str();
}

AreaAssignment parse_areas(std::string_view text) {
  std::vector<std::optional<Rational>> vals;
  bool have_header = false;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.front() == "areas") {
      if (have_header) fail(line, "duplicate areas header");
      if (line.tokens.size() != 2) fail(line, "usage: areas <count>");
      int count = parse_int(line, line.tokens[1]);
      if (count < 0) fail(line, "negative count");
      vals.assign(static_cast<std::size_t>(count), std::nullopt);
      have_header = true;
    } else {
      if (!have_header) fail(line, "entry before the areas header");
      if (line.tokens.size() != 2) fail(line, "usage: <face-index> <value>");
      int idx = parse_int(line, line.tokens[0]);
      if (idx < 0 || idx >= static_cast<int>(vals.size())) fail(line, "face index out of range");
      if (vals[static_cast<std::size_t>(idx)]) fail(line, "duplicate face index");
      Rational v = parse_value(line, line.tokens[1]);
      if (sign(v) < 0) fail(line, "negative area");
      vals[static_cast<std::size_t>(idx)] = v;
    }
  }
  if (!have_header) throw std::runtime_error("missing areas header");
  std::vector<Rational> out;
  out.reserve(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (!vals[k]) throw std::runtime_error("missing area for face " + std::to_string(k));
    out.push_back(*vals[k]);
  }
  return AreaAssignment::make(std::move(out));
}

AreaAssignment load_areas(const std::string& path) { return parse_areas(file_text(path)); }

void save_areas(const AreaAssignment& a, const std::string& path) {
  write_file(path, write_areas(a));
}

DrawingFile make_drawing_file(const Drawing& d, const RealizationReport& report) {
  DrawingFile f;
  f.drawing = d;
  f.x4 = report.x4;
  for (const FaceCheck& c : report.faces) f.face_summaries.emplace_back(c.face, c.target, c.achieved);
  f.sum_identity_ok = report.sum_identity_ok;
  return f;
}

std::string write_drawing(const DrawingFile& f) {
  std::ostringstream os;
  os << "drawing " << f.drawing.position.size() << "\n";
  for (std::size_t v = 0; v < f.drawing.position.size(); ++v)
    os << "vertex " << v << " " << to_string(f.drawing.position[v].x) << " "
       << to_string(f.drawing.position[v].y) << "\n";
  if (f.x4) os << "x4 " << to_string(*f.x4) << "\n";
  for (const auto& [id, target, achieved] : f.face_summaries)
    os << "face " << id << " target " << to_string(target) << " achieved " << to_string(achieved)
       << "\n";
  if (f.sum_identity_ok) os << "sum-identity " << (*f.sum_identity_ok ? "exact" : "broken") << "\n";
  return os.str();
}

DrawingFile parse_drawing(std::string_view text) {
  DrawingFile f;
  std::vector<bool> seen;
  bool have_header = false;
  for (const Line& line : tokenize(text)) {
    const std::string& kind = line.tokens.front();
    if (kind == "drawing") {
      if (have_header) fail(line, "duplicate drawing header");
      if (line.tokens.size() != 2) fail(line, "usage: drawing <n>");
      int n = parse_int(line, line.tokens[1]);
      if (n < 0) fail(line, "negative vertex count");
      f.drawing.position.assign(static_cast<std::size_t>(n), Point{});
      seen.assign(static_cast<std::size_t>(n), false);
      have_header = true;
    } else if (kind == "vertex") {
      if (!have_header) fail(line, "vertex before the drawing header");
      if (line.tokens.size() != 4) fail(line, "usage: vertex <v> <x> <y>");
      int v = parse_int(line, line.tokens[1]);
      if (v < 0 || v >= static_cast<int>(seen.size())) fail(line, "vertex out of range");
      if (seen[static_cast<std::size_t>(v)]) fail(line, "duplicate vertex");
      seen[static_cast<std::size_t>(v)] = true;
      f.drawing.position[static_cast<std::size_t>(v)] = {parse_value(line, line.tokens[2]),
                                                         parse_value(line, line.tokens[3])};
    } else if (kind == "x4") {
      if (line.tokens.size() != 2) fail(line, "usage: x4 <value>");
      f.x4 = parse_value(line, line.tokens[1]);
    } else if (kind == "face") {
      if (line.tokens.size() != 6 || line.tokens[2] != "target" || line.tokens[4] != "achieved")
        fail(line, "usage: face <id> target <value> achieved <value>");
      f.face_summaries.emplace_back(parse_int(line, line.tokens[1]), parse_value(line, line.tokens[3]),
                                    parse_value(line, line.tokens[5]));
    } else if (kind == "sum-identity") {
      if (line.tokens.size() != 2 || (line.tokens[1] != "exact" && line.tokens[1] != "broken"))
        fail(line, "usage: sum-identity exact|broken");
      f.sum_identity_ok = line.tokens[1] == "exact";
    } else {
      fail(line, "unknown record '" + kind + "'");
    }
  }
  if (!have_header) throw std::runtime_error("missing drawing header");
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw std::runtime_error("missing coordinates for vertex " + std::to_string(v));
  return f;
}

DrawingFile load_drawing(const std::string& path) { return parse_drawing(file_text(path)); }

void save_drawing(const DrawingFile& f, const std::string& path) {
  write_file(path, write_drawing(f));
}

}  // namespace areal
