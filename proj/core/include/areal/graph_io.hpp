#pragma once

#include "areal/area_assignment.hpp"
#include "areal/realizer.hpp"
#include "areal/triangulation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace areal {

// Line-oriented UTF-8 records; '#' starts a comment, blank lines are
// ignored. All numbers are exact rationals ("p", "p/q"); floating point
// never appears in files.
//
//   triangulation <n>      graph file: inner faces (ccw), outer face (cw)
//   inner <a> <b> <c>
//   outer <a> <b> <c>
//   label <v> <text>
//
//   areas <count>          area file: one line per inner face index
//   <index> <value>
//
//   drawing <n>            drawing file: exact coordinates plus an optional
//   vertex <v> <x> <y>     realization summary
//   x4 <value>
//   face <id> target <value> achieved <value>
//   sum-identity exact|broken

std::string write_graph(const PlaneTriangulation& t);
PlaneTriangulation parse_graph(std::string_view text);  // throws std::runtime_error
PlaneTriangulation load_graph(const std::string& path);
void save_graph(const PlaneTriangulation& t, const std::string& path);

std::string write_areas(const AreaAssignment& a);
AreaAssignment parse_areas(std::string_view text);
AreaAssignment load_areas(const std::string& path);
void save_areas(const AreaAssignment& a, const std::string& path);

struct DrawingFile {
  Drawing drawing;
  std::optional<Rational> x4;
  std::vector<std::tuple<int, Rational, Rational>> face_summaries;  // id, target, achieved
  std::optional<bool> sum_identity_ok;
};

DrawingFile make_drawing_file(const Drawing& d, const RealizationReport& report);
std::string write_drawing(const DrawingFile& f);
DrawingFile parse_drawing(std::string_view text);
DrawingFile load_drawing(const std::string& path);
void save_drawing(const DrawingFile& f, const std::string& path);

}  // namespace areal
