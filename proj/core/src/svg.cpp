#include "areal/svg.hpp"

#include "areal/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace areal {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string render_svg(const PlaneTriangulation& t, const Drawing& d, const AreaAssignment* areas,
                       const Rational& tol) {
  if (static_cast<int>(d.position.size()) != t.n)
    throw std::invalid_argument("render_svg: drawing size differs from vertex count");

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (std::size_t v = 0; v < d.position.size(); ++v) {
    double x = to_double(d.position[v].x), y = to_double(d.position[v].y);
    if (v == 0) {
      minx = maxx = x;
      miny = maxy = y;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  double w = std::max(maxx - minx, 1e-12), h = std::max(maxy - miny, 1e-12);
  double margin = 0.05 * std::max(w, h);
  // SVG's y axis points down; mirror around the box.
  auto px = [&](const Point& p) { return to_double(p.x); };
  auto py = [&](const Point& p) { return maxy + miny - to_double(p.y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" viewBox=\"" << fmt(minx - margin)
     << " " << fmt(miny - margin) << " " << fmt(w + 2 * margin) << " " << fmt(h + 2 * margin)
     << "\">\n";
  double stroke = 0.004 * std::max(w, h);
  double font = 0.035 * std::max(w, h);

  for (std::size_t id = 0; id < t.inner_faces.size(); ++id) {
    const FaceTriple& fc = t.inner_faces[id];
    const Point& A = d.position[static_cast<std::size_t>(fc[0])];
    const Point& B = d.position[static_cast<std::size_t>(fc[1])];
    const Point& C = d.position[static_cast<std::size_t>(fc[2])];
    std::string fill = "#cfd8dc";
    std::string label;
    if (areas) {
      Rational target = areas->values[id];
      Rational achieved = det3(A, B, C);
      Rational resid = abs(achieved - target);
      if (sign(resid) == 0)
        fill = "#b5dcab";
      else if (resid <= tol * (sign(target) != 0 ? target : areas->total))
        fill = "#f6c453";
      else
        fill = "#e76f51";
      label = "t=" + fmt(to_double(target) / 2) + " a=" + fmt(to_double(achieved) / 2);
    }
    os << "  <polygon points=\"" << fmt(px(A)) << "," << fmt(py(A)) << " " << fmt(px(B)) << ","
       << fmt(py(B)) << " " << fmt(px(C)) << "," << fmt(py(C)) << "\" fill=\"" << fill
       << "\" stroke=\"#37474f\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
    if (!label.empty()) {
      double cx = (px(A) + px(B) + px(C)) / 3;
      double cy = (py(A) + py(B) + py(C)) / 3;
      os << "  <text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy) << "\" font-size=\"" << fmt(font * 0.6)
         << "\" text-anchor=\"middle\" fill=\"#263238\">" << label << "</text>\n";
    }
  }

  for (int v = 0; v < t.n; ++v) {
    const Point& p = d.position[static_cast<std::size_t>(v)];
    os << "  <circle cx=\"" << fmt(px(p)) << "\" cy=\"" << fmt(py(p)) << "\" r=\"" << fmt(stroke * 2.5)
       << "\" fill=\"#263238\"/>\n";
    os << "  <text x=\"" << fmt(px(p) + 3 * stroke) << "\" y=\"" << fmt(py(p) - 3 * stroke)
       << "\" font-size=\"" << fmt(font) << "\" fill=\"#1a237e\">" << t.label(v) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void save_svg(const PlaneTriangulation& t, const Drawing& d, const AreaAssignment* areas,
              const Rational& tol, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render_svg(t, d, areas, tol);
}

}  // namespace areal
