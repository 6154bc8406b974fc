#include "latcvx/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <latcvx/errors.hpp>

namespace latcvx::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

void collect(const io::json& cert, Overlay& out) {
  if (!cert.is_object() || !cert.contains("witnesses")) return;
  for (const auto& w : cert.at("witnesses")) {
    if (w.contains("segment")) {
      out.segments.emplace_back(io::vector_from_json(w.at("segment").at(0)),
                                io::vector_from_json(w.at("segment").at(1)));
    } else if (w.contains("vertex") && w.contains("direction")) {
      out.arrows.emplace_back(io::vector_from_json(w.at("vertex")),
                              io::vector_from_json(w.at("direction")));
    }
  }
}

}  // namespace

Overlay overlay_from_certificate(const io::json& j) {
  Overlay out;
  if (j.contains("witnesses")) {
    collect(j, out);
  } else {
    if (j.contains("reduced")) collect(j.at("reduced"), out);
    if (j.contains("complete")) collect(j.at("complete"), out);
  }
  return out;
}

std::string render_svg(const Polytope& p, const Lattice& l, const RenderOptions& opt) {
  if (p.dim() != 2 || l.dim() != 2) throw PreconditionError("wrong dimension");
  std::array<Rational, 4> win;
  if (opt.window) {
    win = *opt.window;
  } else {
    win = {p.vertices()[0][0], p.vertices()[0][0], p.vertices()[0][1], p.vertices()[0][1]};
    for (const auto& v : p.vertices()) {
      win[0] = min(win[0], v[0]);
      win[1] = max(win[1], v[0]);
      win[2] = min(win[2], v[1]);
      win[3] = max(win[3], v[1]);
    }
  }
  if (win[0] >= win[1] || win[2] >= win[3]) throw PreconditionError("empty render window");

  const double s = opt.pixels_per_unit;
  const double margin = 30;
  const double x0 = win[0].to_double(), y1 = win[3].to_double();
  const double width = (win[1] - win[0]).to_double() * s + 2 * margin;
  const double height = (win[3] - win[2]).to_double() * s + 2 * margin;
  auto px = [&](const Rational& x) { return fmt((x.to_double() - x0) * s + margin); };
  auto py = [&](const Rational& y) { return fmt((y1 - y.to_double()) * s + margin); };
  auto pxd = [&](double x) { return fmt((x - x0) * s + margin); };
  auto pyd = [&](double y) { return fmt((y1 - y) * s + margin); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  os << "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#c0392b\"/></marker></defs>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "  <polygon class=\"body\" points=\"";
  // vertices in angular order around the centroid
  const RatVector c = p.vertex_centroid();
  std::vector<std::pair<double, std::size_t>> order;
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    const RatVector d = p.vertices()[i] - c;
    order.emplace_back(std::atan2(d[1].to_double(), d[0].to_double()), i);
  }
  std::sort(order.begin(), order.end());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& v = p.vertices()[order[k].second];
    os << (k ? " " : "") << px(v[0]) << ',' << py(v[1]);
  }
  os << "\" fill=\"#d6eaf8\" stroke=\"#1b4f72\" stroke-width=\"2\"/>\n";

  std::vector<Facet> box{{RatVector{1, 0}, win[1]},
                         {RatVector{-1, 0}, -win[0]},
                         {RatVector{0, 1}, win[3]},
                         {RatVector{0, -1}, -win[2]}};
  for (const auto& q : enumerate_lattice_points(Polytope::from_inequalities(box), l,
                                                EnumerationMode::Closure))
    os << "  <circle class=\"lattice\" cx=\"" << px(q[0]) << "\" cy=\"" << py(q[1])
       << "\" r=\"3\" fill=\"#333\"/>\n";

  for (const auto& [a, b] : opt.overlay.segments)
    os << "  <line class=\"witness-segment\" x1=\"" << px(a[0]) << "\" y1=\"" << py(a[1])
       << "\" x2=\"" << px(b[0]) << "\" y2=\"" << py(b[1])
       << "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  for (const auto& [base, dir] : opt.overlay.arrows) {
    const double len = std::hypot(dir[0].to_double(), dir[1].to_double());
    const double bx = base[0].to_double(), by = base[1].to_double();
    const double tx = bx + 0.5 * dir[0].to_double() / len, ty = by + 0.5 * dir[1].to_double() / len;
    os << "  <line class=\"witness-arrow\" x1=\"" << pxd(bx) << "\" y1=\"" << pyd(by) << "\" x2=\""
       << pxd(tx) << "\" y2=\"" << pyd(ty)
       << "\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace latcvx::cli
