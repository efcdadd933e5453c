#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxwave/coxeter.hpp"
#include "coxwave/lattice.hpp"
#include "coxwave/mra.hpp"
#include "coxwave/sampling.hpp"
#include "coxwave/wavelet_sets.hpp"

namespace coxwave {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON: rationals as exact "p/q" strings, matrices as row arrays
// ---------------------------------------------------------------------------

inline json to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  throw InvalidInputError("expected rational as \"p/q\" string or integer");
}

inline json to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

inline RatVec ratvec_from_json(const json& j) {
  RatVec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

inline json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

inline Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInputError("expected matrix rows");
  int rows = int(j.size()), cols = int(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (int(j[r].size()) != cols) throw InvalidInputError("ragged matrix");
    for (int c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

inline json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline json to_json(const Region& region) {
  json cells = json::array();
  for (const Box& c : region.cells())
    cells.push_back(json{{"lo", to_json(c.lo)}, {"hi", to_json(c.hi)}});
  return json{{"frame", matrix_to_json(region.frame().basis())},
              {"cells", std::move(cells)}};
}

inline Region region_from_json(const json& j) {
  Frame frame(matrix_from_json(j.at("frame")));
  std::vector<Box> cells;
  for (const auto& c : j.at("cells"))
    cells.emplace_back(ratvec_from_json(c.at("lo")), ratvec_from_json(c.at("hi")));
  return Region(std::move(frame), std::move(cells));
}

inline json to_json(const RatMat& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(rat_to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline RatMat ratmat_from_json(const json& j) {
  int n = int(j.size());
  std::vector<RatVec> cols(n, RatVec(n));
  for (int r = 0; r < n; ++r) {
    if (int(j[r].size()) != n) throw InvalidInputError("ragged rational matrix");
    for (int c = 0; c < n; ++c) cols[c][r] = rat_from_json(j[r][c]);
  }
  return RatMat(std::move(cols));
}

inline json to_json(const Lattice& lat) {
  return json{{"frame", matrix_to_json(lat.frame().basis())},
              {"gen", to_json(lat.generator())}};
}

inline Lattice lattice_from_json(const json& j) {
  return Lattice(Frame(matrix_from_json(j.at("frame"))),
                 ratmat_from_json(j.at("gen")));
}

inline json to_json(const DilationScheme& scheme) {
  return json{{"frame", matrix_to_json(scheme.frame().basis())},
              {"scales", to_json(scheme.scales())}};
}

inline DilationScheme scheme_from_json(const json& j) {
  return DilationScheme(Frame(matrix_from_json(j.at("frame"))),
                        ratvec_from_json(j.at("scales")));
}

inline json to_json(const TileReport& r) {
  return json{{"is_tile", r.is_tile},
              {"overlap_volume", r.overlap_volume},
              {"gap_volume", r.gap_volume},
              {"defect_cells", r.defect_cells}};
}

inline json to_json(const MultiplicityReport& r) {
  json hist = json::object();
  for (const auto& [mult, frac] : r.histogram)
    hist[std::to_string(mult)] = frac;
  return json{{"histogram", std::move(hist)},
              {"boundary_fraction", r.boundary_fraction},
              {"seed", r.seed},
              {"n_samples", r.n_samples}};
}

inline json to_json(const MraChecks& c) {
  return json{{"partition", c.partition},
              {"congruence", c.congruence},
              {"refinement", c.refinement},
              {"gram", c.gram}};
}

/// Root system + group document: roots/simple/dual as vector lists, group
/// elements as row-major matrices.
inline json group_document(const RootSystem& rs, const SimpleSystem& pi,
                           const DualBasis& dual, const ReflectionGroup& w) {
  json roots = json::array();
  for (const auto& r : rs.roots) roots.push_back(vector_to_json(r));
  json simple = json::array();
  for (const auto& r : pi.simple_roots) simple.push_back(vector_to_json(r));
  json duals = json::array();
  for (const auto& r : dual.dual_roots) duals.push_back(vector_to_json(r));
  json elements = json::array();
  for (const auto& e : w.elements()) elements.push_back(matrix_to_json(e));
  return json{{"dim", rs.dim},          {"family", rs.family.name()},
              {"roots", std::move(roots)},   {"simple", std::move(simple)},
              {"dual", std::move(duals)},    {"elements", std::move(elements)}};
}

inline json to_json(const BandlimitedSignal& f) {
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back(json{{"re", t.coefficient.real()},
                         {"im", t.coefficient.imag()},
                         {"lo", to_json(t.spectrum.lo)},
                         {"hi", to_json(t.spectrum.hi)}});
  return json{{"frame", matrix_to_json(f.frame().basis())},
              {"terms", std::move(terms)}};
}

inline BandlimitedSignal signal_from_json(const json& j) {
  Frame frame(matrix_from_json(j.at("frame")));
  std::vector<BandlimitedSignal::Term> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({Complex(t.at("re").get<double>(), t.at("im").get<double>()),
                     Box(ratvec_from_json(t.at("lo")), ratvec_from_json(t.at("hi")))});
  return BandlimitedSignal(std::move(frame), std::move(terms));
}

inline json to_json(const SamplingPlan& plan) {
  return json{{"P", to_json(plan.p)},
              {"gamma", to_json(plan.gamma)},
              {"R", plan.radius},
              {"level", plan.level},
              {"scheme", to_json(plan.scheme)}};
}

inline SamplingPlan plan_from_json(const json& j) {
  return SamplingPlan(region_from_json(j.at("P")), lattice_from_json(j.at("gamma")),
                      j.at("R").get<int>(), j.value("level", 0),
                      scheme_from_json(j.at("scheme")));
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

// ---------------------------------------------------------------------------
// SVG export (dim 2): one outlined path per cell, no fills
// ---------------------------------------------------------------------------

struct SvgLayer {
  const Region* region = nullptr;
  std::string stroke = "#000000";
  std::string label;
};

inline std::string svg_render(const std::vector<SvgLayer>& layers,
                              double scale = 160.0) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  auto corners = [](const Frame& fr, const Box& b) {
    std::vector<Eigen::Vector2d> pts;
    for (int cx = 0; cx < 2; ++cx)
      for (int cy = 0; cy < 2; ++cy) {
        Eigen::VectorXd t(2);
        t << to_double(cx ? b.hi[0] : b.lo[0]), to_double(cy ? b.hi[1] : b.lo[1]);
        pts.push_back(fr.to_ambient(t));
      }
    std::swap(pts[2], pts[3]);  // order as a quad: 00, 01, 11, 10
    return pts;
  };
  for (const auto& layer : layers) {
    if (layer.region->dim() != 2)
      throw UnsupportedTransformError("SVG export is two-dimensional");
    for (const Box& c : layer.region->cells())
      for (const auto& p : corners(layer.region->frame(), c)) {
        if (first || p[0] < min_x) min_x = p[0];
        if (first || p[0] > max_x) max_x = p[0];
        if (first || p[1] < min_y) min_y = p[1];
        if (first || p[1] > max_y) max_y = p[1];
        first = false;
      }
  }
  double pad = 0.05 * std::max(max_x - min_x, max_y - min_y) + 1e-3;
  min_x -= pad; max_x += pad; min_y -= pad; max_y += pad;

  std::ostringstream svg;
  double w = (max_x - min_x) * scale, h = (max_y - min_y) * scale;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  auto map_pt = [&](const Eigen::Vector2d& p) {
    // SVG y axis points down
    return std::pair<double, double>((p[0] - min_x) * scale,
                                     (max_y - p[1]) * scale);
  };
  for (const auto& layer : layers) {
    svg << "  <g stroke=\"" << layer.stroke
        << "\" fill=\"none\" stroke-width=\"1\">";
    if (!layer.label.empty()) svg << "<!-- " << layer.label << " -->";
    svg << "\n";
    for (const Box& c : layer.region->cells()) {
      auto pts = corners(layer.region->frame(), c);
      svg << "    <path d=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [x, y] = map_pt(pts[i]);
        svg << (i == 0 ? 'M' : 'L') << x << ' ' << y << ' ';
      }
      svg << "Z\"/>\n";
    }
    svg << "  </g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

/// Cells of a 3D region as a flat JSON box list.
inline json box_list_3d(const Region& region, const std::string& name) {
  json boxes = json::array();
  for (const Box& c : region.cells())
    boxes.push_back(json{{"set", name}, {"lo", to_json(c.lo)}, {"hi", to_json(c.hi)}});
  return boxes;
}

}  // namespace coxwave
