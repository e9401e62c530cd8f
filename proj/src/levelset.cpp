#include "hessplus/levelset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "hessplus/errors.hpp"
#include "hessplus/parallel.hpp"

namespace hessplus {

namespace {

constexpr double kPi = std::numbers::pi;

// One projection step toward {f = level} along the gradient.
Point project_once(const ScalarField& f, const Point& p, double level) {
  const Jet2 j = f.jet(p);
  const double g2 = dot(j.gradient, j.gradient);
  if (g2 < 1e-300) return p;
  const double step = (j.value - level) / g2;
  Point q = p;
  q[0] -= step * j.gradient[0];
  q[1] -= step * j.gradient[1];
  return q;
}

struct SegmentSoup {
  std::vector<Point> vertices;              // one per cut edge
  std::vector<std::pair<int, int>> segments;  // vertex index pairs
};

// Cell edges: 0 bottom, 1 right, 2 top, 3 left.  Corner bits: 0 = (i, j),
// 1 = (i+1, j), 2 = (i+1, j+1), 3 = (i, j+1); bit set when the corner value
// exceeds the level.
const int kCellSegments[16][5] = {
    {0},              // 0000
    {1, 3, 0},        // 0001  corner 0
    {1, 0, 1},        // 0010  corner 1
    {1, 3, 1},        // 0011  bottom band
    {1, 1, 2},        // 0100  corner 2
    {2, 3, 0, 1, 2},  // 0101  saddle, resolved at runtime
    {1, 0, 2},        // 0110  right band
    {1, 2, 3},        // 0111  all but corner 3
    {1, 2, 3},        // 1000  corner 3
    {1, 0, 2},        // 1001  left band
    {2, 0, 1, 2, 3},  // 1010  saddle, resolved at runtime
    {1, 1, 2},        // 1011  all but corner 2
    {1, 3, 1},        // 1100  top band
    {1, 0, 1},        // 1101  all but corner 1
    {1, 3, 0},        // 1110  all but corner 0
    {0},              // 1111
};

}  // namespace

LevelCurve extract_level(const ScalarField& f, double level, const Box& box, int resolution) {
  if (resolution < 2) throw precondition_error("level extraction needs resolution >= 2");
  if (!(box.width() > 0.0) || !(box.height() > 0.0))
    throw precondition_error("level extraction needs a nondegenerate box");

  LevelCurve curve;
  curve.level = level;
  curve.box = box;
  curve.resolution = resolution;

  const int nx = resolution + 1;
  const int ny = resolution + 1;
  const double dx = box.width() / resolution;
  const double dy = box.height() / resolution;

  std::vector<double> values(nx * ny);
  parallel_for(0, ny, [&](int j) {
    const double y = box.ymin + j * dy;
    for (int i = 0; i < nx; ++i)
      values[j * nx + i] = f.value(point2(box.xmin + i * dx, y));
  });
  // Break exact ties so no corner sits on the level.
  const double nudge = 1e-12 * (1.0 + std::abs(level));
  for (double& v : values)
    if (v == level) v += nudge;

  SegmentSoup soup;
  // Edge id -> vertex id; horizontal edge (i..i+1, j) then vertical (i, j..j+1).
  const int horizontal_count = resolution * ny;
  std::map<int, int> edge_vertex;

  auto corner = [&](int i, int j) { return values[j * nx + i]; };
  auto x_at = [&](int i) { return box.xmin + i * dx; };
  auto y_at = [&](int j) { return box.ymin + j * dy; };

  auto edge_id = [&](int cell_i, int cell_j, int edge) {
    switch (edge) {
      case 0: return cell_j * resolution + cell_i;                            // bottom
      case 2: return (cell_j + 1) * resolution + cell_i;                      // top
      case 3: return horizontal_count + cell_i * resolution + cell_j;         // left
      default: return horizontal_count + (cell_i + 1) * resolution + cell_j;  // right
    }
  };

  auto edge_point = [&](int cell_i, int cell_j, int edge) -> Point {
    int i0, j0, i1, j1;
    switch (edge) {
      case 0: i0 = cell_i; j0 = cell_j; i1 = cell_i + 1; j1 = cell_j; break;
      case 1: i0 = cell_i + 1; j0 = cell_j; i1 = cell_i + 1; j1 = cell_j + 1; break;
      case 2: i0 = cell_i; j0 = cell_j + 1; i1 = cell_i + 1; j1 = cell_j + 1; break;
      default: i0 = cell_i; j0 = cell_j; i1 = cell_i; j1 = cell_j + 1; break;
    }
    const double a = corner(i0, j0), b = corner(i1, j1);
    const double t = (level - a) / (b - a);
    return point2(x_at(i0) + t * (x_at(i1) - x_at(i0)), y_at(j0) + t * (y_at(j1) - y_at(j0)));
  };

  auto vertex_for_edge = [&](int cell_i, int cell_j, int edge) {
    const int id = edge_id(cell_i, cell_j, edge);
    auto it = edge_vertex.find(id);
    if (it != edge_vertex.end()) return it->second;
    const int v = static_cast<int>(soup.vertices.size());
    soup.vertices.push_back(edge_point(cell_i, cell_j, edge));
    edge_vertex.emplace(id, v);
    return v;
  };

  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      int code = 0;
      if (corner(i, j) > level) code |= 1;
      if (corner(i + 1, j) > level) code |= 2;
      if (corner(i + 1, j + 1) > level) code |= 4;
      if (corner(i, j + 1) > level) code |= 8;
      if (code == 0 || code == 15) continue;

      int pairs[2][2];
      int count = kCellSegments[code][0];
      pairs[0][0] = kCellSegments[code][1];
      pairs[0][1] = kCellSegments[code][2];
      if (count == 2) {
        pairs[1][0] = kCellSegments[code][3];
        pairs[1][1] = kCellSegments[code][4];
        // Saddle: pair the cut edges according to the center sample.
        const double center =
            f.value(point2(x_at(i) + 0.5 * dx, y_at(j) + 0.5 * dy));
        const bool center_above = center > level;
        // code 5: corners 0,2 above.  Center above joins them: separate
        // corners 1 and 3 -> (0,1) and (2,3); center below isolates 0 and 2
        // -> (3,0) and (1,2).  Code 10 mirrors this.
        if (code == 5) {
          if (center_above) {
            pairs[0][0] = 0; pairs[0][1] = 1; pairs[1][0] = 2; pairs[1][1] = 3;
          } else {
            pairs[0][0] = 3; pairs[0][1] = 0; pairs[1][0] = 1; pairs[1][1] = 2;
          }
        } else {  // code 10: corners 1,3 above
          if (center_above) {
            pairs[0][0] = 3; pairs[0][1] = 0; pairs[1][0] = 1; pairs[1][1] = 2;
          } else {
            pairs[0][0] = 0; pairs[0][1] = 1; pairs[1][0] = 2; pairs[1][1] = 3;
          }
        }
      }
      for (int sgm = 0; sgm < count; ++sgm) {
        const int va = vertex_for_edge(i, j, pairs[sgm][0]);
        const int vb = vertex_for_edge(i, j, pairs[sgm][1]);
        soup.segments.emplace_back(va, vb);
      }
    }
  }

  // Stitch: every vertex has degree <= 2, so components are chains or cycles.
  const int nv = static_cast<int>(soup.vertices.size());
  std::vector<std::array<int, 2>> adjacency(nv, {-1, -1});
  auto attach = [&](int v, int seg) {
    if (adjacency[v][0] < 0)
      adjacency[v][0] = seg;
    else
      adjacency[v][1] = seg;
  };
  for (int s = 0; s < static_cast<int>(soup.segments.size()); ++s) {
    attach(soup.segments[s].first, s);
    attach(soup.segments[s].second, s);
  }

  std::vector<bool> seg_used(soup.segments.size(), false);
  auto walk = [&](int start_vertex, bool expect_cycle) {
    Polyline line;
    int v = start_vertex;
    line.vertices.push_back(soup.vertices[v]);
    int prev_seg = -1;
    while (true) {
      int next_seg = -1;
      for (int k = 0; k < 2; ++k) {
        const int s = adjacency[v][k];
        if (s >= 0 && s != prev_seg && !seg_used[s]) {
          next_seg = s;
          break;
        }
      }
      if (next_seg < 0) break;
      seg_used[next_seg] = true;
      const auto [a, b] = soup.segments[next_seg];
      v = (a == v) ? b : a;
      prev_seg = next_seg;
      if (expect_cycle && v == start_vertex) {
        line.closed = true;
        break;
      }
      line.vertices.push_back(soup.vertices[v]);
    }
    return line;
  };

  std::vector<Polyline> components;
  for (int v = 0; v < nv; ++v) {
    if (adjacency[v][1] >= 0 || adjacency[v][0] < 0) continue;  // not an endpoint
    const int s = adjacency[v][0];
    if (seg_used[s]) continue;
    components.push_back(walk(v, false));
  }
  for (int v = 0; v < nv; ++v) {
    if (adjacency[v][0] < 0 || adjacency[v][1] < 0) continue;
    bool fresh = !seg_used[adjacency[v][0]] && !seg_used[adjacency[v][1]];
    if (!fresh) continue;
    components.push_back(walk(v, true));
  }

  for (auto& comp : components) {
    for (auto& p : comp.vertices) p = project_once(f, p, level);
    if (comp.closed || comp.vertices.size() >= 2) curve.components.push_back(std::move(comp));
  }
  return curve;
}

int component_count(const LevelCurve& curve) {
  return static_cast<int>(curve.components.size());
}

RegularityVerdict is_regular_level(const ScalarField& f, const LevelCurve& curve,
                                   const CriticalSet& critical, double delta) {
  RegularityVerdict v;
  if (delta <= 0.0 && curve.resolution > 0)
    delta = 0.5 * std::hypot(curve.box.width() / curve.resolution,
                             curve.box.height() / curve.resolution);
  v.delta = delta;
  v.critical_value_distance = std::numeric_limits<double>::infinity();
  for (double cv : critical.critical_values)
    v.critical_value_distance = std::min(v.critical_value_distance, std::abs(curve.level - cv));

  v.critical_point_distance = std::numeric_limits<double>::infinity();
  v.min_gradient_norm = std::numeric_limits<double>::infinity();
  for (const auto& comp : curve.components) {
    for (const auto& p : comp.vertices) {
      v.min_gradient_norm = std::min(v.min_gradient_norm, norm(f.jet(p).gradient));
      for (const auto& cp : critical.points)
        v.critical_point_distance = std::min(v.critical_point_distance, dist(p, cp.location));
    }
  }

  if (curve.components.empty()) {
    // Vacuous: nothing in the box sits on the level.
    v.regular = true;
    return v;
  }
  const double value_tol = 1e-8 * (1.0 + std::abs(curve.level));
  v.regular = v.critical_value_distance > value_tol && v.critical_point_distance > delta &&
              v.min_gradient_norm > delta;
  return v;
}

const char* to_string(DSign s) {
  switch (s) {
    case DSign::all_negative: return "all-negative";
    case DSign::all_positive: return "all-positive";
    case DSign::mixed: return "mixed";
    case DSign::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

double convexity_indicator(const Jet2& j) {
  const double fx = j.gradient[0], fy = j.gradient[1];
  const double fxx = j.hessian.at(0, 0), fxy = j.hessian.at(0, 1), fyy = j.hessian.at(1, 1);
  return 2.0 * fx * fy * fxy - fx * fx * fyy - fy * fy * fxx;
}

}  // namespace

ConvexityReport convexity_via_D(const ScalarField& f, const LevelCurve& curve,
                                int samples_per_component) {
  ConvexityReport report;
  for (const auto& comp : curve.components) {
    ComponentConvexity cc;
    cc.closed = comp.closed;
    cc.d_min = std::numeric_limits<double>::infinity();
    cc.d_max = -std::numeric_limits<double>::infinity();

    // Cumulative arc length over the polyline (wrapping for cycles).
    const std::size_t n = comp.vertices.size();
    if (n < 2) {
      cc.d_sign = DSign::indeterminate;
      report.components.push_back(cc);
      continue;
    }
    const std::size_t edges = comp.closed ? n : n - 1;
    std::vector<double> cumulative(edges + 1, 0.0);
    for (std::size_t e = 0; e < edges; ++e)
      cumulative[e + 1] =
          cumulative[e] + dist(comp.vertices[e], comp.vertices[(e + 1) % n]);
    const double total = cumulative[edges];
    if (total <= 0.0) {
      cc.d_sign = DSign::indeterminate;
      report.components.push_back(cc);
      continue;
    }

    int negatives = 0, positives = 0;
    for (int k = 0; k < samples_per_component; ++k) {
      const double target = total * k / samples_per_component;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
      std::size_t e = std::min(edges - 1, static_cast<std::size_t>(it - cumulative.begin()) - 1);
      const double local = cumulative[e + 1] - cumulative[e];
      const double t = local > 0.0 ? (target - cumulative[e]) / local : 0.0;
      const Point& a = comp.vertices[e];
      const Point& b = comp.vertices[(e + 1) % n];
      Point p = point2(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]));
      // Tighten the sample onto the level before reading the jet.
      for (int it2 = 0; it2 < 3; ++it2) {
        if (std::abs(f.value(p) - curve.level) <= 1e-9 * (1.0 + std::abs(curve.level))) break;
        p = project_once(f, p, curve.level);
      }
      const Jet2 jet = f.jet(p);
      ++cc.samples;
      if (norm(jet.gradient) <= 1e-10 * (1.0 + std::abs(jet.value))) {
        ++cc.skipped;
        continue;
      }
      const double d = convexity_indicator(jet);
      cc.d_min = std::min(cc.d_min, d);
      cc.d_max = std::max(cc.d_max, d);
      if (d < 0.0) ++negatives;
      if (d > 0.0) ++positives;
    }

    if (cc.samples == 0 || cc.skipped * 10 > cc.samples) {
      cc.d_sign = DSign::indeterminate;
    } else if (negatives > 0 && positives == 0) {
      cc.d_sign = DSign::all_negative;
    } else if (positives > 0 && negatives == 0) {
      cc.d_sign = DSign::all_positive;
    } else if (positives > 0 && negatives > 0) {
      cc.d_sign = DSign::mixed;
    } else {
      cc.d_sign = DSign::indeterminate;
    }

    if (comp.closed && comp.vertices.size() >= 3)
      cc.geometric_convex = convexity_geometric(comp) == GeomVerdict::convex;
    report.components.push_back(cc);
  }
  return report;
}

GeomVerdict convexity_geometric(const Polyline& component) {
  if (!component.closed) throw precondition_error("geometric convexity needs a closed component");
  // Collapse consecutive duplicates.
  double scale = 1.0;
  for (const auto& p : component.vertices)
    scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
  std::vector<Point> poly;
  for (const auto& p : component.vertices) {
    if (poly.empty() || dist(poly.back(), p) > 1e-12 * scale) poly.push_back(p);
  }
  while (poly.size() > 1 && dist(poly.front(), poly.back()) <= 1e-12 * scale) poly.pop_back();
  if (poly.size() < 3) throw precondition_error("geometric convexity needs >= 3 vertices");

  const std::size_t n = poly.size();
  const double collinear_tol = 1e-12 * scale * scale;
  int orientation = 0;
  double turning = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Point& a = poly[k];
    const Point& b = poly[(k + 1) % n];
    const Point& c = poly[(k + 2) % n];
    const double e1x = b[0] - a[0], e1y = b[1] - a[1];
    const double e2x = c[0] - b[0], e2y = c[1] - b[1];
    const double cross = e1x * e2y - e1y * e2x;
    const double d = e1x * e2x + e1y * e2y;
    turning += std::atan2(cross, d);
    if (std::abs(cross) <= collinear_tol) continue;
    const int sign = cross > 0.0 ? 1 : -1;
    if (orientation == 0)
      orientation = sign;
    else if (orientation != sign)
      return GeomVerdict::nonconvex;
  }
  if (orientation == 0) return GeomVerdict::nonconvex;
  if (std::abs(std::abs(turning) - 2.0 * kPi) > 1e-3) return GeomVerdict::nonconvex;
  return GeomVerdict::convex;
}

namespace {

LevelProbe probe_level(const ScalarField& f, double level, const Box& box, int resolution,
                       const CriticalSet& critical, int samples) {
  LevelProbe probe;
  probe.level = level;
  const LevelCurve curve = extract_level(f, level, box, resolution);
  probe.components = component_count(curve);
  probe.regular = is_regular_level(f, curve, critical).regular;
  const ConvexityReport conv = convexity_via_D(f, curve, samples);
  bool all_negative = !conv.components.empty();
  bool any_positive = false;
  for (const auto& cc : conv.components) {
    if (cc.d_sign != DSign::all_negative) all_negative = false;
    if (cc.d_sign == DSign::all_positive || cc.d_sign == DSign::mixed) any_positive = true;
  }
  if (conv.components.empty())
    probe.d_sign = DSign::indeterminate;
  else if (all_negative)
    probe.d_sign = DSign::all_negative;
  else if (any_positive && !all_negative)
    probe.d_sign = conv.components.size() == 1 ? conv.components.front().d_sign : DSign::mixed;
  else
    probe.d_sign = DSign::indeterminate;
  probe.convex = probe.regular && probe.components == 1 && curve.components.front().closed &&
                 probe.d_sign == DSign::all_negative;
  return probe;
}

}  // namespace

FirstConvexLevel first_convex_level(const ScalarField& f, double lo, double hi, double tol,
                                    const Box& box, int resolution) {
  if (!(lo < hi)) throw precondition_error("first convex level needs lo < hi");
  if (!(tol > 0.0)) throw precondition_error("first convex level needs tol > 0");

  const CriticalSet critical = find_critical_points(f, box, 41);
  const int samples = 4096;

  const LevelProbe hi_probe = probe_level(f, hi, box, resolution, critical, samples);
  if (!hi_probe.convex) {
    std::ostringstream os;
    os << "bracket invalid: upper level " << hi << " is not convex in the box";
    throw precondition_error(os.str());
  }
  const LevelProbe lo_probe = probe_level(f, lo, box, resolution, critical, samples);
  if (lo_probe.convex) {
    std::ostringstream os;
    os << "bracket invalid: lower level " << lo << " is already convex";
    throw precondition_error(os.str());
  }

  FirstConvexLevel result;
  double a = lo, b = hi;
  int iterations = 0;
  while (b - a > tol && iterations < 200) {
    const double mid = 0.5 * (a + b);
    if (probe_level(f, mid, box, resolution, critical, samples).convex)
      b = mid;
    else
      a = mid;
    ++iterations;
  }
  result.level = b;
  result.bracket_lo = a;
  result.bracket_hi = b;
  result.iterations = iterations;

  for (int k = 1; k <= 3; ++k) {
    const LevelProbe post =
        probe_level(f, b + k * tol, box, resolution, critical, samples);
    result.post_checks.push_back(post);
    if (!post.convex) {
      std::ostringstream os;
      os << "bracket invalid: post-check level " << post.level << " is not convex";
      throw precondition_error(os.str());
    }
  }
  return result;
}

std::vector<Point> parametrize_product_level(double alpha, double b, int m) {
  if (!(alpha > 0.0)) throw precondition_error("parametrization needs alpha > 0");
  if (!(b > 0.0)) throw precondition_error("parametrization covers positive levels only");
  if (m < 3) throw precondition_error("parametrization needs at least 3 samples");
  std::vector<Point> points;
  points.reserve(m);
  for (int k = 0; k < m; ++k) {
    const double phi = 2.0 * kPi * k / m;
    const double u = std::cos(phi), v = std::sin(phi);
    const double w = u * u - v * v;
    const double a2w2 = alpha * alpha * w * w;
    const double rho4 = 2.0 * a2w2 + std::sqrt(4.0 * a2w2 * a2w2 + b);
    const double rho = std::pow(rho4, 0.25);
    points.push_back(point2(rho * u, rho * v));
  }
  return points;
}

}  // namespace hessplus
