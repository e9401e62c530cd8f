#include "hessplus/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hessplus {

OrderedJson json_point(const Point& p) {
  OrderedJson arr = OrderedJson::array();
  for (double c : p) arr.push_back(c);
  return arr;
}

OrderedJson json_box(const Box& b) {
  return OrderedJson{{"xmin", b.xmin}, {"xmax", b.xmax}, {"ymin", b.ymin}, {"ymax", b.ymax}};
}

OrderedJson json_critical_set(const CriticalSet& cs) {
  OrderedJson points = OrderedJson::array();
  for (const auto& p : cs.points) {
    OrderedJson jp;
    jp["location"] = json_point(p.location);
    jp["value"] = p.value;
    jp["gradient_norm"] = p.gradient_norm;
    jp["hessian_eigs"] = json_point(p.hessian_eigs);
    if (p.morse_index)
      jp["morse_index"] = *p.morse_index;
    else
      jp["morse_index"] = "degenerate";
    points.push_back(jp);
  }
  OrderedJson j;
  j["points"] = points;
  j["values"] = json_point(cs.critical_values);
  j["search_box"] = json_box(cs.search_box);
  j["grid_seeds_per_axis"] = cs.grid_seeds_per_axis;
  j["diagnostics"] = OrderedJson{{"seeds", cs.diagnostics.seeds},
                                 {"converged", cs.diagnostics.converged},
                                 {"dropped_nonconverged", cs.diagnostics.dropped_nonconverged},
                                 {"dropped_outside", cs.diagnostics.dropped_outside},
                                 {"dedupe_merges", cs.diagnostics.dedupe_merges}};
  return j;
}

OrderedJson json_certificate(const BoundednessCertificate& cert) {
  OrderedJson j;
  j["family"] = cert.family;
  j["R"] = cert.radius;
  j["R_exact"] = cert.radius_exact;
  j["leading_constants"] = OrderedJson{{"trace", rational_to_string(cert.trace_leading)},
                                       {"det", rational_to_string(cert.det_leading)}};
  j["margin"] = OrderedJson{{"trace", cert.trace_margin}, {"det", cert.det_margin}};
  j["grid"] = OrderedJson{{"r_samples", cert.r_samples},
                          {"theta_samples", cert.theta_samples},
                          {"lipschitz_guard", cert.lipschitz_ok}};
  j["status"] = cert.status;
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

OrderedJson json_audit(const HypothesisAuditReport& audit) {
  OrderedJson j;
  j["samples"] = audit.samples;
  j["seed"] = audit.seed;
  j["positivity_fraction"] = audit.positivity_fraction;
  j["rank2_count"] = audit.rank2_count;
  if (audit.rank2_bbox)
    j["rank2_bbox"] = json_box(*audit.rank2_bbox);
  else
    j["rank2_bbox"] = nullptr;
  OrderedJson rays = OrderedJson::array();
  for (const auto& ray : audit.rays) {
    rays.push_back(OrderedJson{{"dir", OrderedJson::array({ray.dir_x, ray.dir_y})},
                               {"f_increasing", ray.f_increasing},
                               {"g_increasing", ray.g_increasing}});
  }
  j["rays"] = rays;
  j["evidence_only"] = audit.evidence_only;
  return j;
}

OrderedJson json_regularity(const RegularityVerdict& v) {
  OrderedJson j;
  j["regular"] = v.regular;
  j["delta"] = v.delta;
  j["critical_value_distance"] = v.critical_value_distance;
  j["critical_point_distance"] = v.critical_point_distance;
  j["min_gradient_norm"] = v.min_gradient_norm;
  return j;
}

OrderedJson json_convexity(const ConvexityReport& report) {
  OrderedJson comps = OrderedJson::array();
  for (const auto& c : report.components) {
    OrderedJson jc;
    jc["d_sign"] = to_string(c.d_sign);
    jc["samples"] = c.samples;
    jc["skipped"] = c.skipped;
    jc["d_min"] = c.d_min;
    jc["d_max"] = c.d_max;
    jc["closed"] = c.closed;
    if (c.geometric_convex)
      jc["geometric"] = *c.geometric_convex ? "convex" : "nonconvex";
    else
      jc["geometric"] = nullptr;
    comps.push_back(jc);
  }
  return OrderedJson{{"components", comps}};
}

OrderedJson json_level_curve_meta(const LevelCurve& curve) {
  OrderedJson comps = OrderedJson::array();
  for (const auto& c : curve.components)
    comps.push_back(OrderedJson{{"vertices", c.vertices.size()}, {"closed", c.closed}});
  OrderedJson j;
  j["level"] = curve.level;
  j["box"] = json_box(curve.box);
  j["resolution"] = curve.resolution;
  j["component_count"] = static_cast<int>(curve.components.size());
  j["components"] = comps;
  return j;
}

OrderedJson json_first_convex(const FirstConvexLevel& result) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& probe : result.post_checks) {
    checks.push_back(OrderedJson{{"level", probe.level},
                                 {"components", probe.components},
                                 {"regular", probe.regular},
                                 {"d_sign", to_string(probe.d_sign)},
                                 {"convex", probe.convex}});
  }
  OrderedJson j;
  j["c_star"] = result.level;
  j["bracket"] = OrderedJson::array({result.bracket_lo, result.bracket_hi});
  j["iterations"] = result.iterations;
  j["post_check_levels"] = checks;
  return j;
}

OrderedJson json_h_max(const HMaxEstimate& est) {
  OrderedJson j;
  j["value"] = est.value;
  j["argmax"] = json_point(est.argmax);
  j["grid_resolution"] = est.spacing;
  j["refine_rounds"] = est.refine_rounds;
  j["lower_bound"] = est.lower_bound;
  return j;
}

std::string csv_for_curve(const LevelCurve& curve) {
  std::ostringstream os;
  os << "x,y,component_id\n";
  char buf[96];
  for (std::size_t k = 0; k < curve.components.size(); ++k) {
    for (const auto& p : curve.components[k].vertices) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%zu\n", p[0], p[1], k);
      os << buf;
    }
  }
  return os.str();
}

namespace {

const char* kStrokes[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

std::string svg_for_curve(const LevelCurve& curve) {
  const Box& b = curve.box;
  const double w = b.width(), h = b.height();
  const int px_w = 800;
  const int px_h = w > 0 ? static_cast<int>(800.0 * h / w + 0.5) : 800;
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"%.6f %.6f %.6f %.6f\">\n",
                px_w, px_h, b.xmin, b.ymin, w, h);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.6f\" y=\"%.6f\" width=\"%.6f\" height=\"%.6f\" fill=\"white\"/>\n",
                b.xmin, b.ymin, w, h);
  os << buf;
  const double stroke = 0.004 * std::max(w, h);
  for (std::size_t k = 0; k < curve.components.size(); ++k) {
    const auto& comp = curve.components[k];
    if (comp.vertices.empty()) continue;
    os << "<path d=\"";
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
      // Flip y: SVG grows downward.
      std::snprintf(buf, sizeof buf, "%c%.6f %.6f ", i == 0 ? 'M' : 'L', comp.vertices[i][0],
                    b.ymin + b.ymax - comp.vertices[i][1]);
      os << buf;
    }
    if (comp.closed) os << "Z";
    std::snprintf(buf, sizeof buf, "\" fill=\"none\" stroke=\"%s\" stroke-width=\"%.6f\"/>\n",
                  kStrokes[k % 8], stroke);
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

}  // namespace hessplus
