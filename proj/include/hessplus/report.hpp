#pragma once

#include <string>

#include "json.hpp"

#include "hessplus/critical.hpp"
#include "hessplus/hess_region.hpp"
#include "hessplus/levelset.hpp"

namespace hessplus {

// Insertion-ordered JSON so reports are byte-stable across runs.
using OrderedJson = nlohmann::ordered_json;

OrderedJson json_point(const Point& p);
OrderedJson json_box(const Box& b);
OrderedJson json_critical_set(const CriticalSet& cs);
// {family, R, leading_constants, margin, grid, status}.
OrderedJson json_certificate(const BoundednessCertificate& cert);
OrderedJson json_audit(const HypothesisAuditReport& audit);
OrderedJson json_regularity(const RegularityVerdict& v);
OrderedJson json_convexity(const ConvexityReport& report);
OrderedJson json_level_curve_meta(const LevelCurve& curve);
OrderedJson json_first_convex(const FirstConvexLevel& result);
OrderedJson json_h_max(const HMaxEstimate& est);

// Polyline views of one extracted level.
std::string csv_for_curve(const LevelCurve& curve);
std::string svg_for_curve(const LevelCurve& curve);

// Write via a sibling temp file and rename, so readers never see a torn
// file.  Throws std::runtime_error on I/O failure.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace hessplus
