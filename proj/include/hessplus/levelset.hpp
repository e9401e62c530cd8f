#pragma once

#include <optional>
#include <vector>

#include "hessplus/critical.hpp"
#include "hessplus/field.hpp"
#include "hessplus/geometry.hpp"

namespace hessplus {

struct Polyline {
  std::vector<Point> vertices;
  bool closed = false;
};

struct LevelCurve {
  double level = 0.0;
  Box box;
  int resolution = 0;  // cells per axis
  std::vector<Polyline> components;
};

// Marching-squares extraction on a (resolution+1)^2 sample grid.  Saddle
// cells are disambiguated by evaluating f at the cell center; chains are
// stitched through shared cell edges and every emitted vertex receives one
// Newton projection step toward the level.  Components are ordered
// deterministically; `closed` reflects chain topology (cycles close, chains
// ending on the box boundary stay open).
LevelCurve extract_level(const ScalarField& f, double level, const Box& box, int resolution);

int component_count(const LevelCurve& curve);

// A nonempty level is regular when it keeps a safe distance from every
// computed critical value, every vertex stays more than `delta` away from
// every critical point, and no vertex gradient norm drops to `delta` or
// below.  An empty curve is vacuously regular.  Passing delta <= 0 picks
// half the cell diagonal of the extraction grid.
struct RegularityVerdict {
  bool regular = false;
  double delta = 0.0;
  double critical_value_distance = 0.0;  // min |level - critical value|
  double critical_point_distance = 0.0;  // min vertex-to-critical-point gap
  double min_gradient_norm = 0.0;        // over curve vertices
};
RegularityVerdict is_regular_level(const ScalarField& f, const LevelCurve& curve,
                                   const CriticalSet& critical, double delta = 0.0);

// Sign pattern of D(f) = 2 fx fy fxy - fx^2 fyy - fy^2 fxx along the curve.
// All-negative on a closed regular connected level certifies convexity of
// the enclosed region.
enum class DSign { all_negative, all_positive, mixed, indeterminate };
const char* to_string(DSign s);

struct ComponentConvexity {
  DSign d_sign = DSign::indeterminate;
  int samples = 0;
  int skipped = 0;
  double d_min = 0.0;
  double d_max = 0.0;
  bool closed = false;
  // Independent polygon test; empty for open components.
  std::optional<bool> geometric_convex;
};

struct ConvexityReport {
  std::vector<ComponentConvexity> components;
};

// Samples each component uniformly by arc length (re-projecting each sample
// onto the level), classifies the D signs, and runs the geometric check on
// closed components.  Samples with a vanishing gradient are skipped and
// counted; more than 10% skips makes the component indeterminate.
ConvexityReport convexity_via_D(const ScalarField& f, const LevelCurve& curve,
                                int samples_per_component = 1024);

// Turning-based convexity of a closed polygon: every non-collinear pair of
// consecutive edges turns the same way and the total turning is +-2*pi.
enum class GeomVerdict { convex, nonconvex };
GeomVerdict convexity_geometric(const Polyline& component);

struct LevelProbe {
  double level = 0.0;
  int components = 0;
  bool regular = false;
  DSign d_sign = DSign::indeterminate;
  bool convex = false;  // regular, single closed component, D all-negative
};

struct FirstConvexLevel {
  double level = 0.0;  // upper bracket end after bisection
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  std::vector<LevelProbe> post_checks;
};

// Bisects [lo, hi] for the smallest level whose curve is convex per
// convexity_via_D.  Requires a valid bracket: hi convex, lo not; the three
// post-check levels just above the result must also be convex.
FirstConvexLevel first_convex_level(const ScalarField& f, double lo, double hi, double tol,
                                    const Box& box, int resolution = 600);

// Closed-form unit-circle parametrization of {cassini * anti = b} (equal
// alpha factors), m samples.  With w = u^2 - v^2 on the unit circle, the
// radius solves rho^4 = 2 alpha^2 w^2 + sqrt(4 alpha^4 w^4 + b).
std::vector<Point> parametrize_product_level(double alpha, double b, int m);

}  // namespace hessplus
