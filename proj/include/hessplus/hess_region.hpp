#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hessplus/errors.hpp"
#include "hessplus/family.hpp"
#include "hessplus/field.hpp"
#include "hessplus/geometry.hpp"

namespace hessplus {

// Verdict classes for "H(f)(p) positive (semi)definite".  For the strict set
// (an open region) `boundary` points are not members; for the semidefinite
// set (its closure) they are.  `in` means the smallest eigenvalue clears the
// tolerance, `boundary` means it sits within +-tol of zero (only reachable
// with tol > 0), `out` means it is below -tol.  At tol = 0 the two queries
// differ in exactly one case: a vanishing smallest eigenvalue is `out` of
// the open set but `in` its closure.
enum class Membership { in, out, boundary };
const char* to_string(Membership m);

struct MembershipVerdict {
  Membership status = Membership::out;
  double lambda = 0.0;  // smallest Hessian eigenvalue, the verdict margin
  double tol = 0.0;
  // Populated on the planar path, where positive definiteness is
  // equivalently trace > 0 and det > 0.
  bool used_trace_det = false;
  double trace = 0.0;
  double det = 0.0;
};

// 1e-9 * (1 + max |H_ij|).
double default_membership_tol(const SymmetricMatrix& h);

MembershipVerdict hess_plus_contains(const ScalarField& f, const Point& p, double tol);
MembershipVerdict hess_plus_contains(const ScalarField& f, const Point& p);
MembershipVerdict hess_semidef_contains(const ScalarField& f, const Point& p, double tol);
MembershipVerdict hess_semidef_contains(const ScalarField& f, const Point& p);

// Grid points of the box (spacing `spacing` per axis, both endpoints
// included) whose membership verdict is not `in` at the default tolerance.
// Row-major (y outer, x inner), deterministic under any thread count.
std::vector<Point> scan_complement(const ScalarField& f, const Box& box, double spacing);

// Max of f over the scanned complement, sharpened by local grid refinement
// around the argmax (each round shrinks radius and spacing by 10x).  Always a
// lower bound for the true supremum.  Empty complement is a precondition
// error: h_max is undefined there.
struct HMaxEstimate {
  double value = 0.0;
  Point argmax;
  double spacing = 0.0;  // pitch of the scan grid the sample came from
  int refine_rounds = 0;
  bool lower_bound = true;
};
HMaxEstimate h_max_estimate(const ScalarField& f, const std::vector<Point>& complement,
                            int refine_rounds = 3);

// Certificate that the complement of the positive-definiteness region is
// bounded: outside radius `radius` both the Hessian trace and determinant
// are strictly positive.  The radius comes from exact rational coefficient
// bounds; the annulus grid is a double-precision corroboration with a
// trigonometric Lipschitz guard between angular samples.
struct BoundednessCertificate {
  std::string family;
  std::string status;  // "certified" | "unknown"
  double radius = 0.0;
  std::string radius_exact;
  Rational trace_leading = 0;
  Rational det_leading = 0;
  double trace_margin = 0.0;
  double det_margin = 0.0;
  int r_samples = 0;
  int theta_samples = 0;
  bool lipschitz_ok = false;
  std::string note;
};

BoundednessCertificate certify_complement_bounded(const RadialPlusForm& form,
                                                  const std::string& name);
BoundednessCertificate certify_complement_bounded(const FamilySpec& spec);

// Seeded empirical probe of the product hypotheses for a pair (f, g): the
// fraction of samples with <grad f, grad g> + |grad f||grad g| > 0, the locus
// where the Jacobian of p -> (f, g) has rank 2, and growth spot-checks along
// rays.  Evidence, not proof.
struct RayCheck {
  double dir_x = 0.0, dir_y = 0.0;
  std::array<double, 3> f_values{};
  std::array<double, 3> g_values{};
  bool f_increasing = false;
  bool g_increasing = false;
};

struct HypothesisAuditReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double positivity_fraction = 0.0;
  int rank2_count = 0;
  std::optional<Box> rank2_bbox;
  std::vector<RayCheck> rays;
  bool evidence_only = true;
};

HypothesisAuditReport audit_product_hypotheses(const ScalarField& f, const ScalarField& g,
                                               const Box& box, int samples, std::uint64_t seed);

}  // namespace hessplus
