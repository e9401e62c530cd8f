#pragma once

#include <optional>
#include <vector>

#include "hessplus/field.hpp"
#include "hessplus/geometry.hpp"

namespace hessplus {

// One refined solution of grad f = 0.  morse_index is empty when the Hessian
// is numerically degenerate there (an eigenvalue within the degeneracy
// threshold of zero), in which case the point is reported but not indexed.
struct CriticalPoint {
  Point location;
  double value = 0.0;
  double gradient_norm = 0.0;
  std::vector<double> hessian_eigs;
  std::optional<int> morse_index;
};

struct SolverDiagnostics {
  int seeds = 0;
  int converged = 0;
  int dropped_nonconverged = 0;
  int dropped_outside = 0;
  int dedupe_merges = 0;
};

struct CriticalSet {
  std::vector<CriticalPoint> points;  // sorted by location (x, then y)
  std::vector<double> critical_values;  // ascending, merged duplicates
  Box search_box;
  int grid_seeds_per_axis = 0;
  double eps_scale = 0.0;
  SolverDiagnostics diagnostics;
};

struct NewtonResult {
  Point location;
  bool converged = false;
  int iterations = 0;
  double gradient_norm = 0.0;
};

// Damped Newton iteration on grad f = 0: full steps are halved while the
// squared gradient norm fails to decrease, and a gradient-descent direction
// substitutes when the Hessian solve is unusable.  Convergence means
// |grad f(p)| <= eps_scale * (1 + |f(p)|).
NewtonResult newton_refine(const ScalarField& f, const Point& start, int max_iterations = 100,
                           double eps_scale = 1e-10);

// Multistart search over a uniform seed grid with deterministic merging of
// duplicate solutions (merge radius 1e-6 * box diagonal; the representative
// with the smallest gradient norm survives).
CriticalSet find_critical_points(const ScalarField& f, const Box& box,
                                 int grid_seeds_per_axis = 41, double eps_scale = 1e-10);

// Largest critical value.  An empty set has no maximum: precondition error.
double mu_max(const CriticalSet& set);

// Rank of the Jacobian of p -> (f(p), g(p)): singular values above
// tau = 1e-9 * (1 + max row norm), or above the supplied tau when given.
int direct_sum_rank(const ScalarField& f, const ScalarField& g, const Point& p);
int direct_sum_rank(const ScalarField& f, const ScalarField& g, const Point& p, double tau);

}  // namespace hessplus
