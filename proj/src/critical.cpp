#include "hessplus/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "hessplus/errors.hpp"
#include "hessplus/parallel.hpp"
#include "hessplus/sym_matrix.hpp"

namespace hessplus {

namespace {

// Dense solve of H d = b with partial pivoting; empty when a pivot falls
// below 1e-12 times the matrix scale.
std::optional<Point> solve_sym(const SymmetricMatrix& h, const Point& b) {
  const int n = h.dim();
  const double scale = std::max(h.max_abs(), 1e-300);
  std::vector<double> a(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = h.at(i, j);
  Point rhs = b;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[perm[r] * n + col]) > std::abs(a[perm[piv] * n + col])) piv = r;
    std::swap(perm[col], perm[piv]);
    const double pivot = a[perm[col] * n + col];
    if (std::abs(pivot) < 1e-12 * scale) return std::nullopt;
    for (int r = col + 1; r < n; ++r) {
      const double m = a[perm[r] * n + col] / pivot;
      if (m == 0.0) continue;
      for (int c = col; c < n; ++c) a[perm[r] * n + c] -= m * a[perm[col] * n + c];
      rhs[perm[r]] -= m * rhs[perm[col]];
    }
  }
  Point x(n, 0.0);
  for (int row = n - 1; row >= 0; --row) {
    double acc = rhs[perm[row]];
    for (int c = row + 1; c < n; ++c) acc -= a[perm[row] * n + c] * x[c];
    x[row] = acc / a[perm[row] * n + row];
  }
  return x;
}

double eps_at(double eps_scale, double value) { return eps_scale * (1.0 + std::abs(value)); }

}  // namespace

NewtonResult newton_refine(const ScalarField& f, const Point& start, int max_iterations,
                           double eps_scale) {
  NewtonResult res;
  res.location = start;
  Jet2 jet = f.jet(res.location);
  double g2 = dot(jet.gradient, jet.gradient);

  // No early stop on the gradient threshold: in degenerate basins the
  // gradient is tiny on a ball much wider than the merge radius, so we
  // iterate until the step stalls and only then apply the acceptance test.
  for (int iter = 0; iter < max_iterations; ++iter) {
    res.iterations = iter + 1;
    if (g2 == 0.0) break;

    Point direction;
    if (auto newton = solve_sym(jet.hessian, jet.gradient)) {
      direction = std::move(*newton);
    } else {
      // Singular Hessian: fall back to a scaled gradient direction.
      const double s = 1.0 / (1.0 + jet.hessian.max_abs());
      direction = jet.gradient;
      for (double& d : direction) d *= s;
    }
    // Trust-region style cap against runaway steps.
    const double dn = norm(direction);
    const double cap = 10.0 * (1.0 + norm(res.location));
    if (dn > cap)
      for (double& d : direction) d *= cap / dn;

    bool accepted = false;
    double damping = 1.0;
    for (int halvings = 0; halvings < 40; ++halvings) {
      Point trial = res.location;
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] -= damping * direction[i];
      const Jet2 trial_jet = f.jet(trial);
      const double trial_g2 = dot(trial_jet.gradient, trial_jet.gradient);
      if (trial_g2 < g2) {
        const double step = damping * dn;
        res.location = std::move(trial);
        jet = trial_jet;
        g2 = trial_g2;
        accepted = true;
        if (step < 1e-16 * (1.0 + norm(res.location))) {
          res.gradient_norm = std::sqrt(g2);
          res.converged = res.gradient_norm <= eps_at(eps_scale, jet.value);
          res.iterations = iter + 1;
          return res;
        }
        break;
      }
      damping *= 0.5;
    }
    if (!accepted) break;
  }
  res.gradient_norm = std::sqrt(g2);
  res.converged = res.gradient_norm <= eps_at(eps_scale, jet.value);
  return res;
}

CriticalSet find_critical_points(const ScalarField& f, const Box& box, int grid_seeds_per_axis,
                                 double eps_scale) {
  if (f.dim() != 2) throw domain_error("critical point search requires a planar field");
  if (grid_seeds_per_axis < 2) throw precondition_error("need at least 2 seeds per axis");

  CriticalSet set;
  set.search_box = box;
  set.grid_seeds_per_axis = grid_seeds_per_axis;
  set.eps_scale = eps_scale;

  const int k = grid_seeds_per_axis;
  const int total = k * k;
  set.diagnostics.seeds = total;
  std::vector<NewtonResult> refined(total);
  parallel_for(0, total, [&](int idx) {
    const int i = idx % k, j = idx / k;
    const Point seed = point2(box.xmin + box.width() * i / (k - 1),
                              box.ymin + box.height() * j / (k - 1));
    refined[idx] = newton_refine(f, seed, 100, eps_scale);
  });

  const double pad = 1e-6 * box.diagonal();
  const Box padded{box.xmin - pad, box.xmax + pad, box.ymin - pad, box.ymax + pad};
  std::vector<NewtonResult> candidates;
  for (auto& r : refined) {
    if (!r.converged) {
      ++set.diagnostics.dropped_nonconverged;
      continue;
    }
    if (!padded.contains(r.location)) {
      ++set.diagnostics.dropped_outside;
      continue;
    }
    ++set.diagnostics.converged;
    candidates.push_back(std::move(r));
  }

  // Best-first greedy merge: iterate by ascending gradient norm so each
  // cluster keeps its most converged representative.
  std::sort(candidates.begin(), candidates.end(), [](const NewtonResult& a, const NewtonResult& b) {
    if (a.gradient_norm != b.gradient_norm) return a.gradient_norm < b.gradient_norm;
    if (a.location[0] != b.location[0]) return a.location[0] < b.location[0];
    return a.location[1] < b.location[1];
  });
  const double merge_radius = 1e-6 * box.diagonal();
  // Two candidates also collapse when the gradient stays below the acceptance
  // threshold along the whole segment joining them: the data cannot separate
  // points inside one flat plateau, so they describe a single critical locus.
  auto flat_between = [&](const Point& a, const Point& b) {
    const int samples = 64;
    for (int s = 1; s < samples; ++s) {
      const double u = static_cast<double>(s) / samples;
      const Jet2 jq = f.jet(point2(a[0] + (b[0] - a[0]) * u, a[1] + (b[1] - a[1]) * u));
      if (norm(jq.gradient) > eps_at(eps_scale, jq.value)) return false;
    }
    return true;
  };
  std::vector<NewtonResult> accepted;
  for (auto& c : candidates) {
    bool duplicate = false;
    for (const auto& a : accepted) {
      if (dist(c.location, a.location) <= merge_radius || flat_between(c.location, a.location)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate)
      ++set.diagnostics.dedupe_merges;
    else
      accepted.push_back(std::move(c));
  }
  std::sort(accepted.begin(), accepted.end(), [](const NewtonResult& a, const NewtonResult& b) {
    if (a.location[0] != b.location[0]) return a.location[0] < b.location[0];
    return a.location[1] < b.location[1];
  });

  for (const auto& a : accepted) {
    CriticalPoint cp;
    cp.location = a.location;
    const Jet2 jet = f.jet(a.location);
    cp.value = jet.value;
    cp.gradient_norm = a.gradient_norm;
    cp.hessian_eigs = eigenvalues(jet.hessian);
    const double zero_tol = 1e-6 * (1.0 + jet.hessian.max_abs());
    bool degenerate = false;
    int index = 0;
    for (double e : cp.hessian_eigs) {
      if (std::abs(e) <= zero_tol) degenerate = true;
      if (e < -zero_tol) ++index;
    }
    if (!degenerate) cp.morse_index = index;
    set.points.push_back(std::move(cp));
  }

  // Critical values, ascending with near-duplicates merged.
  std::vector<double> values;
  for (const auto& p : set.points) values.push_back(p.value);
  std::sort(values.begin(), values.end());
  for (double v : values) {
    if (set.critical_values.empty() ||
        std::abs(v - set.critical_values.back()) > 1e-9 * (1.0 + std::abs(v)))
      set.critical_values.push_back(v);
  }
  return set;
}

double mu_max(const CriticalSet& set) {
  if (set.critical_values.empty())
    throw precondition_error("mu_max undefined for an empty critical set");
  return set.critical_values.back();
}

int direct_sum_rank(const ScalarField& f, const ScalarField& g, const Point& p, double tau) {
  const auto sv = direct_sum_jacobian(f, g, p).singular_values();
  int rank = 0;
  for (double s : sv)
    if (s > tau) ++rank;
  return rank;
}

int direct_sum_rank(const ScalarField& f, const ScalarField& g, const Point& p) {
  const Jacobian2xN jac = direct_sum_jacobian(f, g, p);
  const double tau = 1e-9 * (1.0 + jac.max_row_norm());
  const auto sv = jac.singular_values();
  int rank = 0;
  for (double s : sv)
    if (s > tau) ++rank;
  return rank;
}

}  // namespace hessplus
