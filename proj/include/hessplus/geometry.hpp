#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace hessplus {

using Point = std::vector<double>;

inline Point point2(double x, double y) { return Point{x, y}; }

inline double dot(const Point& u, const Point& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline double norm(const Point& u) { return std::sqrt(dot(u, u)); }

inline double dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Axis-aligned planar box, the search window for scans, solvers and
// level-curve extraction.
struct Box {
  double xmin = -2.0, xmax = 2.0, ymin = -2.0, ymax = 2.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double diagonal() const { return std::hypot(width(), height()); }
  bool contains(double x, double y) const {
    return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
  }
  bool contains(const Point& p) const { return contains(p[0], p[1]); }
};

inline Box square_box(double half_side) {
  return Box{-half_side, half_side, -half_side, half_side};
}

}  // namespace hessplus
