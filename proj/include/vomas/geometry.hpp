#pragma once

namespace vomas {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct WorldSize {
  double width = 50.0;
  double height = 50.0;

  friend bool operator==(const WorldSize&, const WorldSize&) = default;

  bool contains(Point p) const { return p.x >= 0.0 && p.x < width && p.y >= 0.0 && p.y < height; }
};

/// Euclidean distance on the torus: each axis uses min(|d|, extent - |d|).
double toroidal_distance(Point a, Point b, WorldSize dims);

/// Maps any finite point into [0, width) x [0, height).
Point wrap(Point p, WorldSize dims);

}  // namespace vomas
