#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace gathering {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;

  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Unit vector for a heading angle in radians.
inline Vec2 unit_heading(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

struct Disc {
  Vec2 center;
  double radius = 0.0;
};

// Convex hull with vertices in counter-clockwise order and no three
// consecutive vertices collinear. `indices[k]` is the position of
// `vertices[k]` in the input sequence.
struct Hull {
  std::vector<Vec2> vertices;
  std::vector<std::size_t> indices;

  std::size_t size() const { return vertices.size(); }
};

// Andrew's monotone chain. Collinear boundary points are dropped. Coincident
// inputs collapse to a single vertex (the lowest input index wins), and fully
// collinear inputs give the two extreme points.
// Throws std::domain_error on empty or non-finite input.
Hull convex_hull(std::span<const Vec2> points);

// Interior angle at every hull vertex, in the hull's vertex order.
// Throws std::domain_error for hulls with fewer than three vertices.
std::vector<double> corner_angles(const Hull& hull);

// Smallest disc containing every point (randomized incremental construction
// with a fixed internal shuffle, so results are reproducible).
// Throws std::domain_error on empty or non-finite input.
Disc min_enclosing_disc(std::span<const Vec2> points);

/// True iff some agent j != i lies in the closed half-plane behind agent i,
/// i.e. heading . (p_j - p_i) <= 0.
bool back_halfplane_occupied(std::size_t i, std::span<const Vec2> positions, Vec2 heading);

/// Scale-aware tolerance: 1e-9 times the bounding-box diagonal of `points`.
double geometric_tolerance(std::span<const Vec2> points);

}  // namespace gathering
