#include "gathering/geometry.h"

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "gathering/random.h"

namespace gathering {

namespace {

void require_finite(std::span<const Vec2> points, const char* what) {
  if (points.empty()) throw std::domain_error(std::string(what) + ": empty point set");
  for (const Vec2& p : points) {
    if (!is_finite(p)) throw std::domain_error(std::string(what) + ": non-finite point");
  }
}

bool contains(const Disc& d, Vec2 p) {
  return distance(d.center, p) <= d.radius * (1.0 + 1e-12);
}

Disc diameter_disc(Vec2 a, Vec2 b) {
  Vec2 c{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  return {c, std::max(distance(c, a), distance(c, b))};
}

Disc circumscribed_disc(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const double det = 2.0 * cross(ab, ac);
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  if (std::abs(det) <= 1e-14 * std::sqrt(ab2 * ac2)) {
    // Collinear: the farthest pair spans the other point.
    Disc best = diameter_disc(a, b);
    for (const Disc& d : {diameter_disc(a, c), diameter_disc(b, c)}) {
      if (d.radius > best.radius) best = d;
    }
    return best;
  }
  const Vec2 offset{(ac.y * ab2 - ab.y * ac2) / det, (ab.x * ac2 - ac.x * ab2) / det};
  const Vec2 center = a + offset;
  const double r = std::max({distance(center, a), distance(center, b), distance(center, c)});
  return {center, r};
}

}  // namespace

Hull convex_hull(std::span<const Vec2> points) {
  require_finite(points, "convex_hull");

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Vec2 pa = points[a];
    const Vec2 pb = points[b];
    if (pa.x != pb.x) return pa.x < pb.x;
    if (pa.y != pb.y) return pa.y < pb.y;
    return a < b;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());

  Hull hull;
  if (order.size() == 1) {
    hull.vertices.push_back(points[order[0]]);
    hull.indices.push_back(order[0]);
    return hull;
  }

  const std::size_t m = order.size();
  std::vector<std::size_t> chain(2 * m);
  std::size_t k = 0;
  auto turns_left = [&](std::size_t o, std::size_t a, std::size_t b) {
    return cross(points[a] - points[o], points[b] - points[o]) > 0.0;
  };
  for (std::size_t i = 0; i < m; ++i) {
    while (k >= 2 && !turns_left(chain[k - 2], chain[k - 1], order[i])) --k;
    chain[k++] = order[i];
  }
  for (std::size_t i = m - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !turns_left(chain[k - 2], chain[k - 1], order[i])) --k;
    chain[k++] = order[i];
  }
  chain.resize(k - 1);

  hull.indices = std::move(chain);
  hull.vertices.reserve(hull.indices.size());
  for (std::size_t idx : hull.indices) hull.vertices.push_back(points[idx]);
  return hull;
}

std::vector<double> corner_angles(const Hull& hull) {
  const std::size_t m = hull.size();
  if (m < 3) throw std::domain_error("corner_angles: hull needs at least three vertices");
  std::vector<double> angles(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Vec2 v = hull.vertices[k];
    const Vec2 to_prev = hull.vertices[(k + m - 1) % m] - v;
    const Vec2 to_next = hull.vertices[(k + 1) % m] - v;
    angles[k] = std::atan2(std::abs(cross(to_prev, to_next)), dot(to_prev, to_next));
  }
  return angles;
}

Disc min_enclosing_disc(std::span<const Vec2> points) {
  require_finite(points, "min_enclosing_disc");

  std::vector<Vec2> pts(points.begin(), points.end());
  // Fixed-seed Fisher-Yates; the shuffle only guards expected running time.
  SplitMix64 shuffle_rng(0x5eedd15cULL ^ pts.size());
  for (std::size_t i = pts.size(); i > 1; --i) {
    std::swap(pts[i - 1], pts[shuffle_rng.below(i)]);
  }

  Disc disc{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (contains(disc, pts[i])) continue;
    disc = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (contains(disc, pts[j])) continue;
      disc = diameter_disc(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!contains(disc, pts[k])) disc = circumscribed_disc(pts[i], pts[j], pts[k]);
      }
    }
  }
  return disc;
}

bool back_halfplane_occupied(std::size_t i, std::span<const Vec2> positions, Vec2 heading) {
  const Vec2 self = positions[i];
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (j != i && dot(heading, positions[j] - self) <= 0.0) return true;
  }
  return false;
}

double geometric_tolerance(std::span<const Vec2> points) {
  if (points.empty()) return 0.0;
  auto [minx, maxx] = std::minmax_element(points.begin(), points.end(),
                                          [](Vec2 a, Vec2 b) { return a.x < b.x; });
  auto [miny, maxy] = std::minmax_element(points.begin(), points.end(),
                                          [](Vec2 a, Vec2 b) { return a.y < b.y; });
  return 1e-9 * std::hypot(maxx->x - minx->x, maxy->y - miny->y);
}

}  // namespace gathering
