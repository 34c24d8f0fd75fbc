#include "epsmult/hull_volume.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <boost/multiprecision/eigen.hpp>

namespace epsmult {

namespace {

using Vec2 = Eigen::Matrix<Integer, 2, 1>;
using Vec3 = Eigen::Matrix<Integer, 3, 1>;

Integer cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

bool lex_less(const Vec2& a, const Vec2& b) {
  return std::tie(a.x(), a.y()) < std::tie(b.x(), b.y());
}

// Counter-clockwise hull vertices without collinear points (monotone chain).
std::vector<Vec2> hull_2d(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

Rational area_2d(const std::vector<ExponentVector>& points) {
  std::vector<Vec2> pts;
  for (const auto& p : points) pts.emplace_back(Integer(p[0]), Integer(p[1]));
  const auto hull = hull_2d(std::move(pts));
  if (hull.size() < 3) return 0;
  Integer twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += a.x() * b.y() - a.y() * b.x();
  }
  return Rational(boost::multiprecision::abs(twice), 2);
}

Integer gcd3(const Vec3& n) {
  using boost::multiprecision::abs;
  using boost::multiprecision::gcd;
  return gcd(gcd(abs(n.x()), abs(n.y())), abs(n.z()));
}

Rational volume_3d(const std::vector<ExponentVector>& points) {
  std::vector<Vec3> pts;
  for (const auto& p : points)
    pts.emplace_back(Integer(p[0]), Integer(p[1]), Integer(p[2]));
  auto less3 = [](const Vec3& a, const Vec3& b) {
    return std::tie(a.x(), a.y(), a.z()) < std::tie(b.x(), b.y(), b.z());
  };
  std::sort(pts.begin(), pts.end(), less3);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4) return 0;

  const Vec3& apex = pts.front();
  std::set<std::tuple<Integer, Integer, Integer, Integer>> seen;
  Integer six_volume = 0;
  bool full_dimensional = false;

  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        Vec3 normal = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        if (normal.isZero()) continue;
        bool above = false, below = false;
        for (const auto& p : pts) {
          const Integer s = normal.dot(p - pts[i]);
          if (s > 0) above = true;
          if (s < 0) below = true;
        }
        if (above && below) continue;
        if (!above && !below) continue;  // all points coplanar
        full_dimensional = true;
        if (above) normal = -normal;
        const Integer g = gcd3(normal);
        for (Eigen::Index c = 0; c < 3; ++c) normal(c) /= g;
        const Integer offset = normal.dot(pts[i]);
        if (!seen.emplace(normal.x(), normal.y(), normal.z(), offset).second)
          continue;

        // Order the facet by a 2D hull in the coordinate plane the facet
        // projects onto injectively.
        Eigen::Index drop = 0;
        for (Eigen::Index c = 1; c < 3; ++c)
          if (boost::multiprecision::abs(normal(c)) >
              boost::multiprecision::abs(normal(drop)))
            drop = c;
        const Eigen::Index u = drop == 0 ? 1 : 0;
        const Eigen::Index v = drop == 2 ? 1 : 2;
        std::vector<Vec2> projected;
        std::vector<Vec3> facet;
        for (const auto& p : pts)
          if (normal.dot(p) == offset) {
            facet.push_back(p);
            projected.emplace_back(p(u), p(v));
          }
        const auto ring = hull_2d(projected);
        std::vector<Vec3> polygon;
        for (const auto& q : ring)
          for (std::size_t f = 0; f < facet.size(); ++f)
            if (projected[f] == q) {
              polygon.push_back(facet[f]);
              break;
            }
        for (std::size_t t = 1; t + 1 < polygon.size(); ++t) {
          const Integer det = (polygon[0] - apex)
                                  .dot((polygon[t] - apex)
                                           .cross(polygon[t + 1] - apex));
          six_volume += boost::multiprecision::abs(det);
        }
      }
  if (!full_dimensional) return 0;
  return Rational(six_volume, 6);
}

}  // namespace

std::optional<Rational> convex_hull_volume(
    const std::vector<ExponentVector>& points) {
  if (points.empty()) return std::nullopt;
  const std::size_t d = points.front().size();
  switch (d) {
    case 1: {
      const auto [lo, hi] = std::minmax_element(
          points.begin(), points.end(),
          [](const ExponentVector& a, const ExponentVector& b) { return a[0] < b[0]; });
      return Rational((*hi)[0] - (*lo)[0]);
    }
    case 2:
      return area_2d(points);
    case 3:
      return volume_3d(points);
    default:
      return std::nullopt;
  }
}

}  // namespace epsmult
