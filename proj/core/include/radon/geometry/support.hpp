#pragma once

#include <array>
#include <random>
#include <vector>

#include <json.hpp>

#include "radon/value/rational.hpp"

namespace radon::geometry {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct PointD {
  double x = 0;
  double y = 0;
};

/// Convex polygon, vertices counterclockwise with no three collinear.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  /// Takes vertices already in strictly convex counterclockwise order.
  explicit ConvexPolygon(std::vector<Point> vertices);

  /// Convex hull (collinear boundary points dropped).
  static ConvexPolygon hull(std::vector<Point> points);

  const std::vector<Point>& vertices() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  bool contains_origin() const noexcept { return contains_origin_; }

  /// Point in the closed polygon (or the open one when strict).
  bool contains(const Point& p, bool strict = false) const;

  /// Same vertex cycle, up to rotation.
  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

 private:
  std::vector<Point> v_;
  bool contains_origin_ = false;
};

/// Hull of 3..max_points random points with small rational coordinates, redrawn
/// until the origin is interior.
ConvexPolygon random_polygon(std::mt19937_64& rng, int max_points = 9);

/// {ξ : ⟨ξ, x⟩ < 1 for all x ∈ P}: each edge line ⟨a, x⟩ = 1 gives the dual vertex a.
/// UnboundedDual unless 0 is interior to P.
ConvexPolygon polar_dual(const ConvexPolygon& p);

/// H(ξ) = max over the generators of ⟨ξ, x⟩.
class SupportFn {
 public:
  explicit SupportFn(std::vector<PointD> generators);
  double operator()(PointD xi) const;
  const std::vector<PointD>& generators() const noexcept { return g_; }

 private:
  std::vector<PointD> g_;
};

double support_function(const std::vector<PointD>& points, PointD xi);

/// Smooth planar bumps used for the zero-component demonstration. Both use the
/// profile exp(−1/(1−v²)) on |v| < 1.
struct PlanarBump {
  enum class Family { Annulus, OffAxis };
  Family family = Family::Annulus;
  // Annulus: r_in < |x| < r_out.
  double r_in = 1;
  double r_out = 2;
  // OffAxis: |x − center| < radius.
  PointD center{1.2, 0.9};
  double radius = 0.25;

  static PlanarBump annulus(double r_in, double r_out);
  static PlanarBump off_axis(PointD center, double radius);

  double operator()(PointD x) const;
  /// Integral of f over the line {x : ⟨ξ, x⟩ = 1} (arc length).
  double line_integral(PointD xi, int nodes = 96) const;
  /// Points on the outer boundary of the support, plus the origin.
  std::vector<PointD> support_generators(int m = 256) const;
  /// Radius of a disk around 0 containing the support.
  double extent() const;
};

struct ZeroComponentReport {
  std::vector<PointD> component_polygon;
  std::vector<PointD> dual_polygon;
  double hausdorff = 0;
  double grid_h = 0;
  double threshold = 0;
  double box = 0;
  std::size_t component_points = 0;

  nlohmann::json to_json() const;
};

/// Evaluates the line transform of f on a Cartesian ξ-grid of spacing h over
/// [−box, box]², flood-fills {|Mf| ≤ 1e−9·max|Mf|} from 0, and compares the
/// component with the dual of hull(supp f ∪ {0}) by Hausdorff distance (on the grid).
/// box = 0 picks a default from the bump.
ZeroComponentReport zero_component_check(const PlanarBump& f, double h, double box = 0);

/// Dual of the hull of `generators`, clipped to [−box, box]², as a polygon (floating point).
std::vector<PointD> clipped_dual(const std::vector<PointD>& generators, double box);

}  // namespace radon::geometry
