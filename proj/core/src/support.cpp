#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "radon/errors.hpp"
#include "radon/geometry/support.hpp"
#include "radon/specfun/specfun.hpp"

namespace radon::geometry {

namespace {

// Explicit return type: mpq_class expression templates must not dangle.
template <class P>
decltype(P::x) cross(const P& o, const P& a, const P& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; collinear points are dropped.
template <class P>
std::vector<P> monotone_hull(std::vector<P> pts) {
  std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const P& a, const P& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

double profile(double v) { return std::abs(v) < 1 ? std::exp(-1 / (1 - v * v)) : 0.0; }

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) throw std::invalid_argument("a convex polygon needs at least three vertices");
  for (auto& p : v_) {
    p.x.canonicalize();
    p.y.canonicalize();
  }
  const std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(cross(v_[i], v_[(i + 1) % n], v_[(i + 2) % n])) <= 0)
      throw std::invalid_argument("vertices are not in strictly convex counterclockwise order");
  contains_origin_ = contains(Point{0, 0}, true);
}

ConvexPolygon ConvexPolygon::hull(std::vector<Point> points) {
  for (auto& p : points) {
    p.x.canonicalize();
    p.y.canonicalize();
  }
  return ConvexPolygon(monotone_hull(std::move(points))); }

bool ConvexPolygon::contains(const Point& p, bool strict) const {
  const std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int s = sgn(cross(v_[i], v_[(i + 1) % n], p));
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
  const std::size_t n = a.v_.size();
  if (n != b.v_.size()) return false;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = a.v_[i] == b.v_[(i + shift) % n];
    if (same) return true;
  }
  return false;
}

ConvexPolygon polar_dual(const ConvexPolygon& p) {
  if (!p.contains_origin()) throw UnboundedDual("polar dual is unbounded: the origin is not interior");
  const auto& v = p.vertices();
  std::vector<Point> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    const Rational c = a.x * b.y - a.y * b.x;
    d.push_back(Point{Rational((b.y - a.y) / c), Rational((a.x - b.x) / c)});
  }
  return ConvexPolygon(std::move(d));
}

ConvexPolygon random_polygon(std::mt19937_64& rng, int max_points) {
  if (max_points < 3) throw std::invalid_argument("random_polygon needs at least three points");
  std::uniform_int_distribution<int> cnt(3, max_points), num(1, 40), den(1, 9);
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  for (;;) {
    std::vector<Point> pts;
    const int m = cnt(rng);
    for (int i = 0; i < m; ++i) {
      const double a = ang(rng);
      const long r = num(rng), d = den(rng);
      pts.push_back(Point{Rational(std::lround(r * std::cos(a) * 8), 8 * d),
                          Rational(std::lround(r * std::sin(a) * 8), 8 * d)});
    }
    try {
      auto h = ConvexPolygon::hull(pts);
      if (h.contains_origin()) return h;
    } catch (const std::invalid_argument&) {
      // Degenerate (collinear) draw.
    }
  }
}

SupportFn::SupportFn(std::vector<PointD> generators) : g_(std::move(generators)) {
  if (g_.empty()) throw std::invalid_argument("support function needs at least one generator");
}

double SupportFn::operator()(PointD xi) const { return support_function(g_, xi); }

double support_function(const std::vector<PointD>& points, PointD xi) {
  if (points.empty()) throw std::invalid_argument("support function needs at least one point");
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& x : points) m = std::max(m, xi.x * x.x + xi.y * x.y);
  return m;
}

PlanarBump PlanarBump::annulus(double r_in, double r_out) {
  if (!(0 < r_in && r_in < r_out)) throw std::invalid_argument("annulus needs 0 < r_in < r_out");
  PlanarBump b;
  b.family = Family::Annulus;
  b.r_in = r_in;
  b.r_out = r_out;
  return b;
}

PlanarBump PlanarBump::off_axis(PointD center, double radius) {
  if (!(radius > 0) || std::hypot(center.x, center.y) <= radius)
    throw std::invalid_argument("off-axis bump must stay away from the origin");
  PlanarBump b;
  b.family = Family::OffAxis;
  b.center = center;
  b.radius = radius;
  return b;
}

double PlanarBump::operator()(PointD x) const {
  if (family == Family::Annulus) return profile((2 * std::hypot(x.x, x.y) - r_in - r_out) / (r_out - r_in));
  return profile(std::hypot(x.x - center.x, x.y - center.y) / radius);
}

double PlanarBump::line_integral(PointD xi, int nodes) const {
  const double norm = std::hypot(xi.x, xi.y);
  if (norm == 0) return 0;
  const double d = 1 / norm;
  const PointD w{xi.x / norm, xi.y / norm}, wp{-w.y, w.x};
  const PointD c = family == Family::Annulus ? PointD{0, 0} : center;
  const double R = family == Family::Annulus ? r_out : radius;
  const double delta = d - (w.x * c.x + w.y * c.y);
  if (std::abs(delta) >= R) return 0;
  const double half = std::sqrt(R * R - delta * delta);
  const double sc = wp.x * c.x + wp.y * c.y;
  std::vector<long double> cuts;
  if (family == Family::Annulus && d < r_in) {
    const double inner = std::sqrt(r_in * r_in - d * d);
    cuts = {-inner, inner};
  }
  long double s = 0;
  specfun::graded_nodes(sc - half, sc + half, cuts, 0.0, [&](long double t, long double wt) {
    s += wt * (*this)(PointD{d * w.x + double(t) * wp.x, d * w.y + double(t) * wp.y});
  }, 4, nodes / 8 > 4 ? nodes / 8 : 4);
  return static_cast<double>(s);
}

std::vector<PointD> PlanarBump::support_generators(int m) const {
  std::vector<PointD> g{{0, 0}};
  const PointD c = family == Family::Annulus ? PointD{0, 0} : center;
  const double R = family == Family::Annulus ? r_out : radius;
  for (int i = 0; i < m; ++i) {
    const double a = 2 * M_PI * i / m;
    g.push_back({c.x + R * std::cos(a), c.y + R * std::sin(a)});
  }
  return g;
}

double PlanarBump::extent() const {
  return family == Family::Annulus ? r_out : std::hypot(center.x, center.y) + radius;
}

std::vector<PointD> clipped_dual(const std::vector<PointD>& generators, double box) {
  std::vector<PointD> poly{{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (const auto& g : generators) {
    if (g.x == 0 && g.y == 0) continue;
    auto val = [&](const PointD& p) { return p.x * g.x + p.y * g.y - 1; };
    std::vector<PointD> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const PointD& a = poly[i];
      const PointD& b = poly[(i + 1) % poly.size()];
      const double va = val(a), vb = val(b);
      if (va <= 0) out.push_back(a);
      if ((va < 0 && vb > 0) || (va > 0 && vb < 0)) {
        const double t = va / (va - vb);
        out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
      }
    }
    poly = std::move(out);
    if (poly.empty()) break;
  }
  return poly;
}

ZeroComponentReport zero_component_check(const PlanarBump& f, double h, double box) {
  if (!(h > 0)) throw std::invalid_argument("grid spacing must be positive");
  if (box <= 0)
    box = f.family == PlanarBump::Family::Annulus ? 1.5 / f.r_out : 2 / std::hypot(f.center.x, f.center.y);
  const int N = static_cast<int>(std::ceil(box / h));
  const int W = 2 * N + 1;
  auto at = [&](int i, int j) { return PointD{(i - N) * h, (j - N) * h}; };
  auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * W + static_cast<std::size_t>(j); };

  std::vector<double> mf(static_cast<std::size_t>(W) * W);
  double mx = 0;
  for (int i = 0; i < W; ++i)
    for (int j = 0; j < W; ++j) {
      const double v = f.line_integral(at(i, j));
      mf[idx(i, j)] = v;
      mx = std::max(mx, std::abs(v));
    }
  ZeroComponentReport rep;
  rep.grid_h = h;
  rep.box = N * h;
  rep.threshold = 1e-9 * mx;

  // Flood fill of the zero set from ξ = 0.
  std::vector<char> comp(mf.size(), 0);
  std::deque<std::pair<int, int>> queue{{N, N}};
  comp[idx(N, N)] = 1;
  const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    for (int e = 0; e < 4; ++e) {
      const int a = i + di[e], b = j + dj[e];
      if (a < 0 || b < 0 || a >= W || b >= W || comp[idx(a, b)]) continue;
      if (std::abs(mf[idx(a, b)]) > rep.threshold) continue;
      comp[idx(a, b)] = 1;
      queue.emplace_back(a, b);
    }
  }

  const auto gens = f.support_generators();
  const SupportFn H(gens);
  std::vector<char> dual(mf.size(), 0);
  std::vector<PointD> comp_pts;
  for (int i = 0; i < W; ++i)
    for (int j = 0; j < W; ++j) {
      dual[idx(i, j)] = H(at(i, j)) < 1;
      if (comp[idx(i, j)]) comp_pts.push_back(at(i, j));
    }
  rep.component_points = comp_pts.size();

  auto boundary = [&](const std::vector<char>& set) {
    std::vector<PointD> out;
    for (int i = 0; i < W; ++i)
      for (int j = 0; j < W; ++j) {
        if (!set[idx(i, j)]) continue;
        bool edge = i == 0 || j == 0 || i == W - 1 || j == W - 1;
        for (int e = 0; e < 4 && !edge; ++e) edge = !set[idx(i + di[e], j + dj[e])];
        if (edge) out.push_back(at(i, j));
      }
    return out;
  };
  // One-sided distance from the points of `from` outside `to` to the set `to`.
  auto one_sided = [&](const std::vector<char>& from, const std::vector<char>& to) {
    const auto edge = boundary(to);
    double worst = 0;
    for (int i = 0; i < W; ++i)
      for (int j = 0; j < W; ++j) {
        if (!from[idx(i, j)] || to[idx(i, j)]) continue;
        const PointD p = at(i, j);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : edge) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
        worst = std::max(worst, best);
      }
    return worst;
  };
  rep.hausdorff = std::max(one_sided(comp, dual), one_sided(dual, comp));
  rep.component_polygon = monotone_hull(comp_pts);
  rep.dual_polygon = clipped_dual(gens, rep.box);
  return rep;
}

nlohmann::json ZeroComponentReport::to_json() const {
  auto poly = [](const std::vector<PointD>& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : p) a.push_back({v.x, v.y});
    return a;
  };
  return nlohmann::json{{"component_polygon", poly(component_polygon)},
                        {"dual_polygon", poly(dual_polygon)},
                        {"hausdorff", hausdorff},
                        {"grid_h", grid_h},
                        {"threshold", threshold},
                        {"box", box},
                        {"component_points", component_points}};
}

}  // namespace radon::geometry
