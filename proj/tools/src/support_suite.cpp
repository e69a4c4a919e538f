#include <utility>

#include "radon/errors.hpp"
#include "radon/geometry/support.hpp"
#include "runner.hpp"

namespace radon::suites {

using namespace radon::geometry;
using detail::Task;

namespace {

std::string polygon_text(const ConvexPolygon& p) {
  std::string s;
  for (const auto& v : p.vertices()) s += (s.empty() ? "(" : " (") + v.x.get_str() + "," + v.y.get_str() + ")";
  return s;
}

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

void exact_dual(Row& row, const ConvexPolygon& p, const ConvexPolygon& want) {
  const auto d = polar_dual(p);
  row.lhs = polygon_text(d);
  row.rhs = polygon_text(want);
  row.pass = d == want;
}

}  // namespace

Report run_support_suite(const RunConfig& cfg) {
  std::vector<Task> tasks;
  tasks.push_back({"dual_example", {{"polygon", "square"}}, [](Row& row) {
                     exact_dual(row, ConvexPolygon::hull({pt(1, 1), pt(-1, 1), pt(-1, -1), pt(1, -1)}),
                                ConvexPolygon::hull({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}));
                   }});
  tasks.push_back({"dual_example", {{"polygon", "triangle"}}, [](Row& row) {
                     exact_dual(row, ConvexPolygon::hull({pt(1, 1), pt(1, -2), pt(-2, 1)}),
                                ConvexPolygon::hull({pt(1, 0), pt(0, 1), pt(-1, -1)}));
                   }});
  tasks.push_back({"dual_unbounded", {{"polygon", "origin on boundary"}}, [](Row& row) {
                     try {
                       polar_dual(ConvexPolygon::hull({pt(0, 0), pt(1, 0), pt(0, 1)}));
                       row.detail = "no UnboundedDual raised";
                     } catch (const UnboundedDual&) {
                       row.pass = true;
                     }
                   }});
  const int polygons = std::max(20, cfg.cases);
  for (int c = 0; c < polygons; ++c)
    tasks.push_back({"dual_involution", {{"case", c}}, [c, seed = cfg.seed](Row& row) {
                       auto rng = detail::case_rng(seed, "polygon", {c});
                       const auto p = random_polygon(rng);
                       const auto back = polar_dual(polar_dual(p));
                       row.lhs = polygon_text(back);
                       row.rhs = polygon_text(p);
                       row.pass = back == p;
                     }});
  for (const auto& [name, bump] : {std::pair{"annulus", PlanarBump::annulus(1, 2)},
                                   std::pair{"off_axis", PlanarBump::off_axis({1.2, 0.9}, 0.25)}})
    tasks.push_back({"zero_component", {{"family", name}, {"h", cfg.grid_h}}, [bump, h = cfg.grid_h](Row& row) {
                       const auto rep = zero_component_check(bump, h);
                       row.error = rep.hausdorff;
                       row.lhs = fmt(rep.hausdorff);
                       row.rhs = fmt(3 * h);
                       row.pass = rep.hausdorff <= 3 * h;
                       row.detail = "Hausdorff distance to the clipped polar dual; bound 3h";
                       row.data = rep.to_json();
                     }});
  Report rep{"support", cfg, detail::run_tasks(std::move(tasks), cfg)};
  rep.sort_rows();
  return rep;
}

}  // namespace radon::suites
