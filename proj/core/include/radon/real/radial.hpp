#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "radon/specfun/jet.hpp"

namespace radon::real {

using specfun::RealJet;

/// A smooth function on R_{>0} given through its jets, vanishing with all
/// derivatives outside (lo, hi). lo = 0 means no lower bound (C_+),
/// hi = ∞ means no upper bound (C_−).
struct RadialFunction {
  std::function<RealJet(long double r, int order)> jet;
  double lo = 0;
  double hi = std::numeric_limits<double>::infinity();
  /// Radii where the function is smooth but varies sharply (quadrature cuts).
  std::vector<double> breaks;

  bool vanishes_at(long double r) const { return r <= lo || r >= hi; }
  double operator()(double r) const { return vanishes_at(r) ? 0.0 : static_cast<double>(jet(r, 0).value()); }
  /// Jet at r; the zero jet outside the support.
  RealJet jet_at(long double r, int order) const {
    if (vanishes_at(r)) return RealJet::constant(r, order, 0.0L);
    return jet(r, order);
  }
};

/// Closed test family: P(v)·exp(−1/(1−v²)) with v = (2r − s₀ − S)/(S − s₀),
/// supported on [s₀, S] ⊂ R_{>0}.
struct RadialTestFn {
  std::string family = "bump";
  double s0 = 1;
  double S = 2;
  std::vector<double> poly{1.0};

  RealJet jet(long double r, int order) const;
  double operator()(double r) const;
  RadialFunction function() const;
};

/// r ↦ c·r^a on all of R_{>0} (for Mellin-type checks).
RadialFunction radial_power(double a, double c = 1.0);

/// (Inv φ) radial part for dimension d: g(r) = r^{−d} φ(1/r).
RadialFunction inv_radial_dim(int d, const RadialFunction& phi);

}  // namespace radon::real
