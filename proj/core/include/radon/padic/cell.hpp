#pragma once

#include <vector>

#include "radon/padic/scalar.hpp"
#include "radon/value/rational.hpp"

namespace radon::padic {

/// The ball center + π^level O^n. The center is kept reduced mod π^level, so
/// two cells are equal iff their (level, center) pairs are.
class Cell {
 public:
  Cell() = default;
  Cell(const PAdicVector& center, int level);

  /// The ball π^level O^n around the origin.
  static Cell ball(int q, int n, int level);

  const PAdicVector& center() const noexcept { return center_; }
  int level() const noexcept { return level_; }
  int dim() const noexcept { return center_.dim(); }
  int prime() const noexcept { return center_.prime(); }

  bool contains(const PAdicVector& x) const;
  bool contains(const Cell& other) const;
  bool contains_zero() const noexcept { return center_.is_zero(); }
  /// Cells never partially overlap: either disjoint or one holds the other.
  bool intersects(const Cell& other) const;

  /// v(ξ) on the cell; only meaningful when !contains_zero().
  int shell() const { return center_.valuation(); }

  /// Haar measure q^{-level·n} with mes(O) = 1.
  Rational measure() const;

  std::vector<Cell> children() const;
  /// All descendants at `level` (>= this->level()).
  std::vector<Cell> descendants(int level) const;
  /// Enclosing cell at `level` (<= this->level()).
  Cell ancestor(int level) const;

  friend bool operator==(const Cell& a, const Cell& b) noexcept {
    return a.level_ == b.level_ && a.center_ == b.center_;
  }
  friend bool operator!=(const Cell& a, const Cell& b) noexcept { return !(a == b); }
  /// Orders by level, then center.
  friend bool operator<(const Cell& a, const Cell& b) noexcept {
    if (a.level_ != b.level_) return a.level_ < b.level_;
    return a.center_ < b.center_;
  }

 private:
  PAdicVector center_;
  int level_ = 0;
};

/// Haar measure of a cell.
Rational haar_measure(const Cell& c);

}  // namespace radon::padic
