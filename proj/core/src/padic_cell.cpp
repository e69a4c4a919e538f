#include <stdexcept>

#include "radon/padic/cell.hpp"

namespace radon::padic {

Cell::Cell(const PAdicVector& center, int level) : center_(center.reduced(level)), level_(level) {}

Cell Cell::ball(int q, int n, int level) { return Cell(PAdicVector(q, n), level); }

bool Cell::contains(const PAdicVector& x) const {
  for (int i = 0; i < dim(); ++i) {
    if ((x[i] - center_[i]).valuation_or(level_) < level_) return false;
  }
  return true;
}

bool Cell::contains(const Cell& other) const { return level_ <= other.level_ && contains(other.center_); }

bool Cell::intersects(const Cell& other) const { return contains(other) || other.contains(*this); }

Rational Cell::measure() const { return q_pow(prime(), -level_ * dim()); }

Rational haar_measure(const Cell& c) { return c.measure(); }

std::vector<Cell> Cell::children() const {
  const int q = prime();
  const int n = dim();
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::size_t>(q);
  std::vector<Cell> out;
  out.reserve(count);
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    PAdicVector c = center_;
    for (int i = 0; i < n; ++i) {
      if (digit[static_cast<std::size_t>(i)] != 0)
        c[i] = c[i] + PAdicScalar::from_parts(q, level_, digit[static_cast<std::size_t>(i)]);
    }
    Cell child;
    child.center_ = c;
    child.level_ = level_ + 1;
    out.push_back(child);
    for (int i = 0; i < n; ++i) {
      if (++digit[static_cast<std::size_t>(i)] < q) break;
      digit[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

std::vector<Cell> Cell::descendants(int level) const {
  if (level < level_) throw std::invalid_argument("descendant level above cell level");
  std::vector<Cell> cur{*this};
  for (int l = level_; l < level; ++l) {
    std::vector<Cell> next;
    for (const auto& c : cur) {
      auto ch = c.children();
      next.insert(next.end(), ch.begin(), ch.end());
    }
    cur = std::move(next);
  }
  return cur;
}

Cell Cell::ancestor(int level) const {
  if (level > level_) throw std::invalid_argument("ancestor level below cell level");
  return Cell(center_, level);
}

}  // namespace radon::padic
