#pragma once

#include "gamehedge/rational.hpp"

#include <optional>
#include <vector>

namespace gamehedge {

// Bid/ask slope pair parameterizing the liquidation kink of one trading
// date. Only ask >= bid is required here; positivity is a market-level
// concern.
struct PriceBand {
  Rational bid;
  Rational ask;

  PriceBand(Rational bid_, Rational ask_);
};

// A continuous piecewise-linear function R -> R, or the constant -infinity.
//
// Canonical form: strictly increasing breakpoints, every interior breakpoint
// a genuine kink, plus the slopes of the two unbounded rays. An affine
// function carries a single anchor sample at 0 with equal ray slopes.
// All operations return canonical values, so equality of functions is
// structural equality.
class PolyhedralFn {
 public:
  PolyhedralFn() : PolyhedralFn(neg_infinity()) {}

  static PolyhedralFn neg_infinity();
  static PolyhedralFn constant(const Rational& value);
  static PolyhedralFn affine(const Rational& slope, const Rational& value_at_zero);
  // Arbitrary sample points (strictly increasing xs, matching ys) plus ray
  // slopes; redundant samples are canonicalized away.
  static PolyhedralFn from_breakpoints(std::vector<Rational> xs, std::vector<Rational> ys,
                                       Rational left_slope, Rational right_slope);

  bool is_neg_infinity() const { return neg_inf_; }
  bool is_finite() const { return !neg_inf_; }
  bool is_affine() const;

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& sample_values() const { return ys_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  // Exact value; requires a finite function.
  Rational eval(const Rational& y) const;
  // Value with -infinity mapped to nullopt.
  std::optional<Rational> try_eval(const Rational& y) const;

  // Slope of the piece immediately right of y (the ray slope beyond the
  // last breakpoint). Requires a finite function.
  Rational slope_right_of(const Rational& y) const;

  bool operator==(const PolyhedralFn& other) const;

  friend PolyhedralFn pointwise_max(const PolyhedralFn&, const PolyhedralFn&);
  friend PolyhedralFn pointwise_min(const PolyhedralFn&, const PolyhedralFn&);
  friend PolyhedralFn operator+(const PolyhedralFn&, const PolyhedralFn&);
  friend PolyhedralFn add_linear(const PolyhedralFn&, const Rational& slope);
  friend PolyhedralFn translate(const PolyhedralFn&, const Rational& dx, const Rational& dy);
  friend PolyhedralFn reflect(const PolyhedralFn&);

 private:
  bool neg_inf_ = false;
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
  Rational left_slope_;
  Rational right_slope_;

  static PolyhedralFn from_samples(std::vector<Rational> xs, std::vector<Rational> ys,
                                   Rational left_slope, Rational right_slope);
  Rational segment_slope(std::size_t i) const;  // slope on [xs_[i], xs_[i+1]]
};

// h: the minimal cash making a pure-share position liquidate to >= 0.
// Two pieces through the origin with slopes -ask (left) and -bid (right);
// affine when the band is degenerate.
PolyhedralFn liquidation_floor(const PriceBand& band);

PolyhedralFn pointwise_max(const PolyhedralFn& f, const PolyhedralFn& g);
PolyhedralFn pointwise_min(const PolyhedralFn& f, const PolyhedralFn& g);

// Pointwise sum; -infinity absorbs.
PolyhedralFn operator+(const PolyhedralFn& f, const PolyhedralFn& g);

// f(y) + slope*y
PolyhedralFn add_linear(const PolyhedralFn& f, const Rational& slope);
// f(y - dx) + dy
PolyhedralFn translate(const PolyhedralFn& f, const Rational& dx, const Rational& dy);
// f(-y)
PolyhedralFn reflect(const PolyhedralFn& f);

// The unique function whose epigraph is epi(liquidation_floor(band)) + epi(f):
// the requirement on a portfolio that can be rebalanced, self-financed at the
// band's prices, into epi(f). Returns -infinity when the underlying infimal
// convolution diverges (the infimum is -infinity for every argument).
PolyhedralFn rebalance(const PriceBand& band, const PolyhedralFn& f);

// True iff (cash, shares) lies in epi(f); everything is a member of the
// epigraph of -infinity.
bool epi_member(const PolyhedralFn& f, const Rational& cash, const Rational& shares);

// f >= g everywhere.
bool dominates(const PolyhedralFn& f, const PolyhedralFn& g);

bool is_convex(const PolyhedralFn& f);

// Witness for the epigraph sum behind rebalance(): a trade u with
// (cash - h(u), shares - u) in epi(f), where h = liquidation_floor(band).
// Among the minimizers of h(u) + f(shares - u) picks the u of least
// absolute value, 0 when feasible, ties broken toward negative u.
// Throws std::invalid_argument when (cash, shares) is outside
// epi(rebalance(band, f)) or f is -infinity.
Rational split_trade(const PriceBand& band, const PolyhedralFn& f, const Rational& cash,
                     const Rational& shares);

// Concave polyhedral function on a compact interval, -infinity outside:
// the dual side of the convex conjugacy below. Breakpoints include both
// domain endpoints; a single point is allowed.
class ConcaveDual {
 public:
  ConcaveDual(std::vector<Rational> xs, std::vector<Rational> ys);

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& sample_values() const { return ys_; }
  const Rational& domain_lo() const { return xs_.front(); }
  const Rational& domain_hi() const { return xs_.back(); }

  std::optional<Rational> try_eval(const Rational& x) const;  // nullopt outside the domain

  bool operator==(const ConcaveDual& other) const = default;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

// f*(x) = inf_y (f(y) + x y) for convex finite f; the domain is
// [-right_slope, -left_slope]. Throws std::invalid_argument on non-convex
// or -infinity input.
ConcaveDual concave_conjugate(const PolyhedralFn& f);

// f(y) = sup_x (f*(x) - x y): exact inverse of concave_conjugate.
PolyhedralFn from_concave_conjugate(const ConcaveDual& dual);

}  // namespace gamehedge
