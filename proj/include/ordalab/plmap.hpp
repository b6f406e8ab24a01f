#pragma once

#include <string>
#include <vector>

#include "ordalab/intervals.hpp"
#include "ordalab/rational.hpp"

namespace ordalab {

/// One affine piece y = slope * x + offset, slope > 0.
struct Affine {
  Rational slope{1};
  Rational offset{0};

  Rational operator()(const Rational& x) const { return slope * x + offset; }
  Rational invert(const Rational& y) const { return (y - offset) / slope; }

  /// this ∘ inner
  Affine after(const Affine& inner) const {
    return {slope * inner.slope, slope * inner.offset + offset};
  }
  Affine inverse() const { return {Rational(1) / slope, -offset / slope}; }

  static Affine identity() { return {}; }
  /// The secant line through two points with x1 != x2.
  static Affine through(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2);

  friend bool operator==(const Affine&, const Affine&) = default;
};

struct Breakpoint {
  Rational x, y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear orientation-preserving homeomorphism of the line:
/// finitely many breakpoints with affine tails on both sides. Values are
/// immutable and always in canonical form (every stored breakpoint is a
/// genuine slope change), so equality is structural.
///
/// Unit-interval maps — identity tails, fixing 0 and 1, all breakpoints
/// inside [0,1] — are the subtype produced by unit_interval().
class PLMap {
 public:
  PLMap() = default;  // identity

  static PLMap affine(const Rational& slope, const Rational& offset);
  static PLMap translation(const Rational& c) { return affine(1, c); }
  /// General constructor. Validates strict monotonicity, positive tail
  /// slopes and tail/segment continuity, then canonicalizes.
  static PLMap from_breakpoints(std::vector<Breakpoint> bps, Affine left_tail, Affine right_tail);
  /// Unit-interval subtype: first breakpoint (0,0), last (1,1), identity tails.
  static PLMap unit_interval(std::vector<Breakpoint> bps);

  const std::vector<Breakpoint>& breakpoints() const { return bps_; }
  const Affine& left_tail() const { return left_; }
  const Affine& right_tail() const { return right_; }

  bool is_identity() const { return bps_.empty() && left_ == Affine::identity(); }
  bool is_affine() const { return bps_.empty(); }
  bool is_translation() const { return bps_.empty() && left_.slope == Rational(1); }
  bool is_unit_interval() const;

  Rational operator()(const Rational& x) const;

  std::string str() const;
  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  // Invariant: bps_ strictly increasing in x and y; tails continuous with
  // the end breakpoints; no breakpoint collinear with its neighbours.
  // Empty bps_ means the pure affine map left_ == right_.
  std::vector<Breakpoint> bps_;
  Affine left_, right_;
};

Rational eval(const PLMap& f, const Rational& x);
/// The unique x with f(x) = y.
Rational eval_inverse(const PLMap& f, const Rational& y);

/// (f∘g)(x) = f(g(x)).
PLMap compose(const PLMap& f, const PLMap& g);
PLMap inverse(const PLMap& f);
PLMap power(const PLMap& f, long n);
/// x^g = g ∘ x ∘ g⁻¹.
PLMap conjugate(const PLMap& x, const PLMap& g);
/// r ↦ -f(-r); a homomorphism Aut(ℝ) → Aut(ℝ) and an involution.
PLMap reverse(const PLMap& f);
bool equals(const PLMap& f, const PLMap& g);
/// The exact set {x : f(x) = x}.
ClosedSet fixed_set(const PLMap& f);

}  // namespace ordalab
