#pragma once

#include <string>
#include <vector>

#include "ordalab/intervals.hpp"
#include "ordalab/plmap.hpp"
#include "ordalab/rational.hpp"

namespace ordalab {

/// Piecewise-linear homeomorphism of the line commuting with x ↦ x + T:
/// f(x + T) = f(x) + T. Such maps have infinitely many breakpoints, so
/// only the kinks in one fundamental domain [0, T) are stored. Canonical
/// form stores genuine kinks only; a translation x + c is anchored as the
/// single entry (0, c). Equality is structural.
class PeriodicMap {
 public:
  /// The identity with period 1.
  PeriodicMap() : period_(1), bps_({{Rational(0), Rational(0)}}) {}

  static PeriodicMap translation(const Rational& c, const Rational& period = Rational(1));
  /// Kinks within [0, period): x strictly increasing, y strictly
  /// increasing with y_last < y_first + period.
  static PeriodicMap from_breakpoints(const Rational& period, std::vector<Breakpoint> bps);
  /// Extends unit-interval PLMap data (or any map with f(x0+T) = f(x0)+T
  /// across its breakpoint span) periodically.
  static PeriodicMap from_unit_map(const PLMap& f);

  const Rational& period() const { return period_; }
  const std::vector<Breakpoint>& breakpoints() const { return bps_; }

  bool is_identity() const;
  bool is_translation() const { return bps_.size() == 1; }
  /// Defined only for translations.
  Rational translation_amount() const;

  Rational operator()(const Rational& x) const;

  std::string str() const;
  friend bool operator==(const PeriodicMap&, const PeriodicMap&) = default;

 private:
  Rational period_;
  std::vector<Breakpoint> bps_;  // nonempty; kinks in [0, period_)
};

Rational eval(const PeriodicMap& f, const Rational& x);
Rational eval_inverse(const PeriodicMap& f, const Rational& y);

/// Both maps must share the same period.
PeriodicMap compose(const PeriodicMap& f, const PeriodicMap& g);
PeriodicMap inverse(const PeriodicMap& f);
PeriodicMap power(const PeriodicMap& f, long n);
PeriodicMap conjugate(const PeriodicMap& x, const PeriodicMap& g);
/// ψ f ψ⁻¹ for the affine ψ(x) = ax + b, a > 0. The period becomes a·T.
PeriodicMap conjugate_affine(const PeriodicMap& f, const Affine& psi);
bool equals(const PeriodicMap& f, const PeriodicMap& g);

/// Exact fixed points within the window [lo, hi].
ClosedSet fixed_set_window(const PeriodicMap& f, const Rational& lo, const Rational& hi);
/// True iff f has no fixed point anywhere (decided on one period).
bool fixed_point_free(const PeriodicMap& f);

}  // namespace ordalab
