#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordalab/rational.hpp"

namespace ordalab {

class PLMap;

/// Endpoint of an interval: a rational or one of the infinities.
/// The infinities are sentinels distinct from any Rational value.
class Ext {
 public:
  Ext() : tag_(0) {}
  Ext(Rational v) : tag_(0), val_(std::move(v)) {}  // NOLINT: implicit
  static Ext neg_inf() { Ext e; e.tag_ = -1; return e; }
  static Ext pos_inf() { Ext e; e.tag_ = 1; return e; }

  bool finite() const { return tag_ == 0; }
  bool is_neg_inf() const { return tag_ == -1; }
  bool is_pos_inf() const { return tag_ == 1; }
  const Rational& value() const;

  std::string str() const;  // "-inf", "inf" or "p/q"

  friend bool operator==(const Ext& a, const Ext& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_ != 0 || a.val_ == b.val_;
  }
  friend bool operator<(const Ext& a, const Ext& b) {
    if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
    return a.tag_ == 0 && a.val_ < b.val_;
  }
  friend bool operator!=(const Ext& a, const Ext& b) { return !(a == b); }
  friend bool operator<=(const Ext& a, const Ext& b) { return a < b || a == b; }
  friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
  friend bool operator>=(const Ext& a, const Ext& b) { return b <= a; }

 private:
  int tag_;
  Rational val_;
};

/// Closed interval [lo, hi]; lo == hi is an isolated point, infinite
/// endpoints make rays or the full line.
struct ClosedInterval {
  Ext lo, hi;
  bool contains(const Rational& x) const { return Ext(x) >= lo && Ext(x) <= hi; }
};

/// Open interval (lo, hi) with lo < hi.
struct OpenInterval {
  Ext lo, hi;
  bool contains(const Rational& x) const { return Ext(x) > lo && Ext(x) < hi; }
};

/// Finite union of disjoint, sorted, non-adjacent closed intervals.
/// This is the shape of every fixed-point set in the library.
class ClosedSet {
 public:
  ClosedSet() = default;  // empty set

  static ClosedSet full_line();
  static ClosedSet point(const Rational& p);
  static ClosedSet interval(Ext lo, Ext hi);
  /// Sorts, merges overlapping/touching intervals, validates endpoints.
  static ClosedSet of(std::vector<ClosedInterval> parts);

  bool empty() const { return parts_.empty(); }
  bool is_full_line() const;
  const std::vector<ClosedInterval>& parts() const { return parts_; }
  bool contains(const Rational& x) const;

  /// Some finite element of the set, if one exists (empty set, and the
  /// pathological {-inf ray only with no finite point} cannot occur:
  /// every nonempty part has a finite endpoint or is the full line).
  std::optional<Rational> some_point() const;

  std::string str() const;
  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;

 private:
  std::vector<ClosedInterval> parts_;
};

/// Sorted list of pairwise disjoint open intervals.
class OpenIntervalList {
 public:
  OpenIntervalList() = default;
  static OpenIntervalList of(std::vector<OpenInterval> parts);

  bool empty() const { return parts_.empty(); }
  const std::vector<OpenInterval>& parts() const { return parts_; }
  bool contains(const Rational& x) const;
  std::string str() const;
  friend bool operator==(const OpenIntervalList&, const OpenIntervalList&) = default;

 private:
  std::vector<OpenInterval> parts_;
};

ClosedSet intersect(const ClosedSet& a, const ClosedSet& b);
OpenIntervalList complement_open(const ClosedSet& a);
OpenIntervalList intersect(const OpenIntervalList& a, const OpenIntervalList& b);
OpenIntervalList merge_union(const OpenIntervalList& a, const OpenIntervalList& b);

/// Intersection of fixed_set over all generators; equals the fixed set
/// of the generated group. Requires a nonempty generator list.
ClosedSet group_fixed_set(const std::vector<PLMap>& gens);

/// Complement within [0,1] of the group fixed set, for unit-interval
/// generators. Every returned interval is setwise invariant under each
/// generator; this is verified before returning.
OpenIntervalList orbit_intervals(const std::vector<PLMap>& gens);

/// True iff the generated group has no common fixed point in (0,1).
bool is_plt(const std::vector<PLMap>& gens);

}  // namespace ordalab
