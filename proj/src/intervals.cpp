#include "ordalab/intervals.hpp"

#include <algorithm>
#include <sstream>

#include "ordalab/plmap.hpp"

namespace ordalab {

const Rational& Ext::value() const {
  if (tag_ != 0) throw std::logic_error("Ext: value() on an infinite endpoint");
  return val_;
}

std::string Ext::str() const {
  if (tag_ < 0) return "-inf";
  if (tag_ > 0) return "inf";
  return val_.str();
}

ClosedSet ClosedSet::full_line() {
  return interval(Ext::neg_inf(), Ext::pos_inf());
}

ClosedSet ClosedSet::point(const Rational& p) {
  return interval(Ext(p), Ext(p));
}

ClosedSet ClosedSet::interval(Ext lo, Ext hi) {
  return of({ClosedInterval{std::move(lo), std::move(hi)}});
}

ClosedSet ClosedSet::of(std::vector<ClosedInterval> parts) {
  for (const auto& iv : parts) {
    if (iv.lo.is_pos_inf() || iv.hi.is_neg_inf() || iv.hi < iv.lo)
      throw std::invalid_argument("ClosedSet: malformed interval [" + iv.lo.str() + "," + iv.hi.str() + "]");
  }
  std::sort(parts.begin(), parts.end(),
            [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  ClosedSet s;
  for (auto& iv : parts) {
    if (!s.parts_.empty() && iv.lo <= s.parts_.back().hi) {
      if (s.parts_.back().hi < iv.hi) s.parts_.back().hi = iv.hi;
    } else {
      s.parts_.push_back(std::move(iv));
    }
  }
  return s;
}

bool ClosedSet::is_full_line() const {
  return parts_.size() == 1 && parts_[0].lo.is_neg_inf() && parts_[0].hi.is_pos_inf();
}

bool ClosedSet::contains(const Rational& x) const {
  for (const auto& iv : parts_) {
    if (Ext(x) < iv.lo) return false;
    if (iv.contains(x)) return true;
  }
  return false;
}

std::optional<Rational> ClosedSet::some_point() const {
  for (const auto& iv : parts_) {
    if (iv.lo.finite()) return iv.lo.value();
    if (iv.hi.finite()) return iv.hi.value();
    return Rational(0);  // full line
  }
  return std::nullopt;
}

std::string ClosedSet::str() const {
  std::ostringstream os;
  if (parts_.empty()) return "{}";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " u ";
    os << "[" << parts_[i].lo.str() << "," << parts_[i].hi.str() << "]";
  }
  return os.str();
}

OpenIntervalList OpenIntervalList::of(std::vector<OpenInterval> parts) {
  for (const auto& iv : parts) {
    if (!(iv.lo < iv.hi)) throw std::invalid_argument("OpenIntervalList: interval with lo >= hi");
  }
  std::sort(parts.begin(), parts.end(),
            [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].lo < parts[i - 1].hi)
      throw std::invalid_argument("OpenIntervalList: overlapping intervals");
  }
  OpenIntervalList l;
  l.parts_ = std::move(parts);
  return l;
}

bool OpenIntervalList::contains(const Rational& x) const {
  for (const auto& iv : parts_) {
    if (Ext(x) <= iv.lo) return false;
    if (iv.contains(x)) return true;
  }
  return false;
}

std::string OpenIntervalList::str() const {
  std::ostringstream os;
  if (parts_.empty()) return "{}";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " u ";
    os << "(" << parts_[i].lo.str() << "," << parts_[i].hi.str() << ")";
  }
  return os.str();
}

ClosedSet intersect(const ClosedSet& a, const ClosedSet& b) {
  std::vector<ClosedInterval> out;
  size_t i = 0, j = 0;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  while (i < pa.size() && j < pb.size()) {
    const Ext lo = std::max(pa[i].lo, pb[j].lo);
    const Ext hi = std::min(pa[i].hi, pb[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi) ++i; else ++j;
  }
  return ClosedSet::of(std::move(out));
}

OpenIntervalList complement_open(const ClosedSet& a) {
  std::vector<OpenInterval> out;
  Ext cursor = Ext::neg_inf();
  for (const auto& iv : a.parts()) {
    if (cursor < iv.lo) out.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < Ext::pos_inf()) out.push_back({cursor, Ext::pos_inf()});
  return OpenIntervalList::of(std::move(out));
}

OpenIntervalList intersect(const OpenIntervalList& a, const OpenIntervalList& b) {
  std::vector<OpenInterval> out;
  size_t i = 0, j = 0;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  while (i < pa.size() && j < pb.size()) {
    const Ext lo = std::max(pa[i].lo, pb[j].lo);
    const Ext hi = std::min(pa[i].hi, pb[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi) ++i; else ++j;
  }
  return OpenIntervalList::of(std::move(out));
}

OpenIntervalList merge_union(const OpenIntervalList& a, const OpenIntervalList& b) {
  std::vector<OpenInterval> all(a.parts());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  std::sort(all.begin(), all.end(),
            [](const OpenInterval& x, const OpenInterval& y) { return x.lo < y.lo; });
  std::vector<OpenInterval> out;
  for (auto& iv : all) {
    // Open intervals merge only when they genuinely overlap; (0,1) u (1,2)
    // stays two components.
    if (!out.empty() && iv.lo < out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return OpenIntervalList::of(std::move(out));
}

ClosedSet group_fixed_set(const std::vector<PLMap>& gens) {
  if (gens.empty()) throw std::invalid_argument("group_fixed_set: empty generator list");
  ClosedSet acc = fixed_set(gens[0]);
  for (size_t i = 1; i < gens.size(); ++i) acc = intersect(acc, fixed_set(gens[i]));
  return acc;
}

OpenIntervalList orbit_intervals(const std::vector<PLMap>& gens) {
  for (const auto& g : gens) {
    if (!g.is_unit_interval())
      throw std::invalid_argument("orbit_intervals: generator is not a unit-interval map");
  }
  const ClosedSet fix = group_fixed_set(gens);
  const OpenIntervalList open = complement_open(fix);
  std::vector<OpenInterval> within;
  for (const auto& iv : open.parts()) {
    if (iv.lo >= Ext(Rational(0)) && iv.hi <= Ext(Rational(1))) within.push_back(iv);
  }
  // Each interval must be setwise invariant: its endpoints sit in the
  // common fixed set, so each generator maps them to themselves.
  for (const auto& iv : within) {
    for (const auto& g : gens) {
      if (eval(g, iv.lo.value()) != iv.lo.value() || eval(g, iv.hi.value()) != iv.hi.value())
        throw std::logic_error("orbit_intervals: interval not invariant under a generator");
    }
  }
  return OpenIntervalList::of(std::move(within));
}

bool is_plt(const std::vector<PLMap>& gens) {
  for (const auto& g : gens) {
    if (!g.is_unit_interval())
      throw std::invalid_argument("is_plt: generator is not a unit-interval map");
  }
  const ClosedSet fix = group_fixed_set(gens);
  for (const auto& iv : fix.parts()) {
    // [lo,hi] meets (0,1) exactly when lo < 1 and hi > 0.
    if (iv.lo < Ext(Rational(1)) && iv.hi > Ext(Rational(0))) return false;
  }
  return true;
}

}  // namespace ordalab
