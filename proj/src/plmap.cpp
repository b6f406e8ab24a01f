#include "ordalab/plmap.hpp"

#include <algorithm>
#include <sstream>

namespace ordalab {

Affine Affine::through(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2) {
  const Rational s = (y2 - y1) / (x2 - x1);
  return {s, y1 - s * x1};
}

PLMap PLMap::affine(const Rational& slope, const Rational& offset) {
  if (slope.sign() <= 0) throw std::invalid_argument("PLMap: slope must be positive");
  PLMap f;
  f.left_ = f.right_ = Affine{slope, offset};
  return f;
}

PLMap PLMap::from_breakpoints(std::vector<Breakpoint> bps, Affine left_tail, Affine right_tail) {
  if (left_tail.slope.sign() <= 0 || right_tail.slope.sign() <= 0)
    throw std::invalid_argument("PLMap: tail slopes must be positive");
  if (bps.empty()) {
    if (!(left_tail == right_tail))
      throw std::invalid_argument("PLMap: no breakpoints but tails differ");
    PLMap f;
    f.left_ = f.right_ = left_tail;
    return f;
  }
  for (size_t i = 1; i < bps.size(); ++i) {
    if (!(bps[i - 1].x < bps[i].x))
      throw std::invalid_argument("PLMap: breakpoint x-coordinates not strictly increasing");
    if (!(bps[i - 1].y < bps[i].y))
      throw std::invalid_argument("PLMap: breakpoint y-coordinates not strictly increasing");
  }
  if (left_tail(bps.front().x) != bps.front().y)
    throw std::invalid_argument("PLMap: left tail does not pass through the first breakpoint");
  if (right_tail(bps.back().x) != bps.back().y)
    throw std::invalid_argument("PLMap: right tail does not pass through the last breakpoint");

  // Canonicalize: keep only genuine kinks, i.e. points where the one-sided
  // derivatives differ. Those derivatives are read off the segments to the
  // immediate neighbours (tails at the ends), and removing a collinear
  // point changes neither the function nor any other point's derivatives,
  // so one pass suffices.
  std::vector<Breakpoint> keep;
  const size_t n = bps.size();
  for (size_t i = 0; i < n; ++i) {
    const Affine in = (i == 0) ? left_tail
                               : Affine::through(bps[i - 1].x, bps[i - 1].y, bps[i].x, bps[i].y);
    const Affine out = (i + 1 == n) ? right_tail
                                    : Affine::through(bps[i].x, bps[i].y, bps[i + 1].x, bps[i + 1].y);
    if (!(in.slope == out.slope)) keep.push_back(bps[i]);
  }

  if (keep.empty()) {
    if (!(left_tail == right_tail))
      throw std::logic_error("PLMap: canonicalization produced inconsistent tails");
    PLMap f;
    f.left_ = f.right_ = left_tail;
    return f;
  }
  PLMap f;
  f.bps_ = std::move(keep);
  f.left_ = left_tail;
  f.right_ = right_tail;
  return f;
}

PLMap PLMap::unit_interval(std::vector<Breakpoint> bps) {
  if (bps.size() < 2 || !(bps.front().x == Rational(0)) || !(bps.front().y == Rational(0)) ||
      !(bps.back().x == Rational(1)) || !(bps.back().y == Rational(1)))
    throw std::invalid_argument("PLMap: unit-interval map must run from (0,0) to (1,1)");
  return from_breakpoints(std::move(bps), Affine::identity(), Affine::identity());
}

bool PLMap::is_unit_interval() const {
  if (!(left_ == Affine::identity()) || !(right_ == Affine::identity())) return false;
  for (const auto& bp : bps_) {
    if (bp.x < Rational(0) || bp.x > Rational(1)) return false;
  }
  return true;
}

Rational PLMap::operator()(const Rational& x) const {
  if (bps_.empty() || x <= bps_.front().x) return left_(x);
  if (x >= bps_.back().x) return right_(x);
  // Last breakpoint with bp.x <= x.
  size_t lo = 0, hi = bps_.size() - 1;
  while (lo + 1 < hi) {
    const size_t mid = (lo + hi) / 2;
    if (bps_[mid].x <= x) lo = mid; else hi = mid;
  }
  const auto& a = bps_[lo];
  const auto& b = bps_[lo + 1];
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

std::string PLMap::str() const {
  std::ostringstream os;
  os << "pl[";
  for (size_t i = 0; i < bps_.size(); ++i) {
    if (i) os << " ";
    os << "(" << bps_[i].x << "," << bps_[i].y << ")";
  }
  os << "; L=" << left_.slope << "x+" << left_.offset
     << " R=" << right_.slope << "x+" << right_.offset << "]";
  return os.str();
}

Rational eval(const PLMap& f, const Rational& x) { return f(x); }

Rational eval_inverse(const PLMap& f, const Rational& y) {
  const auto& bps = f.breakpoints();
  if (bps.empty() || y <= bps.front().y) return f.left_tail().invert(y);
  if (y >= bps.back().y) return f.right_tail().invert(y);
  size_t lo = 0, hi = bps.size() - 1;
  while (lo + 1 < hi) {
    const size_t mid = (lo + hi) / 2;
    if (bps[mid].y <= y) lo = mid; else hi = mid;
  }
  const auto& a = bps[lo];
  const auto& b = bps[lo + 1];
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // Breakpoints of f∘g: breakpoints of g plus g-preimages of breakpoints
  // of f; non-kinks are dropped by the canonicalizing constructor.
  std::vector<Rational> xs;
  for (const auto& bp : g.breakpoints()) xs.push_back(bp.x);
  for (const auto& bp : f.breakpoints()) xs.push_back(eval_inverse(g, bp.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> bps;
  bps.reserve(xs.size());
  for (const auto& x : xs) bps.push_back({x, f(g(x))});
  return PLMap::from_breakpoints(std::move(bps), f.left_tail().after(g.left_tail()),
                                 f.right_tail().after(g.right_tail()));
}

PLMap inverse(const PLMap& f) {
  std::vector<Breakpoint> bps;
  bps.reserve(f.breakpoints().size());
  for (const auto& bp : f.breakpoints()) bps.push_back({bp.y, bp.x});
  return PLMap::from_breakpoints(std::move(bps), f.left_tail().inverse(), f.right_tail().inverse());
}

PLMap power(const PLMap& f, long n) {
  if (n == 0) return PLMap();
  PLMap base = n < 0 ? inverse(f) : f;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  PLMap acc;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return acc;
}

PLMap conjugate(const PLMap& x, const PLMap& g) {
  return compose(g, compose(x, inverse(g)));
}

PLMap reverse(const PLMap& f) {
  std::vector<Breakpoint> bps;
  const auto& src = f.breakpoints();
  bps.reserve(src.size());
  for (auto it = src.rbegin(); it != src.rend(); ++it) bps.push_back({-it->x, -it->y});
  // Near -inf, -f(-r) follows the reflected right tail of f, and vice versa.
  const Affine left{f.right_tail().slope, -f.right_tail().offset};
  const Affine right{f.left_tail().slope, -f.left_tail().offset};
  return PLMap::from_breakpoints(std::move(bps), left, right);
}

bool equals(const PLMap& f, const PLMap& g) { return f == g; }

namespace {

// Fixed points of a single affine piece restricted to [lo, hi].
void piece_fixed(const Affine& a, const Ext& lo, const Ext& hi, std::vector<ClosedInterval>& out) {
  if (a.slope == Rational(1)) {
    if (a.offset.is_zero()) out.push_back({lo, hi});
    return;
  }
  const Rational p = a.offset / (Rational(1) - a.slope);
  if (Ext(p) >= lo && Ext(p) <= hi) out.push_back({Ext(p), Ext(p)});
}

}  // namespace

ClosedSet fixed_set(const PLMap& f) {
  std::vector<ClosedInterval> out;
  const auto& bps = f.breakpoints();
  if (bps.empty()) {
    piece_fixed(f.left_tail(), Ext::neg_inf(), Ext::pos_inf(), out);
    return ClosedSet::of(std::move(out));
  }
  piece_fixed(f.left_tail(), Ext::neg_inf(), Ext(bps.front().x), out);
  for (size_t i = 0; i + 1 < bps.size(); ++i) {
    piece_fixed(Affine::through(bps[i].x, bps[i].y, bps[i + 1].x, bps[i + 1].y),
                Ext(bps[i].x), Ext(bps[i + 1].x), out);
  }
  piece_fixed(f.right_tail(), Ext(bps.back().x), Ext::pos_inf(), out);
  return ClosedSet::of(std::move(out));
}

}  // namespace ordalab
