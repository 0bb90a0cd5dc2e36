// Copyright 2026 The adelic-volumes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact calculus of one-variable piecewise-affine functions.
//
// Two carriers are used throughout the library:
//
//   LinePA        a piecewise-affine function on the whole real line, given by
//                 breakpoints plus the two asymptotic slopes. Potentials live
//                 here. ConvexPA is the same data with convexity enforced.
//   ConcavePA<V>  a concave piecewise-affine function on a closed interval
//                 with rational abscissae and values in V (Rational, or
//                 LogLinear for global roofs that pick up log p terms).
//
// All functions are stored in canonical form: strictly increasing abscissae
// and no breakpoint between two collinear segments. No floating point is used
// in this header.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adelic/error.hpp"
#include "adelic/log_linear.hpp"
#include "adelic/rational.hpp"

namespace adelic {

// Closed interval [lo, hi] with rational endpoints, or the distinct empty
// marker. lo == hi is the (legal) degenerate point interval.
class Interval {
 public:
  Interval(const Rational& lo, const Rational& hi) : empty_(false), lo_(lo), hi_(hi) {
    if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "interval with lo > hi; use Interval::from_bounds");
  }

  static Interval empty() { return Interval(); }
  static Interval point(const Rational& x) { return Interval(x, x); }
  // Empty marker when lo > hi.
  static Interval from_bounds(const Rational& lo, const Rational& hi) {
    return hi < lo ? empty() : Interval(lo, hi);
  }

  bool is_empty() const { return empty_; }
  bool is_point() const { return !empty_ && lo_ == hi_; }
  const Rational& lo() const { check(); return lo_; }
  const Rational& hi() const { check(); return hi_; }
  Rational length() const { return empty_ ? Rational(0) : hi_ - lo_; }

  bool contains(const Rational& x) const { return !empty_ && lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const {
    return o.empty_ || (!empty_ && lo_ <= o.lo_ && o.hi_ <= hi_);
  }

  Interval intersect(const Interval& o) const {
    if (empty_ || o.empty_) return empty();
    return from_bounds(max(lo_, o.lo_), min(hi_, o.hi_));
  }
  Interval minkowski_sum(const Interval& o) const {
    if (empty_ || o.empty_) return empty();
    return Interval(lo_ + o.lo_, hi_ + o.hi_);
  }
  Interval scaled(const Rational& a) const {
    if (empty_) return empty();
    return a.sign() >= 0 ? Interval(a * lo_, a * hi_) : Interval(a * hi_, a * lo_);
  }
  Interval reflected() const { return scaled(Rational(-1)); }

  std::string to_string() const {
    return empty_ ? "empty" : "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Interval() : empty_(true) {}
  void check() const {
    if (empty_) throw Error(ErrorCode::kEmptyDomain, "endpoint of the empty interval");
  }

  bool empty_;
  Rational lo_;
  Rational hi_;
};

template <class V>
struct Vertex {
  Rational x;
  V y;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

namespace internal {

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<Rational> {
  using Integral = Rational;
  static std::optional<Rational> ratio(const Rational& a, const Rational& b) { return a / b; }
  // c * n^2 / d
  static Integral quadratic(const Rational& c, const Rational& n, const Rational& d) { return c * n * n / d; }
};

template <>
struct ValueTraits<LogLinear> {
  using Integral = ExactReal;
  static std::optional<Rational> ratio(const LogLinear& a, const LogLinear& b) {
    return LogLinear::ratio(a, b);
  }
  static Integral quadratic(const Rational& c, const LogLinear& n, const LogLinear& d) {
    return ExactReal::quadratic_term(c, n, d);
  }
};

}  // namespace internal

template <class V>
using IntegralOf = typename internal::ValueTraits<V>::Integral;

// ---------------------------------------------------------------------------
// LinePA: piecewise-affine functions on the real line (PAGeneral).

class LinePA {
 public:
  using Point = Vertex<Rational>;

  LinePA(std::vector<Point> points, Rational left_slope, Rational right_slope)
      : points_(std::move(points)), left_slope_(std::move(left_slope)), right_slope_(std::move(right_slope)) {
    if (points_.empty()) throw Error(ErrorCode::kInvalidArgument, "piecewise-affine function needs a point");
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i - 1].x < points_[i].x)) {
        throw Error(ErrorCode::kInvalidArgument, "breakpoints must be strictly increasing");
      }
    }
    canonicalize();
  }

  static LinePA constant(const Rational& c) { return LinePA({{Rational(0), c}}, Rational(0), Rational(0)); }
  static LinePA affine(const Rational& slope, const Rational& value_at_zero) {
    return LinePA({{Rational(0), value_at_zero}}, slope, slope);
  }
  // u -> max(right * u, left * u) shape through the origin, i.e. the
  // function with a single breakpoint at 0 and the given asymptotic slopes.
  static LinePA kink_at_origin(const Rational& left_slope, const Rational& right_slope) {
    return LinePA({{Rational(0), Rational(0)}}, left_slope, right_slope);
  }

  const std::vector<Point>& points() const { return points_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  Rational eval(const Rational& x) const {
    const auto& front = points_.front();
    const auto& back = points_.back();
    if (x <= front.x) return front.y + left_slope_ * (x - front.x);
    if (x >= back.x) return back.y + right_slope_ * (x - back.x);
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](const Rational& v, const Point& p) { return v < p.x; });
    const Point& b = *it;
    const Point& a = *(it - 1);
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
  }

  // Slopes left to right: left asymptote, each segment, right asymptote.
  std::vector<Rational> slopes() const {
    std::vector<Rational> out;
    out.reserve(points_.size() + 1);
    out.push_back(left_slope_);
    for (std::size_t i = 1; i < points_.size(); ++i) {
      out.push_back((points_[i].y - points_[i - 1].y) / (points_[i].x - points_[i - 1].x));
    }
    out.push_back(right_slope_);
    return out;
  }

  bool is_convex() const {
    auto s = slopes();
    return std::is_sorted(s.begin(), s.end());
  }
  bool is_concave() const {
    auto s = slopes();
    return std::is_sorted(s.rbegin(), s.rend());
  }
  bool is_bounded() const { return left_slope_.is_zero() && right_slope_.is_zero(); }

  // Infimum over the real line; nullopt when unbounded below.
  std::optional<Rational> infimum() const {
    if (left_slope_.sign() > 0 || right_slope_.sign() < 0) return std::nullopt;
    Rational m = points_.front().y;
    for (const auto& p : points_) m = min(m, p.y);
    return m;
  }
  // Supremum over the real line; nullopt when unbounded above.
  std::optional<Rational> supremum() const {
    if (left_slope_.sign() < 0 || right_slope_.sign() > 0) return std::nullopt;
    Rational m = points_.front().y;
    for (const auto& p : points_) m = max(m, p.y);
    return m;
  }
  // sup |f| for bounded functions.
  Rational sup_norm() const {
    if (!is_bounded()) throw Error(ErrorCode::kUnboundedPerturbation, "sup norm of an unbounded function");
    Rational m(0);
    for (const auto& p : points_) m = max(m, abs(p.y));
    return m;
  }

  LinePA operator-() const { return scaled(Rational(-1)); }

  LinePA scaled(const Rational& a) const {
    std::vector<Point> pts = points_;
    for (auto& p : pts) p.y *= a;
    return LinePA(std::move(pts), left_slope_ * a, right_slope_ * a);
  }

  friend LinePA operator+(const LinePA& f, const LinePA& g) {
    std::set<Rational> xs;
    for (const auto& p : f.points_) xs.insert(p.x);
    for (const auto& p : g.points_) xs.insert(p.x);
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.push_back({x, f.eval(x) + g.eval(x)});
    return LinePA(std::move(pts), f.left_slope_ + g.left_slope_, f.right_slope_ + g.right_slope_);
  }
  friend LinePA operator-(const LinePA& f, const LinePA& g) { return f + (-g); }

  friend bool operator==(const LinePA& a, const LinePA& b) {
    return a.points_ == b.points_ && a.left_slope_ == b.left_slope_ && a.right_slope_ == b.right_slope_;
  }

  std::string to_string() const {
    std::string out = "LinePA{slopes=(" + left_slope_.to_string() + "," + right_slope_.to_string() + "), pts=";
    for (const auto& p : points_) out += "(" + p.x.to_string() + "," + p.y.to_string() + ")";
    return out + "}";
  }

 private:
  void canonicalize() {
    const std::size_t n = points_.size();
    std::vector<Rational> s = slopes();  // s[i] is the slope left of point i
    std::vector<Point> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] != s[i + 1]) kept.push_back(points_[i]);
    }
    if (kept.empty()) {
      // Affine: anchor at the origin.
      Rational at_zero = points_.front().y - left_slope_ * points_.front().x;
      kept.push_back({Rational(0), at_zero});
    }
    points_ = std::move(kept);
  }

  std::vector<Point> points_;
  Rational left_slope_;
  Rational right_slope_;
};

using PAGeneral = LinePA;

inline LinePA scale(const LinePA& f, const Rational& a) { return f.scaled(a); }

// A LinePA that is convex on the whole line.
class ConvexPA {
 public:
  explicit ConvexPA(LinePA f) : f_(std::move(f)) {
    if (!f_.is_convex()) throw Error(ErrorCode::kInvalidPotential, "function is not convex");
  }
  ConvexPA(std::vector<LinePA::Point> points, Rational left_slope, Rational right_slope)
      : ConvexPA(LinePA(std::move(points), std::move(left_slope), std::move(right_slope))) {}

  const LinePA& function() const { return f_; }
  operator const LinePA&() const { return f_; }  // NOLINT(google-explicit-constructor)
  Rational eval(const Rational& x) const { return f_.eval(x); }
  const Rational& left_slope() const { return f_.left_slope(); }
  const Rational& right_slope() const { return f_.right_slope(); }
  const std::vector<LinePA::Point>& points() const { return f_.points(); }

  friend ConvexPA operator+(const ConvexPA& a, const ConvexPA& b) { return ConvexPA(a.f_ + b.f_); }
  friend bool operator==(const ConvexPA& a, const ConvexPA& b) { return a.f_ == b.f_; }

 private:
  LinePA f_;
};

// Nonnegative scaling keeps convexity; negative scaling yields a general PA.
inline ConvexPA scale(const ConvexPA& f, const Rational& a) {
  if (a.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative scaling of a convex function; use LinePA");
  return ConvexPA(f.function().scaled(a));
}

// ---------------------------------------------------------------------------
// ConcavePA<V>: concave functions on a closed interval.

template <class V = Rational>
class ConcavePA {
 public:
  using Point = Vertex<V>;

  // Points must start at domain.lo() and end at domain.hi().
  explicit ConcavePA(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) throw Error(ErrorCode::kInvalidArgument, "concave function needs a point");
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i - 1].x < points_[i].x)) {
        throw Error(ErrorCode::kInvalidArgument, "breakpoints must be strictly increasing");
      }
    }
    canonicalize();
    if (!slopes_nonincreasing()) throw Error(ErrorCode::kInvalidArgument, "function is not concave");
  }

  static ConcavePA constant(const Interval& domain, const V& c) {
    if (domain.is_empty()) throw Error(ErrorCode::kEmptyDomain, "constant on the empty interval");
    if (domain.is_point()) return ConcavePA({{domain.lo(), c}});
    return ConcavePA({{domain.lo(), c}, {domain.hi(), c}});
  }
  static ConcavePA affine(const Interval& domain, const V& value_at_zero, const Rational& slope) {
    auto at = [&](const Rational& x) { return value_at_zero + V(slope * x); };
    if (domain.is_point()) return ConcavePA({{domain.lo(), at(domain.lo())}});
    return ConcavePA({{domain.lo(), at(domain.lo())}, {domain.hi(), at(domain.hi())}});
  }

  const std::vector<Point>& points() const { return points_; }
  Interval domain() const { return Interval(points_.front().x, points_.back().x); }

  V eval(const Rational& x) const {
    if (x < points_.front().x || points_.back().x < x) {
      throw Error(ErrorCode::kOutOfDomain, "x = " + x.to_string() + " outside " + domain().to_string());
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    if (it->x == x) return it->y;
    const Point& b = *it;
    const Point& a = *(it - 1);
    return a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
  }

  // Segment slopes, left to right (empty for a point domain).
  std::vector<V> slopes() const {
    std::vector<V> out;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      out.push_back((points_[i].y - points_[i - 1].y) / (points_[i].x - points_[i - 1].x));
    }
    return out;
  }

  const Point& argmax() const {
    const Point* best = &points_.front();
    for (const auto& p : points_) {
      if (best->y < p.y) best = &p;
    }
    return *best;
  }
  V max_value() const { return argmax().y; }
  // Concave functions attain their minimum at an endpoint.
  V min_value() const {
    const V& a = points_.front().y;
    const V& b = points_.back().y;
    return b < a ? b : a;
  }

  ConcavePA restrict(const Interval& window) const {
    if (window.is_empty() || !domain().contains(window)) {
      throw Error(ErrorCode::kOutOfDomain, "window " + window.to_string() + " not inside " + domain().to_string());
    }
    std::vector<Point> pts;
    pts.push_back({window.lo(), eval(window.lo())});
    for (const auto& p : points_) {
      if (window.lo() < p.x && p.x < window.hi()) pts.push_back(p);
    }
    if (!window.is_point()) pts.push_back({window.hi(), eval(window.hi())});
    return ConcavePA(std::move(pts), Trusted{});
  }

  // x -> f(-x) on the reflected domain.
  ConcavePA reflected() const {
    std::vector<Point> pts(points_.rbegin(), points_.rend());
    for (auto& p : pts) p.x = -p.x;
    return ConcavePA(std::move(pts), Trusted{});
  }

  ConcavePA scaled(const Rational& a) const {
    if (a.sign() < 0) throw Error(ErrorCode::kInvalidArgument, "negative scaling of a concave function");
    std::vector<Point> pts = points_;
    for (auto& p : pts) p.y = p.y * a;
    return ConcavePA(std::move(pts));
  }

  // Values mapped through v -> unit * v (e.g. promotion of a normalized
  // finite-place roof to natural-log units).
  template <class W>
  ConcavePA<W> promoted(const W& unit) const {
    std::vector<Vertex<W>> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back({p.x, unit * p.y});
    return ConcavePA<W>(std::move(pts));
  }

  friend ConcavePA operator+(const ConcavePA& f, const ConcavePA& g) {
    Interval d = f.domain().intersect(g.domain());
    if (d.is_empty()) throw Error(ErrorCode::kEmptyDomain, "sum of concave functions with disjoint domains");
    std::set<Rational> xs{d.lo(), d.hi()};
    for (const auto& p : f.points_) {
      if (d.contains(p.x)) xs.insert(p.x);
    }
    for (const auto& p : g.points_) {
      if (d.contains(p.x)) xs.insert(p.x);
    }
    std::vector<Point> pts;
    for (const auto& x : xs) pts.push_back({x, f.eval(x) + g.eval(x)});
    return ConcavePA(std::move(pts), Trusted{});
  }

  friend bool operator==(const ConcavePA& a, const ConcavePA& b) { return a.points_ == b.points_; }

  std::string to_string() const {
    std::string out = "ConcavePA{";
    for (const auto& p : points_) out += "(" + p.x.to_string() + "," + to_str(p.y) + ")";
    return out + "}";
  }

 private:
  template <class W>
  friend class ConcavePA;
  struct Trusted {};

  ConcavePA(std::vector<Point> points, Trusted) : points_(std::move(points)) { canonicalize(); }

  static std::string to_str(const Rational& v) { return v.to_string(); }
  static std::string to_str(const LogLinear& v) { return v.to_string(); }

  void canonicalize() {
    if (points_.size() <= 2) return;
    std::vector<V> s = slopes();
    std::vector<Point> kept{points_.front()};
    for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
      if (!(s[i - 1] == s[i])) kept.push_back(points_[i]);
    }
    kept.push_back(points_.back());
    points_ = std::move(kept);
  }

  bool slopes_nonincreasing() const {
    std::vector<V> s = slopes();
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i - 1] < s[i]) return false;
    }
    return true;
  }

  std::vector<Point> points_;
};

template <class V>
ConcavePA<V> scale(const ConcavePA<V>& f, const Rational& a) {
  return f.scaled(a);
}

// ---------------------------------------------------------------------------
// Pointwise minima.

// Minimum of functions on the line. The result is exact: all pairwise
// crossings are inserted as breakpoints before evaluating.
inline LinePA pointwise_min(const std::vector<LinePA>& fs) {
  if (fs.empty()) throw Error(ErrorCode::kInvalidArgument, "pointwise_min of an empty list");
  if (fs.size() == 1) return fs.front();
  std::set<Rational> base;
  for (const auto& f : fs) {
    for (const auto& p : f.points()) base.insert(p.x);
  }
  std::vector<Rational> xs(base.begin(), base.end());
  std::set<Rational> candidates(base);

  // Adds pairwise crossings of the affine pieces valid on (lo, hi); unbounded
  // sides are marked by nullopt.
  auto add_crossings = [&](const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                           const Rational& anchor, const std::vector<Rational>& slope) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        if (slope[i] == slope[j]) continue;
        Rational x = anchor + (fs[j].eval(anchor) - fs[i].eval(anchor)) / (slope[i] - slope[j]);
        if ((!lo || *lo < x) && (!hi || x < *hi)) candidates.insert(x);
      }
    }
  };

  {
    std::vector<Rational> s;
    for (const auto& f : fs) s.push_back(f.left_slope());
    add_crossings(std::nullopt, xs.front(), xs.front(), s);
  }
  for (std::size_t k = 1; k < xs.size(); ++k) {
    std::vector<Rational> s;
    for (const auto& f : fs) s.push_back((f.eval(xs[k]) - f.eval(xs[k - 1])) / (xs[k] - xs[k - 1]));
    add_crossings(xs[k - 1], xs[k], xs[k - 1], s);
  }
  {
    std::vector<Rational> s;
    for (const auto& f : fs) s.push_back(f.right_slope());
    add_crossings(xs.back(), std::nullopt, xs.back(), s);
  }

  auto min_at = [&](const Rational& x) {
    Rational m = fs.front().eval(x);
    for (const auto& f : fs) m = min(m, f.eval(x));
    return m;
  };
  std::vector<LinePA::Point> pts;
  for (const auto& x : candidates) pts.push_back({x, min_at(x)});
  const Rational& first = pts.front().x;
  const Rational& last = pts.back().x;
  Rational left = pts.front().y - min_at(first - Rational(1));
  Rational right = min_at(last + Rational(1)) - pts.back().y;
  return LinePA(std::move(pts), left, right);
}

inline LinePA pointwise_min(const std::vector<ConvexPA>& fs) {
  std::vector<LinePA> gs(fs.begin(), fs.end());
  return pointwise_min(gs);
}

// Minimum of concave functions on the intersection of their domains.
inline ConcavePA<Rational> pointwise_min_concave(const std::vector<ConcavePA<Rational>>& fs) {
  if (fs.empty()) throw Error(ErrorCode::kInvalidArgument, "pointwise_min_concave of an empty list");
  Interval d = fs.front().domain();
  for (const auto& f : fs) d = d.intersect(f.domain());
  if (d.is_empty()) throw Error(ErrorCode::kEmptyDomain, "concave functions with disjoint domains");
  std::set<Rational> base{d.lo(), d.hi()};
  for (const auto& f : fs) {
    for (const auto& p : f.points()) {
      if (d.contains(p.x)) base.insert(p.x);
    }
  }
  std::vector<Rational> xs(base.begin(), base.end());
  std::set<Rational> candidates(base);
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const Rational& a = xs[k - 1];
    const Rational& b = xs[k];
    std::vector<Rational> s;
    for (const auto& f : fs) s.push_back((f.eval(b) - f.eval(a)) / (b - a));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        if (s[i] == s[j]) continue;
        Rational x = a + (fs[j].eval(a) - fs[i].eval(a)) / (s[i] - s[j]);
        if (a < x && x < b) candidates.insert(x);
      }
    }
  }
  std::vector<Vertex<Rational>> pts;
  for (const auto& x : candidates) {
    Rational m = fs.front().eval(x);
    for (const auto& f : fs) m = min(m, f.eval(x));
    pts.push_back({x, m});
  }
  return ConcavePA<Rational>(std::move(pts));
}

// ---------------------------------------------------------------------------
// Envelopes and Legendre duality.

// Greatest convex minorant with the same asymptotic slopes.
inline ConvexPA convex_envelope(const LinePA& f) {
  const Rational& sl = f.left_slope();
  const Rational& sr = f.right_slope();
  if (sr < sl) {
    throw Error(ErrorCode::kUnboundedBelow, "asymptotic slopes " + sl.to_string() + " > " + sr.to_string());
  }
  if (f.is_convex()) return ConvexPA(f);
  const auto& pts = f.points();
  const std::size_t n = pts.size();
  // Supporting points for the two asymptotic directions.
  std::size_t il = 0;
  std::size_t ir = 0;
  Rational best_l = pts[0].y - sl * pts[0].x;
  Rational best_r = pts[0].y - sr * pts[0].x;
  for (std::size_t i = 1; i < n; ++i) {
    Rational vl = pts[i].y - sl * pts[i].x;
    if (vl <= best_l) { best_l = vl; il = i; }
    Rational vr = pts[i].y - sr * pts[i].x;
    if (vr < best_r) { best_r = vr; ir = i; }
  }
  if (sl == sr) return ConvexPA(LinePA({pts[ir]}, sl, sr));
  // Lower hull of pts[il..ir] (monotone chain).
  std::vector<LinePA::Point> hull;
  for (std::size_t i = il; i <= ir; ++i) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Drop b when it lies on or above the chord a -> pts[i].
      Rational cross = (b.x - a.x) * (pts[i].y - a.y) - (b.y - a.y) * (pts[i].x - a.x);
      if (cross.sign() <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pts[i]);
  }
  return ConvexPA(LinePA(std::move(hull), sl, sr));
}

// psi(x) = inf_u (G(u) - x u), defined on [left_slope, right_slope].
inline ConcavePA<Rational> legendre_roof(const ConvexPA& potential) {
  const auto& pts = potential.points();
  std::vector<Rational> s = potential.function().slopes();
  std::vector<Vertex<Rational>> out;
  out.push_back({s.front(), pts.front().y - s.front() * pts.front().x});
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (s[j] == s[j - 1]) continue;  // only possible for an affine potential
    const auto& p = pts[j - 1];
    out.push_back({s[j], p.y - s[j] * p.x});
  }
  return ConcavePA<Rational>(std::move(out));
}

// G(u) = sup_{x in domain} (x u + psi(x)).
inline ConvexPA legendre_potential(const ConcavePA<Rational>& roof) {
  const auto& pts = roof.points();
  if (pts.size() == 1) return ConvexPA(LinePA::affine(pts.front().x, pts.front().y));
  std::vector<LinePA::Point> out;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    Rational sigma = (pts[k].y - pts[k - 1].y) / (pts[k].x - pts[k - 1].x);
    Rational u = -sigma;
    out.push_back({u, pts[k].x * u + pts[k].y});
  }
  return ConvexPA(LinePA(std::move(out), pts.front().x, pts.back().x));
}

// h(x) = sup { f(x1) + g(x2) : x1 + x2 = x }, by merging segments in order of
// decreasing slope.
inline ConcavePA<Rational> sup_convolution(const ConcavePA<Rational>& f, const ConcavePA<Rational>& g) {
  struct Segment {
    Rational dx;
    Rational slope;
  };
  auto segments = [](const ConcavePA<Rational>& h) {
    std::vector<Segment> out;
    const auto& p = h.points();
    for (std::size_t i = 1; i < p.size(); ++i) {
      Rational dx = p[i].x - p[i - 1].x;
      out.push_back({dx, (p[i].y - p[i - 1].y) / dx});
    }
    return out;
  };
  std::vector<Segment> a = segments(f);
  std::vector<Segment> b = segments(g);
  std::vector<Segment> merged;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged),
             [](const Segment& l, const Segment& r) { return r.slope < l.slope; });
  Rational x = f.points().front().x + g.points().front().x;
  Rational y = f.points().front().y + g.points().front().y;
  std::vector<Vertex<Rational>> pts{{x, y}};
  for (const auto& s : merged) {
    x += s.dx;
    y += s.dx * s.slope;
    pts.push_back({x, y});
  }
  return ConcavePA<Rational>(std::move(pts));
}

// ---------------------------------------------------------------------------
// Integration and sign regions.

// Exact integral of max(f, 0) over the window.
template <class V>
IntegralOf<V> integrate_positive_part(const ConcavePA<V>& f, const Interval& window) {
  using Traits = internal::ValueTraits<V>;
  ConcavePA<V> g = f.restrict(window);
  IntegralOf<V> total{};
  const auto& p = g.points();
  for (std::size_t i = 1; i < p.size(); ++i) {
    const V& v0 = p[i - 1].y;
    const V& v1 = p[i].y;
    Rational dx = p[i].x - p[i - 1].x;
    int s0 = sign(v0);
    int s1 = sign(v1);
    if (s0 >= 0 && s1 >= 0) {
      total += IntegralOf<V>((v0 + v1) * (dx / Rational(2)));
    } else if (s0 > 0 && s1 < 0) {
      total += Traits::quadratic(dx / Rational(2), v0, v0 - v1);
    } else if (s0 < 0 && s1 > 0) {
      total += Traits::quadratic(dx / Rational(2), v1, v1 - v0);
    }
  }
  return total;
}

template <class V>
IntegralOf<V> integrate_positive_part(const ConcavePA<V>& f) {
  return integrate_positive_part(f, f.domain());
}

// {x : f(x) >= 0} for concave f, as an interval (possibly empty). Throws
// IrrationalCrossing when an endpoint is not rational.
template <class V>
Interval nonnegative_region(const ConcavePA<V>& f) {
  using Traits = internal::ValueTraits<V>;
  const auto& p = f.points();
  std::size_t top = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[top].y < p[i].y) top = i;
  }
  if (sign(p[top].y) < 0) return Interval::empty();
  auto crossing = [&](const Vertex<V>& in, const Vertex<V>& out) {
    // in.y >= 0 > out.y; x = in.x + (out.x - in.x) * in.y / (in.y - out.y)
    auto lambda = Traits::ratio(in.y, in.y - out.y);
    if (!lambda) throw Error(ErrorCode::kIrrationalCrossing, "zero of the roof is not rational");
    return in.x + (out.x - in.x) * *lambda;
  };
  Rational lo = p.front().x;
  for (std::size_t i = top; i > 0; --i) {
    if (sign(p[i - 1].y) < 0) {
      lo = crossing(p[i], p[i - 1]);
      break;
    }
  }
  Rational hi = p.back().x;
  for (std::size_t i = top; i + 1 < p.size(); ++i) {
    if (sign(p[i + 1].y) < 0) {
      hi = crossing(p[i], p[i + 1]);
      break;
    }
  }
  return Interval(lo, hi);
}

}  // namespace adelic
