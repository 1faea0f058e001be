#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace occtrack {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

/// 2-D location in frame pixels. x runs along columns, y along rows.
template <typename Scalar>
struct Point2 {
  Scalar x = 0;
  Scalar y = 0;

  Point2() = default;
  Point2(Scalar px, Scalar py) : x(px), y(py) {}
  explicit Point2(const Vec2<Scalar>& v) : x(v.x()), y(v.y()) {}

  Vec2<Scalar> vec() const { return Vec2<Scalar>(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

template <typename Scalar>
Point2<Scalar> operator+(const Point2<Scalar>& a, const Vec2<Scalar>& d) {
  return {a.x + d.x(), a.y + d.y()};
}

template <typename Scalar>
Point2<Scalar> operator-(const Point2<Scalar>& a, const Vec2<Scalar>& d) {
  return {a.x - d.x(), a.y - d.y()};
}

template <typename Scalar>
Vec2<Scalar> operator-(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return Vec2<Scalar>(a.x - b.x, a.y - b.y);
}

/// Axis-aligned box in center convention. w, h > 0.
template <typename Scalar>
struct BoundingBox {
  Scalar cx = 0;
  Scalar cy = 0;
  Scalar w = 0;
  Scalar h = 0;

  BoundingBox() = default;
  BoundingBox(Scalar cx_, Scalar cy_, Scalar w_, Scalar h_) : cx(cx_), cy(cy_), w(w_), h(h_) {}

  static BoundingBox from_top_left(Scalar x, Scalar y, Scalar w_, Scalar h_) {
    return {x + w_ / Scalar(2), y + h_ / Scalar(2), w_, h_};
  }

  Point2<Scalar> center() const { return {cx, cy}; }
  Scalar left() const { return cx - w / Scalar(2); }
  Scalar right() const { return cx + w / Scalar(2); }
  Scalar top() const { return cy - h / Scalar(2); }
  Scalar bottom() const { return cy + h / Scalar(2); }
  Scalar area() const { return w * h; }
  Scalar diagonal() const { return std::sqrt(w * w + h * h); }
  bool valid() const { return w > Scalar(0) && h > Scalar(0); }

  BoundingBox with_center(const Point2<Scalar>& c) const { return {c.x, c.y, w, h}; }
};

/// Planar similarity: rotation by `r` radians, isotropic scale `c` (> 0) and
/// translation `v` in pixels. Applied as p -> c * R(r) * (p - pivot) + pivot + v.
template <typename Scalar>
struct SimilarityTransform {
  Scalar r = 0;
  Scalar c = 1;
  Vec2<Scalar> v = Vec2<Scalar>::Zero();

  SimilarityTransform() = default;
  SimilarityTransform(Scalar rot, Scalar scale, const Vec2<Scalar>& trans)
      : r(rot), c(scale), v(trans) {}

  static SimilarityTransform identity() { return {}; }

  Mat2<Scalar> rotation() const {
    const Scalar cs = std::cos(r);
    const Scalar sn = std::sin(r);
    Mat2<Scalar> m;
    m << cs, -sn, sn, cs;
    return m;
  }

  bool is_identity() const { return r == Scalar(0) && c == Scalar(1) && v.isZero(Scalar(0)); }
};

template <typename Scalar>
Point2<Scalar> apply_transform(const SimilarityTransform<Scalar>& t, const Point2<Scalar>& p,
                               const Point2<Scalar>& pivot = Point2<Scalar>()) {
  const Vec2<Scalar> q = t.c * (t.rotation() * (p - pivot)) + pivot.vec() + t.v;
  return Point2<Scalar>(q);
}

/// Inverse for the same pivot: r' = -r, c' = 1/c, v' = -(1/c) R(-r) v.
template <typename Scalar>
SimilarityTransform<Scalar> invert(const SimilarityTransform<Scalar>& t) {
  SimilarityTransform<Scalar> inv;
  inv.r = -t.r;
  inv.c = Scalar(1) / t.c;
  inv.v = -(inv.c * (inv.rotation() * t.v));
  return inv;
}

/// Composition about a shared pivot: apply `first`, then `second`.
template <typename Scalar>
SimilarityTransform<Scalar> compose(const SimilarityTransform<Scalar>& second,
                                    const SimilarityTransform<Scalar>& first) {
  SimilarityTransform<Scalar> out;
  out.r = second.r + first.r;
  out.c = second.c * first.c;
  out.v = second.c * (second.rotation() * first.v) + second.v;
  return out;
}

/// Accumulated per-frame camera displacement m in pixels.
template <typename Scalar>
using AccumulatedMotion = Vec2<Scalar>;

enum class AccumulationMode {
  /// m^t = c^t R^t v^t for the first step, then m^t = c^t R^t v^t + m^{t-1}.
  kPrefixSum,
  /// Full similarity composition; m^t is the translation of the composed map.
  kStrictComposition,
};

/// Running accumulation of per-frame motion steps, one output per input step.
template <typename Scalar>
std::vector<AccumulatedMotion<Scalar>> accumulate_motion(
    const std::vector<SimilarityTransform<Scalar>>& steps,
    AccumulationMode mode = AccumulationMode::kPrefixSum) {
  if (steps.empty()) throw std::invalid_argument("accumulate_motion: no motion steps");
  std::vector<AccumulatedMotion<Scalar>> out;
  out.reserve(steps.size());
  if (mode == AccumulationMode::kPrefixSum) {
    Vec2<Scalar> m = Vec2<Scalar>::Zero();
    for (const auto& s : steps) {
      m += s.c * (s.rotation() * s.v);
      out.push_back(m);
    }
  } else {
    SimilarityTransform<Scalar> acc;
    for (const auto& s : steps) {
      acc = compose(s, acc);
      out.push_back(acc.v);
    }
  }
  return out;
}

template <typename Scalar>
Scalar iou(const BoundingBox<Scalar>& a, const BoundingBox<Scalar>& b) {
  const Scalar iw = std::min(a.right(), b.right()) - std::max(a.left(), b.left());
  const Scalar ih = std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
  if (iw <= Scalar(0) || ih <= Scalar(0)) return Scalar(0);
  const Scalar inter = iw * ih;
  return inter / (a.area() + b.area() - inter);
}

using Point2d = Point2<double>;
using BoundingBoxd = BoundingBox<double>;
using SimilarityTransformd = SimilarityTransform<double>;

}  // namespace occtrack
