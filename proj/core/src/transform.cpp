#include "pcsr/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace pcsr {

GeomTransform GeomTransform::identity() { return GeomTransform{}; }

GeomTransform GeomTransform::translation(double tx, double ty) {
  GeomTransform t;
  t.kind = MotionKind::translation;
  t.tx = tx;
  t.ty = ty;
  return t;
}

GeomTransform GeomTransform::affine(double a11, double a12, double a21, double a22,
                                    double tx, double ty) {
  GeomTransform t;
  t.kind = MotionKind::affine;
  t.a11 = a11;
  t.a12 = a12;
  t.a21 = a21;
  t.a22 = a22;
  t.tx = tx;
  t.ty = ty;
  return t;
}

Vec2 GeomTransform::apply(double x, double y) const {
  return {a11 * x + a12 * y + tx, a21 * x + a22 * y + ty};
}

bool GeomTransform::is_identity(double tol) const {
  return std::abs(a11 - 1.0) <= tol && std::abs(a12) <= tol && std::abs(a21) <= tol &&
         std::abs(a22 - 1.0) <= tol && std::abs(tx) <= tol && std::abs(ty) <= tol;
}

GeomTransform compose(const GeomTransform& t1, const GeomTransform& t2) {
  GeomTransform r;
  r.a11 = t1.a11 * t2.a11 + t1.a12 * t2.a21;
  r.a12 = t1.a11 * t2.a12 + t1.a12 * t2.a22;
  r.a21 = t1.a21 * t2.a11 + t1.a22 * t2.a21;
  r.a22 = t1.a21 * t2.a12 + t1.a22 * t2.a22;
  const Vec2 t = t1.apply(t2.tx, t2.ty);
  r.tx = t.x;
  r.ty = t.y;
  r.kind = (t1.kind == MotionKind::translation && t2.kind == MotionKind::translation)
               ? MotionKind::translation
               : MotionKind::affine;
  return r;
}

GeomTransform invert(const GeomTransform& t) {
  if (t.kind == MotionKind::translation)
    return GeomTransform::translation(-t.tx, -t.ty);
  const double d = t.det();
  if (std::abs(d) < 1e-12)
    throw std::runtime_error("invert: singular linear part");
  const double i11 = t.a22 / d;
  const double i12 = -t.a12 / d;
  const double i21 = -t.a21 / d;
  const double i22 = t.a11 / d;
  return GeomTransform::affine(i11, i12, i21, i22,
                               -(i11 * t.tx + i12 * t.ty),
                               -(i21 * t.tx + i22 * t.ty));
}

}  // namespace pcsr
