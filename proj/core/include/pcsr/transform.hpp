#pragma once

namespace pcsr {

enum class MotionKind { translation, affine };

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Maps target-frame coordinates into reference-frame coordinates:
//   (x', y') = A (x, y)^T + (tx, ty).
// Translation kind keeps A = I.
struct GeomTransform {
  MotionKind kind = MotionKind::translation;
  double a11 = 1.0, a12 = 0.0;
  double a21 = 0.0, a22 = 1.0;
  double tx = 0.0, ty = 0.0;

  static GeomTransform identity();
  static GeomTransform translation(double tx, double ty);
  static GeomTransform affine(double a11, double a12, double a21, double a22,
                              double tx, double ty);

  Vec2 apply(double x, double y) const;
  double det() const { return a11 * a22 - a12 * a21; }
  bool is_identity(double tol = 0.0) const;
};

// apply(compose(t1, t2), p) == apply(t1, apply(t2, p)).
GeomTransform compose(const GeomTransform& t1, const GeomTransform& t2);

// Throws std::runtime_error on a singular linear part.
GeomTransform invert(const GeomTransform& t);

}  // namespace pcsr
