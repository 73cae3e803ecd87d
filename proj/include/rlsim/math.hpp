// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

namespace rlsim {

/// 3-vector of doubles. Units depend on context (uu, uu/s, uu/s^2, rad/s).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  constexpr bool operator==(const Vec3&) const = default;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Unit vector along v, or the zero vector when v is (numerically) zero.
inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return n > 1e-300 ? v / n : Vec3{};
}

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Component-wise product.
constexpr Vec3 hadamard(const Vec3& a, const Vec3& b) { return {a.x * b.x, a.y * b.y, a.z * b.z}; }

/// Scales v so that its magnitude does not exceed cap; direction preserved.
inline Vec3 clamp_norm(const Vec3& v, double cap) {
  const double n = norm(v);
  return n > cap ? v * (cap / n) : v;
}

/// Car-local orientation triad. forward x right = up.
struct Axes {
  Vec3 forward;
  Vec3 right;
  Vec3 up;
};

/// Unit quaternion (w, x, y, z) describing a local-to-world rotation.
struct Rotation {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr bool operator==(const Rotation&) const = default;

  static Rotation identity() { return {}; }

  static Rotation from_axis_angle(const Vec3& axis, double angle) {
    const Vec3 a = rlsim::normalized(axis);
    const double h = 0.5 * angle;
    const double s = std::sin(h);
    return {std::cos(h), a.x * s, a.y * s, a.z * s};
  }

  /// Yaw about world up, then pitch (nose up positive), then roll (right side down positive).
  static Rotation from_euler(double yaw, double pitch, double roll) {
    const Rotation qy = from_axis_angle({0, 0, 1}, yaw);
    const Rotation qp = from_axis_angle({0, 1, 0}, -pitch);
    const Rotation qr = from_axis_angle({1, 0, 0}, -roll);
    return (qy * qp * qr).normalized();
  }

  constexpr Rotation operator*(const Rotation& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
  }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Rotation normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  constexpr Rotation conjugate() const { return {w, -x, -y, -z}; }

  /// Rotates a local vector into the world frame.
  constexpr Vec3 rotate(const Vec3& v) const {
    const Vec3 u{x, y, z};
    const Vec3 t = cross(u, v) * 2.0;
    return v + t * w + cross(u, t);
  }

  constexpr Vec3 unrotate(const Vec3& v) const { return conjugate().rotate(v); }

  bool finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

/// Orthonormal (forward, right, up) triad of a rotation.
inline Axes axes_of(const Rotation& r) {
  return {r.rotate({1, 0, 0}), r.rotate({0, 1, 0}), r.rotate({0, 0, 1})};
}

/// Advances a rotation by a world-frame angular velocity over dt (exact axis-angle update).
inline Rotation integrate_rotation(const Rotation& r, const Vec3& omega, double dt) {
  const double rate = norm(omega);
  if (rate * dt < 1e-15) return r;
  return (Rotation::from_axis_angle(omega / rate, rate * dt) * r).normalized();
}

/// Shortest-arc spherical interpolation, u in [0, 1].
inline Rotation slerp(const Rotation& a, Rotation b, double u) {
  double c = a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
  if (c < 0.0) {
    b = {-b.w, -b.x, -b.y, -b.z};
    c = -c;
  }
  double wa = 1.0 - u;
  double wb = u;
  if (c < 0.9999995) {
    const double theta = std::acos(c);
    const double s = std::sin(theta);
    wa = std::sin((1.0 - u) * theta) / s;
    wb = std::sin(u * theta) / s;
  }
  return Rotation{wa * a.w + wb * b.w, wa * a.x + wb * b.x, wa * a.y + wb * b.y,
                  wa * a.z + wb * b.z}
      .normalized();
}

inline double lerp(double a, double b, double u) { return a + (b - a) * u; }
inline Vec3 lerp(const Vec3& a, const Vec3& b, double u) { return a + (b - a) * u; }

inline constexpr double kPi = std::numbers::pi;

}  // namespace rlsim
