// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rlsim/math.hpp"

namespace rlsim {

inline constexpr int kTickRate = 120;
inline constexpr double kDt = 1.0 / kTickRate;

/// Raised on invalid or unreadable configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Piecewise-linear table of (x, y) knots, strictly increasing in x. Values outside the
/// knot range are held at the nearest endpoint.
struct Curve {
  std::vector<std::pair<double, double>> knots;

  double operator()(double x) const;
  bool operator==(const Curve&) const = default;
};

struct SuspensionAxle {
  double stiffness = 0.0;     // 1/s^2 (accel per uu of compression)
  double damper = 30.0;       // 1/s
  double max_compress = 3.0;  // uu
  double max_extend = 12.0;   // uu
  bool operator==(const SuspensionAxle&) const = default;
};

struct WheelSpec {
  Vec3 local_position;  // hub at rest (zero compression), car-local, uu
  double radius = 0.0;  // uu
  bool front = true;
  bool operator==(const WheelSpec&) const = default;
};

/// Oriented hitbox in car-local coordinates.
struct HitboxSpec {
  Vec3 size{118.01, 84.2, 36.16};     // full extents, uu
  Vec3 offset{13.88, 0.0, 20.75};     // center relative to car origin, uu
  Vec3 half_extents() const { return size * 0.5; }
  bool operator==(const HitboxSpec&) const = default;
};

/// Flat-box arena with a goal box behind each back wall (negative-y and positive-y).
struct ArenaSpec {
  double half_extent_x = 4096.0;
  double half_extent_y = 5120.0;
  double ceiling_height = 2044.0;
  double goal_half_width = 892.865;
  double goal_height = 642.775;
  double goal_depth = 880.0;
  bool operator==(const ArenaSpec&) const = default;
};

/// Every physical constant used by the simulation. Defaults reproduce the reference
/// mechanics; all fields are overridable from a TOML file.
struct PhysicsConfig {
  double gravity = 650.0;

  // Car kinematic limits.
  double max_car_speed = 2300.0;
  double max_car_angular = 5.6;
  double max_dodge_angular = 7.3;

  // Longitudinal drive.
  double brake_decel = 3500.0;
  double coast_decel = 525.0;
  double boost_accel = 991.666;
  double boost_per_frame = 0.27;
  Curve throttle_curve{{{0.0, 1600.0}, {1400.0, 160.0}, {1410.0, 0.0}}};
  Curve steer_curvature{{{0.0, 0.0069},
                         {500.0, 0.00398},
                         {1000.0, 0.00235},
                         {1500.0, 0.001375},
                         {1750.0, 0.0011},
                         {2300.0, 0.00088}}};
  double lateral_grip = 40.0;        // 1/s
  double drift_grip_factor = 0.5;

  // Jump and dodge.
  double jump_impulse = 292.0;
  double jump_hold_accel = 1460.0;
  double jump_hold_max = 0.2;
  int jump_hold_min_frames = 3;
  double dodge_window = 1.25;
  double dodge_duration = 0.65;
  double dodge_damp_delay = 0.15;
  double dodge_damp_factor = 0.35;   // fraction of vertical velocity removed per frame
  double dodge_torque = 60.0;        // rad/s^2
  double dodge_speed_forward = 500.0;
  double dodge_speed_side = 500.0;
  double dodge_speed_backward = 533.0;
  double dodge_side_gain = 0.9;
  double dodge_backward_gain = 1.5;
  double dodge_min_horizontal_speed = 10.0;

  // Air control.
  double air_throttle_fwd = 66.667;
  double air_throttle_rev = 33.334;
  Vec3 air_torque{36.07, 12.46, 9.11};        // roll, pitch, yaw; rad/s^2
  Vec3 air_damping{-4.75, -2.85, -1.886};     // roll, pitch, yaw; 1/s

  // Stabilization and friction.
  double downforce = 325.0;
  double sticky_accel = 500.0;
  double stab_torque = 50.0;
  double stab_gain = 100.0;          // rad/s^2 per unit of misalignment
  double stab_damping = 10.0;        // 1/s
  double stab_margin = 20.0;         // uu; surface proximity for 0-wheel stabilization
  double drag = -525.0;
  double roof_drag = -250.0;
  double hitbox_friction = 0.35;

  SuspensionAxle suspension_front{163.9, 30.0, 3.0, 12.0};
  SuspensionAxle suspension_back{275.4, 30.0, 3.0, 12.0};

  // Ball.
  double ball_radius = 93.15;
  double ball_bounce_radius = 91.25;
  double bounce_restitution = 0.6;
  double bounce_friction = 0.285;
  double bounce_slip_gain = 2.0;
  double bounce_spin = -2.5;         // spin response to the tangential velocity change
  double ball_rest_speed = 20.0;     // normal speeds below this settle instead of bouncing
  double ball_drag = -0.0305;        // 1/s
  double ball_max_speed = 6000.0;
  double ball_max_angular = 6.0;
  double psyonix_z_scale = 0.35;
  Curve psyonix_scale_table{{{0.0, 0.65}, {500.0, 0.65}, {2300.0, 0.55}, {4600.0, 0.30}}};
  double psyonix_max_rel_speed = 4600.0;
  double car_ball_friction = 2.0;

  double car_mass = 180.0;
  double ball_mass = 30.0;

  HitboxSpec hitbox;
  std::array<WheelSpec, 4> wheels{{
      {{51.25, 25.9, -4.5}, 12.5, true},
      {{51.25, -25.9, -4.5}, 12.5, true},
      {{-33.8, 29.5, -1.923}, 15.0, false},
      {{-33.8, -29.5, -1.923}, 15.0, false},
  }};

  ArenaSpec arena;

  bool operator==(const PhysicsConfig&) const = default;

  const SuspensionAxle& axle(const WheelSpec& w) const {
    return w.front ? suspension_front : suspension_back;
  }
};

/// Closed interval used by samplers.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Range&) const = default;
};

/// Throws ConfigError listing the first violated invariant.
void validate(const PhysicsConfig& cfg);

}  // namespace rlsim
