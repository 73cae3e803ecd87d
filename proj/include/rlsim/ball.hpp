// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rlsim/arena.hpp"
#include "rlsim/car.hpp"
#include "rlsim/config.hpp"
#include "rlsim/math.hpp"

namespace rlsim {

struct BallState {
  Vec3 position;
  Vec3 velocity;
  Vec3 angular_velocity;
  bool operator==(const BallState&) const = default;
};

struct BounceModel {
  double restitution;
  double friction;
  double slip_gain;
  double bounce_radius;
  double spin;  // angular response per unit tangential velocity change
};

BounceModel bounce_model(const PhysicsConfig& cfg);

/// Whether the ball rests on the floor: exactly one radius above it with no vertical motion.
bool ball_supported(const BallState& ball, const PhysicsConfig& cfg);

/// Gravity (unless supported), linear drag, integration and clamps.
BallState ball_free_step(const BallState& ball, const PhysicsConfig& cfg, double dt = kDt);

BallState clamp_ball(const BallState& ball, const PhysicsConfig& cfg);

struct BounceResult {
  Vec3 velocity;
  Vec3 angular_velocity;
};
/// Surface bounce against unit normal n. Identity when the ball is not approaching.
BounceResult bounce(const Vec3& v, const Vec3& omega, const Vec3& n, const BounceModel& m);

/// Resolves arena contacts of a ball: slow impacts settle, faster ones bounce; the ball is
/// pushed out along each contact normal.
BallState resolve_ball_arena(const BallState& ball, const ArenaGeometry& arena,
                             const PhysicsConfig& cfg);

struct CarBallImpulse {
  bool contact = false;
  Vec3 normal;         // from the hitbox toward the ball center
  double penetration = 0.0;
  Vec3 dv_car;
  Vec3 dv_ball;
  Vec3 dw_ball;
  Vec3 dp_car;         // de-penetration displacement
  Vec3 dp_ball;
};

/// Closest point of the car hitbox to p.
Vec3 hitbox_closest_point(const CarState& car, const Vec3& p, const PhysicsConfig& cfg);

/// Rigid zero-restitution impulse between hitbox and ball, split by the mass ratio.
CarBallImpulse car_ball_impulse(const CarState& car, const BallState& ball,
                                const PhysicsConfig& cfg);

/// Extra ball velocity change applied at the ball center on the first frame of a touch.
Vec3 psyonix_impulse(const CarState& car, const BallState& ball, const PhysicsConfig& cfg);

}  // namespace rlsim
