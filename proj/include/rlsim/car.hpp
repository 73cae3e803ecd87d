// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "rlsim/arena.hpp"
#include "rlsim/config.hpp"
#include "rlsim/math.hpp"

namespace rlsim {

/// Raw controller state for one frame. Discretized agents only produce the bucket
/// values; maneuver scripts may use any value in [-1, 1].
struct ControllerInput {
  double throttle = 0.0;
  double steer = 0.0;
  double yaw = 0.0;
  double pitch = 0.0;
  double roll = 0.0;
  bool boost = false;
  bool drift_or_airroll = false;  // drift on wheels, air roll in the air
  bool jump = false;
  bool operator==(const ControllerInput&) const = default;
};

struct WheelState {
  Vec3 local_position;          // hub at rest, car-local
  double radius = 0.0;
  double compression = 0.0;     // >0 compression zone, <0 extension zone
  double compression_rate = 0.0;
  bool in_contact = false;
  Vec3 contact_normal{0, 0, 1};
  SurfaceClass surface = SurfaceClass::ground;
  double overshoot = 0.0;       // travel past max_compress, resolved as a rigid contact
  bool operator==(const WheelState&) const = default;
};

enum class JumpPhase {
  grounded,
  first_jump_hold,
  airborne_window,
  dodge_active,
  second_jump_done,
  exhausted,
};

/// Jump and dodge state machine. Clocks are kept as frame counts so they never drift.
struct JumpDodgeState {
  JumpPhase phase = JumpPhase::grounded;
  int hold_frames = 0;
  int window_frames = 0;
  int dodge_frames = 0;
  Vec3 dodge_direction;  // horizontal input direction at dodge start
  Vec3 dodge_axis;       // world-frame rotation axis of the dodge torque
  bool jump_was_held = false;

  double window_clock() const { return window_frames * kDt; }
  double dodge_clock() const { return dodge_frames * kDt; }
  bool operator==(const JumpDodgeState&) const = default;
};

struct CarState {
  Vec3 position;
  Rotation rotation;
  Vec3 velocity;
  Vec3 angular_velocity;
  double boost_tank = 100.0;
  std::array<WheelState, 4> wheels;
  JumpDodgeState jump;
  bool roof_contact = false;  // hitbox resting on a surface with the car upside down
  bool operator==(const CarState&) const = default;

  bool dodging() const { return jump.phase == JumpPhase::dodge_active; }
  int wheels_in_contact() const;
  /// Wheels touching with non-negative compression (used for landing).
  int wheels_loaded() const;
};

/// Car at rest pose with wheels initialized from the config layout (not yet sensed).
CarState make_car(const PhysicsConfig& cfg, const Vec3& position, const Rotation& rotation);

/// Signed longitudinal acceleration along car forward. Coasting and braking never push
/// the forward speed across zero within one frame.
double longitudinal_accel(double v_forward, double throttle, const PhysicsConfig& cfg,
                          double dt = kDt);

struct BoostStep {
  CarState car;
  double extra_accel = 0.0;  // along car forward
  bool active = false;       // throttle is forced to 1 while active
};
BoostStep boost_step(const CarState& car, const ControllerInput& input, const PhysicsConfig& cfg);

enum class PadKind { small, big };
CarState refill_boost(const CarState& car, PadKind pad);

/// Yaw rate for a forward speed magnitude and steer input.
double steer_yaw_rate(double speed, double steer, const PhysicsConfig& cfg);

/// Acceleration along the car's right axis that damps sideways slip.
Vec3 lateral_friction(const CarState& car, const ControllerInput& input, const PhysicsConfig& cfg,
                      double dt = kDt);

/// Rolling drag coefficient along the direction of motion (negative), 0 when stationary
/// or not on a surface.
double coast_drag(const CarState& car, const PhysicsConfig& cfg);

struct JumpStep {
  CarState car;
  Vec3 impulse;       // instantaneous velocity change
  Vec3 accel;         // hold acceleration for this frame
  bool jumped = false;
  bool second_jump = false;
  bool dodge_started = false;
};
JumpStep jump_state_step(const CarState& car, const ControllerInput& input,
                         const PhysicsConfig& cfg);

struct DodgeContext {
  Vec3 d_m;   // horizontal movement direction
  Vec3 d_i;   // horizontal input direction
  double cos_phi = 1.0;
  Vec3 d_cf;  // car horizontal forward
  Vec3 d_cs;  // car horizontal right
  double v_forward = 0.0;
  double v_df = 0.0;
  double v_ds = 0.0;
  double v_db = 0.0;
  bool stationary = false;  // horizontal speed below the threshold; d_m was set to d_i
};

/// Local input direction (forward, right) of a dodge; zero when there is no rotation input.
std::pair<double, double> dodge_input_local(const ControllerInput& input);

/// Builds the dodge context from the car state and stick input. Throws
/// std::invalid_argument when the input has no direction.
DodgeContext make_dodge_context(const CarState& car, const ControllerInput& input,
                                const PhysicsConfig& cfg);

/// Horizontal velocity change of a dodge.
Vec3 dodge_impulse(const DodgeContext& ctx);

/// Advances an active dodge by one frame: vertical damping, dodge torque, expiry.
CarState dodge_tick(const CarState& car, const PhysicsConfig& cfg, double dt = kDt);

/// Body-frame angular acceleration (roll, pitch, yaw). Body rates are positive for roll
/// right, pitch up and yaw right.
Vec3 air_control(const ControllerInput& input, const Vec3& omega_body, const PhysicsConfig& cfg);

/// World angular velocity expressed as (roll, pitch, yaw) body rates, and back.
Vec3 body_rates(const Rotation& r, const Vec3& omega_world);
Vec3 world_from_body_rates(const Rotation& r, const Vec3& body);

struct Stabilization {
  Vec3 force;   // acceleration, uu/s^2
  Vec3 torque;  // angular acceleration, rad/s^2
};
/// Ground and wall stabilization. `nearby` is the closest surface within the margin of the
/// hitbox, consulted when no wheel touches.
Stabilization stabilization(const CarState& car, const std::optional<SurfaceContact>& nearby,
                            const ControllerInput& input, const PhysicsConfig& cfg);

/// Spring-damper acceleration along car up for one wheel.
double suspension_step(const WheelState& wheel, const SuspensionAxle& axle);

/// Diagonal inertia of the hitbox box at the configured car mass.
Vec3 car_inertia(const PhysicsConfig& cfg);

}  // namespace rlsim
