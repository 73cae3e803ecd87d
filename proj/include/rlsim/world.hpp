// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rlsim/arena.hpp"
#include "rlsim/ball.hpp"
#include "rlsim/car.hpp"
#include "rlsim/config.hpp"

namespace rlsim {

/// Per-frame bookkeeping written by step().
struct WorldFlags {
  bool ball_touched = false;      // car has touched the ball since the last reset
  bool car_ball_contact = false;  // contact during the latest frame
  bool goal_neg_y = false;        // ball center entered the goal behind y = -half_extent_y
  bool goal_pos_y = false;
  bool operator==(const WorldFlags&) const = default;
};

struct WorldState {
  CarState car;
  BallState ball;
  std::int64_t frame = 0;
  WorldFlags flags;

  double time() const { return static_cast<double>(frame) / kTickRate; }
  bool operator==(const WorldState&) const = default;
};

/// Non-finite state or an escaped body. Carries the frame at which it happened.
class PhysicsFault : public std::runtime_error {
 public:
  PhysicsFault(std::int64_t frame, const std::string& what)
      : std::runtime_error("physics fault at frame " + std::to_string(frame) + ": " + what),
        frame_(frame) {}
  std::int64_t frame() const { return frame_; }

 private:
  std::int64_t frame_;
};

/// Advances the world by one 1/120 s frame.
WorldState step(const WorldState& world, const ControllerInput& input, const PhysicsConfig& cfg);

/// Caps linear and angular speed, preserving direction.
CarState clamp_kinematics(const CarState& car, const PhysicsConfig& cfg, bool dodging);

/// Casts each wheel ray against the arena and fills the wheel states.
void sense_wheels(CarState& car, const ArenaGeometry& arena, const PhysicsConfig& cfg);

/// Deepest arena surface within `margin` of the car hitbox, if any.
std::optional<SurfaceContact> nearby_surface(const CarState& car, const ArenaGeometry& arena,
                                             const PhysicsConfig& cfg, double margin);

/// Car-origin height at which the car rests level on the floor at static equilibrium.
double resting_height(const PhysicsConfig& cfg);

/// Car standing on its wheels at (x, y) facing yaw, settled onto the floor.
CarState car_on_ground(const PhysicsConfig& cfg, double x, double y, double yaw,
                       double boost = 100.0);

/// Shared, immutable geometry for an arena spec (cached per thread).
const ArenaGeometry& arena_geometry(const ArenaSpec& spec);

}  // namespace rlsim
