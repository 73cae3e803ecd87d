// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlsim/config.hpp"
#include "rlsim/world.hpp"

namespace rlsim {

enum class EnvKind { goalie, striker };

const char* to_string(EnvKind kind);
EnvKind env_kind_from_string(const std::string& name);

struct ShotSample {
  Vec3 ball_position;
  Vec3 ball_velocity;
  Vec3 ball_angular_velocity;
  Vec3 car_position;
  double car_yaw = 0.0;
  double car_boost = 100.0;
  bool operator==(const ShotSample&) const = default;
};

/// Sampling ranges for shot sets. Goalie origins are relative to mid-field; the shot is
/// aimed at a uniform point of the defended (negative-y) goal mouth. Striker balls start
/// near the attacked (positive-y) goal and roll parallel to the goal line.
struct ShotRanges {
  Range goalie_x{-2500.0, 2500.0};
  Range goalie_y{-1000.0, 2500.0};
  Range goalie_z{100.0, 800.0};
  Range goalie_speed{1000.0, 2300.0};

  Range striker_ball_x{-2500.0, 2500.0};
  Range striker_ball_goal_distance{200.0, 1500.0};  // from the goal line
  Range striker_ball_z{100.0, 600.0};
  Range striker_ball_speed{300.0, 900.0};
  Range striker_car_x{-1500.0, 1500.0};
  Range striker_car_goal_distance{2500.0, 4000.0};
  double striker_yaw_jitter = 30.0 * kPi / 180.0;
  double striker_boost = 100.0;
  double goalie_boost = 100.0;
};

void validate(const ShotRanges& ranges);

struct ShotSet {
  std::vector<ShotSample> samples;
  std::uint64_t seed = 0;
  EnvKind kind = EnvKind::goalie;
};

inline constexpr int kShotSetSize = 1000;
inline constexpr int kShotHorizonFrames = 1200;   // goalie shots must score within this
inline constexpr double kShotClearance = 5.0;     // extra margin past posts and crossbar

/// Raised when a goalie sampler rejects more than 99% of its draws.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ShotSet sample_shot_set(std::uint64_t seed, EnvKind kind, const ShotRanges& ranges,
                        const PhysicsConfig& cfg, int n = kShotSetSize);

/// Ball-only projection: the frame (counted from now) at which the ball center enters the
/// negative-y goal, or -1 if it does not within `horizon_frames`. With clearance > 0 a
/// ball passing within radius + clearance of a post or the crossbar counts as a miss.
int project_goal_entry(const BallState& ball, const PhysicsConfig& cfg, int horizon_frames,
                       double clearance = 0.0);

/// One row per sample plus a `goal_bound` column: goalie rows re-check the ball-only
/// projection without margin, striker rows check the velocity is parallel to the goal line.
void write_shot_set_csv(const ShotSet& set, const PhysicsConfig& cfg,
                        const std::filesystem::path& path);
ShotSet read_shot_set_csv(const std::filesystem::path& path);

inline constexpr int kObservationSize = 23;
using Observation = std::array<float, kObservationSize>;

inline constexpr int kActionDims = 8;
inline constexpr std::array<int, kActionDims> kActionSizes{5, 5, 5, 5, 3, 2, 2, 2};
using ActionTuple = std::array<int, kActionDims>;

Observation encode_observation(const WorldState& world, const PhysicsConfig& cfg);

/// Throws std::out_of_range on an index outside its dimension.
ControllerInput decode_action(const ActionTuple& a);

enum class Outcome { none, goal, save, timeout };
const char* to_string(Outcome o);

struct StepResult {
  Observation observation{};
  float reward = 0.0f;
  bool terminated = false;
  Outcome outcome = Outcome::none;
};

struct EnvConfig {
  EnvKind kind = EnvKind::goalie;
  int max_frames = 1200;  // episode time limit, frames
  int action_repeat = 1;  // physics frames per env step
};

class Env {
 public:
  Env(const PhysicsConfig& physics, const EnvConfig& env);

  Observation reset(const ShotSample& sample);
  /// Throws std::logic_error when called on a terminated episode.
  StepResult step(const ActionTuple& action);

  const WorldState& world() const { return world_; }
  bool terminated() const { return terminated_; }
  int episode_frames() const { return static_cast<int>(world_.frame); }
  const EnvConfig& config() const { return env_; }
  const PhysicsConfig& physics() const { return physics_; }

 private:
  StepResult evaluate_frame();

  PhysicsConfig physics_;
  EnvConfig env_;
  WorldState world_;
  bool terminated_ = true;
  bool projection_scores_ = true;  // latest goalie projection after a touch
};

/// Goalie spawn: goal center on the goal line, facing the field.
CarState goalie_spawn(const PhysicsConfig& cfg, double boost);

}  // namespace rlsim
