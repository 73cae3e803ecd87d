// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rlsim/world.hpp"

namespace rlsim {

/// Input held from `start_frame` until the next entry starts.
struct ScheduleEntry {
  int start_frame = 0;
  ControllerInput input;
};

struct ManeuverScript {
  std::string name;
  std::string family;
  WorldState initial;
  std::vector<ScheduleEntry> schedule;  // strictly increasing start frames
  int duration_frames = 10 * kTickRate;
};

/// Six families (acceleration, air_control, drift, jump, ball_bounce, shot), three each.
std::vector<ManeuverScript> builtin_scripts(const PhysicsConfig& cfg);

/// Input in effect at `frame`.
ControllerInput input_at(const ManeuverScript& script, int frame);

struct TraceFrame {
  std::int64_t frame = 0;
  double t = 0.0;
  Vec3 car_position;
  Rotation car_rotation;
  Vec3 car_velocity;
  Vec3 car_angular_velocity;
  Vec3 ball_position;
  Vec3 ball_velocity;
  Vec3 ball_angular_velocity;
  double boost = 0.0;
  int contacts = 0;  // bit i set when wheel i touches a surface
  bool operator==(const TraceFrame&) const = default;
};

struct Trace {
  std::string name;
  std::vector<TraceFrame> frames;
};

TraceFrame trace_frame(const WorldState& world);

struct ScriptRun {
  Trace trace;                               // partial when a fault occurred
  std::optional<std::int64_t> fault_frame;   // frame at which physics faulted
  std::string fault;
};

/// Records the initial state (frame 0) and every stepped frame up to duration_frames.
ScriptRun run_script(const ManeuverScript& script, const PhysicsConfig& cfg);

inline constexpr const char* kTraceHeader =
    "frame,t,cpx,cpy,cpz,cqw,cqx,cqy,cqz,cvx,cvy,cvz,cwx,cwy,cwz,bpx,bpy,bpz,bvx,bvy,bvz,bwx,bwy,"
    "bwz,boost,contacts";

void write_trace_csv(const Trace& trace, const std::filesystem::path& path);
std::string trace_csv(const Trace& trace);
Trace read_trace_csv(const std::filesystem::path& path);

/// Interpolates onto `timeline` (seconds): linear for vectors and boost, slerp for the
/// rotation, contacts from the earlier neighbour. Throws std::out_of_range outside the span.
Trace resample_trace(const Trace& trace, const std::vector<double>& timeline);

struct Stats {
  double mean = 0.0;
  double std = 0.0;  // population
  double max = 0.0;
};

struct BodyError {
  Stats x, y, z, euclidean;
};

struct ErrorStats {
  BodyError car;
  BodyError ball;
  int frames = 0;
};

/// Resamples `b` onto the part of a's timeline inside b's span and summarizes the absolute
/// position errors. Throws std::invalid_argument when the spans do not overlap.
ErrorStats error_stats(const Trace& a, const Trace& b);

}  // namespace rlsim
