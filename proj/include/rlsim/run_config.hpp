// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rlsim/config_io.hpp"
#include "rlsim/env.hpp"
#include "rlsim/ppo.hpp"

namespace rlsim {

struct TrainSettings {
  std::uint64_t seed = 0;
  std::uint64_t training_shot_seed = 1;  // the 1000 shots seen during training
  std::uint64_t novel_shot_seed = 2;     // held-out shots for evaluation
  int eval_shots = 10;
  int eval_repeats = 3;
  std::uint64_t bootstrap_seed = 0;
};

/// Everything a command needs, loaded from one TOML file with sections
/// [physics], [env], [ppo] and [train].
struct RunConfig {
  PhysicsConfig physics;
  EnvConfig env;
  ShotRanges ranges;
  PpoConfig ppo;
  TrainSettings train;
  std::string env_kind = "goalie";
};

/// Field registry for all sections. The returned tables point into `cfg`.
std::vector<FieldTable> run_fields(RunConfig& cfg);

/// Defaults, then `path` (when non-empty), then each "section.key=value" override;
/// validates the result. Throws ConfigError.
RunConfig load_run_config(const std::filesystem::path& path,
                          const std::vector<std::string>& overrides);

/// Source revision baked in at configure time ("unknown" outside a git checkout).
const char* build_id();

/// Effective configuration as TOML.
std::string dump_run_config(RunConfig cfg);

}  // namespace rlsim
