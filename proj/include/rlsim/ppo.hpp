// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlsim/env.hpp"
#include "rlsim/nn.hpp"
#include "rlsim/rng.hpp"

namespace rlsim {

struct PpoConfig {
  double gamma = 0.99;
  double lambda = 0.95;
  int workers = 16;
  int worker_steps = 512;
  int epochs = 3;
  int mini_batches = 8;
  double max_grad_norm = 0.5;
  double clip = 0.2;
  double c1 = 0.25;
  double lr_start = 3e-4;
  double lr_end = 3e-6;
  double c2_start = 5e-4;
  double c2_end = 1e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  double weight_decay = 1e-4;
  std::int64_t total_steps = 10'000'000;
  std::int64_t checkpoint_every = 500'000;
  bool parallel = true;  // collect rollouts on one thread per worker
  NetShape net;

  int batch() const { return workers * worker_steps; }
};

/// Throws ConfigError on an inconsistent configuration.
void validate(const PpoConfig& cfg);

/// start + (end - start) * clamp(progress, 0, 1).
double linear_schedule(double start, double end, double progress);

struct Gae {
  std::vector<double> advantages;
  std::vector<double> returns;
};

/// One worker segment. dones[t] marks a terminal transition; `bootstrap` is V of the state
/// after the last step and is ignored when that step was terminal.
Gae compute_gae(const std::vector<double>& rewards, const std::vector<double>& values,
                const std::vector<std::uint8_t>& dones, double bootstrap, double gamma,
                double lambda);

/// Clipped surrogate objective for one sample (to be maximized).
double policy_objective(double ratio, double advantage, double clip);
/// Clipped value error for one sample (to be minimized).
double value_loss(double v_new, double v_old, double ret, double clip);

/// Mean 0, population std 1 (std + 1e-8 in the denominator).
template <class T>
void normalize_advantages(std::vector<T>& adv);

/// Sign convention: total = -(policy - c1 * value + c2 * entropy), minimized.
struct LossBreakdown {
  double policy = 0.0;
  double value = 0.0;
  double entropy = 0.0;
  double total = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
};

struct LossCoefficients {
  double clip = 0.2;
  double c1 = 0.25;
  double c2 = 5e-4;
};

template <class T>
struct MiniBatch {
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> obs;  // kObservationSize x M
  std::vector<ActionTuple> actions;
  std::vector<T> logp_old;
  std::vector<T> value_old;
  std::vector<T> advantages;  // raw; normalized inside ppo_loss
  std::vector<T> returns;
};

/// Loss over a mini-batch; fills `grad` with dtotal/dparams when non-null.
template <class T>
LossBreakdown ppo_loss(const PolicyValueNet<T>& net, const MiniBatch<T>& mb,
                       const LossCoefficients& k, PolicyValueNet<T>* grad);

/// Scales the gradient to at most `max_norm` in global L2 norm; returns the norm before.
template <class T>
double clip_grad_norm(PolicyValueNet<T>& grad, double max_norm);

/// Adam with decoupled weight decay.
class AdamW {
 public:
  AdamW(const NetShape& shape, double beta1, double beta2, double eps, double weight_decay);
  void step(PolicyValueNet<float>& net, PolicyValueNet<float>& grad, double lr);

  std::int64_t steps() const { return t_; }
  void set_steps(std::int64_t t) { t_ = t; }
  PolicyValueNet<float>& m() { return m_; }
  PolicyValueNet<float>& v() { return v_; }

 private:
  double beta1_, beta2_, eps_, weight_decay_;
  std::int64_t t_ = 0;
  PolicyValueNet<float> m_;
  PolicyValueNet<float> v_;
};

struct RolloutBuffer {
  int workers = 0;
  int steps = 0;
  // index = worker * steps + t
  std::vector<Observation> obs;
  std::vector<ActionTuple> actions;
  std::vector<float> logp;
  std::vector<float> values;
  std::vector<float> rewards;
  std::vector<std::uint8_t> dones;
  std::vector<float> bootstrap;  // per worker
  std::vector<double> advantages;
  std::vector<double> returns;
  // episode statistics over episodes that ended inside this rollout
  int episodes = 0;
  double episode_reward_sum = 0.0;

  std::size_t size() const { return obs.size(); }
  bool operator==(const RolloutBuffer&) const = default;
};

class TrainingFault : public std::runtime_error {
 public:
  TrainingFault(int mini_batch, const std::string& what)
      : std::runtime_error(what), mini_batch_(mini_batch) {}
  int mini_batch() const { return mini_batch_; }

 private:
  int mini_batch_;
};

/// One environment plus its private RNG stream; persists across rollouts.
struct Worker {
  Worker(const PhysicsConfig& physics, const EnvConfig& env, const ShotSet* shots,
         std::uint64_t seed);
  void reset_episode();

  Env env;
  Rng rng;
  const ShotSet* shots;
  Observation obs{};
  double episode_reward = 0.0;
};

/// Steps every worker `steps` times with actions sampled from `net`. Worker w only touches
/// its own env and RNG, so sequential and parallel collection give identical buffers.
RolloutBuffer collect_rollouts(const PolicyValueNet<float>& net, std::vector<Worker>& workers,
                               int steps, bool parallel);

/// Fills advantages and returns of every worker segment.
void finish_rollouts(RolloutBuffer& buffer, double gamma, double lambda);

struct UpdateStats {
  int update = 0;
  std::int64_t env_steps = 0;
  double lr = 0.0;
  double c2 = 0.0;
  LossBreakdown loss;  // averaged over mini-batches
  double grad_norm = 0.0;
  int episodes = 0;
  double mean_episode_reward = 0.0;
};

class Trainer {
 public:
  Trainer(const PhysicsConfig& physics, const EnvConfig& env, const PpoConfig& ppo,
          ShotSet training, std::uint64_t seed);
  Trainer(const Trainer&) = delete;  // workers point into training_
  Trainer& operator=(const Trainer&) = delete;

  /// Collect one batch and run the epochs of mini-batch updates.
  UpdateStats update();

  bool finished() const { return env_steps_ >= ppo_.total_steps; }
  std::int64_t env_steps() const { return env_steps_; }
  int updates() const { return updates_; }
  const PolicyValueNet<float>& net() const { return net_; }
  const PpoConfig& config() const { return ppo_; }

  /// Writes `<path>` (JSON manifest) and `<path minus .json>.bin` (float32 LE blob).
  void save_checkpoint(const std::filesystem::path& manifest) const;
  /// Restores parameters, optimizer moments, schedule position and RNG streams. Episodes in
  /// flight at save time are not stored; every worker starts a fresh episode.
  void restore_checkpoint(const std::filesystem::path& manifest);

 private:
  PhysicsConfig physics_;
  EnvConfig env_;
  PpoConfig ppo_;
  ShotSet training_;
  std::uint64_t seed_;
  PolicyValueNet<float> net_;
  PolicyValueNet<float> grad_;
  AdamW adam_;
  Rng shuffle_rng_;
  std::vector<Worker> workers_;
  std::int64_t env_steps_ = 0;
  int updates_ = 0;
};

struct Checkpoint {
  PolicyValueNet<float> net;
  std::int64_t env_steps = 0;
  int update = 0;
  std::uint64_t seed = 0;
  std::string env_kind;
};

Checkpoint load_checkpoint(const std::filesystem::path& manifest);

struct IqmCi {
  double iqm = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Mean of the middle half after dropping floor(n/4) samples from each tail.
double iqm(std::vector<double> samples);
/// IQM with a percentile-bootstrap 95% interval. Throws std::invalid_argument for n < 4.
IqmCi iqm_ci(const std::vector<double>& samples, std::uint64_t seed, int resamples = 1000);

struct EpisodeResult {
  double reward = 0.0;
  Outcome outcome = Outcome::none;
  int frames = 0;
};

/// Greedy (argmax per head) episodes, each shot repeated `repeats` times.
std::vector<EpisodeResult> run_greedy_episodes(const PolicyValueNet<float>& net,
                                               const PhysicsConfig& physics, const EnvConfig& env,
                                               const std::vector<ShotSample>& shots, int repeats);

struct CategoryReport {
  std::string category;  // "training" or "novel"
  std::vector<double> rewards;
  IqmCi stats;
};

struct EvalReport {
  int runs = 0;
  int shots = 0;
  int repeats = 0;
  std::vector<CategoryReport> categories;
};

/// First `shots` samples of each set, `repeats` greedy episodes each, pooled over runs.
EvalReport evaluate(const std::vector<const PolicyValueNet<float>*>& runs,
                    const PhysicsConfig& physics, const EnvConfig& env, const ShotSet& training,
                    const ShotSet& novel, int shots = 10, int repeats = 3,
                    std::uint64_t bootstrap_seed = 0);

}  // namespace rlsim
