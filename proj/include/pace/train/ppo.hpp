#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pace/core/rng.hpp"
#include "pace/pace/encoder.hpp"
#include "pace/pool/peer_pool.hpp"
#include "pace/train/model.hpp"

namespace pace::train {

struct PPOConfig {
  double learning_rate = 2e-4;
  double clip_epsilon = 0.2;
  double entropy_coef = 5e-4;
  double gamma = 0.99;
  double gae_lambda = 0.95;
  std::size_t batch_size = 80000;
  std::size_t epochs = 15;
  std::size_t minibatches = 12;
  double max_grad_norm = 2.0;
  double value_coef = 0.5;
  double aux_weight = 1.0;
  bool normalize_advantages = true;

  void validate() const;
};

// Kuhn poker and Predator-Prey-W defaults.
PPOConfig ppo_defaults(pool::EnvKind env);

class NonFiniteLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transitions stored environment-major: environment e owns
// [e * steps_per_env, (e + 1) * steps_per_env). Each chunk covers a contiguous
// run of one environment inside one meta-episode.
struct RolloutBatch {
  std::size_t obs_width = 0;
  std::size_t envs = 0;
  std::size_t steps_per_env = 0;

  std::vector<double> obs;
  std::vector<int> actions;
  std::vector<double> old_log_probs;
  std::vector<double> values;
  std::vector<double> rewards;  // mixed
  std::vector<double> task_rewards;
  std::vector<double> exploration_rewards;
  std::vector<std::uint8_t> episode_end;
  std::vector<std::uint8_t> meta_end;

  std::vector<pace_core::ContextChunk> chunks;
  std::vector<std::size_t> chunk_start;  // first transition of each chunk

  std::vector<std::vector<std::size_t>> truth;  // identifier targets per environment
  std::vector<double> bootstrap;                // V of the state after each environment's last step

  std::vector<double> advantages;
  std::vector<double> returns;

  std::vector<double> episode_returns;  // task returns of episodes finished in this batch
  double reward_coefficient = 0.0;      // c at the start of the batch

  [[nodiscard]] std::size_t size() const noexcept { return actions.size(); }
  [[nodiscard]] std::size_t env_of(std::size_t t) const noexcept { return t / steps_per_env; }
  void resize(std::size_t envs, std::size_t steps_per_env, std::size_t obs_width);
};

// GAE per environment, then optional normalization of the advantages.
void compute_advantages(RolloutBatch& batch, const PPOConfig& config);

enum class UpdateMode { Full, AuxOnly };

struct LossReport {
  double total = 0.0;
  double surrogate = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double aux_loss = 0.0;
  double aux_accuracy = 0.0;
  double approx_kl = 0.0;
  double clip_fraction = 0.0;
  std::size_t transitions = 0;
};

// Loss of the given chunks: clipped surrogate + value_coef * MSE
// - entropy_coef * entropy + aux_weight * L_aux, each a mean over transitions.
// AuxOnly keeps just the auxiliary term. Gradients are added into grads when
// it is non-null. Throws NonFiniteLoss.
LossReport ppo_loss(const PaceModel& model, const RolloutBatch& batch, std::span<const std::size_t> chunk_ids,
                    const PPOConfig& config, UpdateMode mode, nn::Gradients* grads);

struct UpdateReport {
  LossReport mean;  // averaged over every minibatch of every epoch
  double grad_norm = 0.0;
  std::size_t steps = 0;
};

// Splits the shuffled chunks into minibatches of similar transition counts.
std::vector<std::vector<std::size_t>> make_minibatches(const RolloutBatch& batch, std::size_t count,
                                                       core::RngStream& rng);

UpdateReport ppo_update(PaceModel& model, const RolloutBatch& batch, const PPOConfig& config, UpdateMode mode,
                        core::RngStream& rng);

}  // namespace pace::train
