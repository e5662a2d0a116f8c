#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pace/core/game.hpp"
#include "pace/pace/context.hpp"
#include "pace/pace/identifier.hpp"
#include "pace/pool/peer_pool.hpp"
#include "pace/train/envs.hpp"
#include "pace/train/model.hpp"
#include "pace/train/ppo.hpp"

namespace pace::train {

struct TrainConfig {
  PPOConfig ppo;
  std::size_t total_steps = 5'000'000;  // environment steps, warm-up included
  std::size_t warmup_steps = 100'000;   // M_w
  pace_core::RewardSchedule schedule{0.01, 4e6};
  std::size_t context_episodes = 100;   // N_eps used for training
  std::uint64_t seed = 0;
  std::size_t checkpoint_interval = 0;  // environment steps; 0 keeps only latest and final

  static TrainConfig defaults(pool::EnvKind env);
  void validate() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

enum class Preset { Pace, PaceReward, PaceRewardAux };
Preset preset_from_string(std::string_view s);
std::string_view to_string(Preset p);
// pace-reward: c_init = 0. pace-reward-aux: c_init = 0 and aux weight 0.
void apply_preset(TrainConfig& config, Preset preset);

struct DiagnosticsRow {
  std::uint64_t global_step = 0;
  double mean_task_return = 0.0;  // NaN when no episode finished in the batch
  double mean_exploration_reward = 0.0;
  double c = 0.0;
  double aux_loss = 0.0;
  double aux_accuracy = 0.0;
  double entropy = 0.0;
  double value_loss = 0.0;
};

void write_diagnostics_header(std::ostream& out);
void write_diagnostics_row(std::ostream& out, const DiagnosticsRow& row);

// One environment and one context per training tuple.
class Trainer {
 public:
  Trainer(TrainConfig config, const pool::PoolSpec& pool, EnvFactory factory, PaceModel model);

  // Round-robin sweeps over every tuple until `transitions` steps are stored
  // (rounded up to whole sweeps). Advances the global step counter.
  RolloutBatch collect(std::size_t transitions);

  // One collect + update. Warm-up batches train the auxiliary loss only.
  DiagnosticsRow iterate();
  [[nodiscard]] bool finished() const noexcept { return global_step_ >= config_.total_steps; }
  [[nodiscard]] bool warming_up() const noexcept;

  using RowCallback = std::function<void(const DiagnosticsRow&)>;
  // Runs to total_steps. Writes diagnostics.csv and checkpoints
  // (latest after every update, step_<n> every checkpoint_interval, final)
  // under out_dir when it is non-empty.
  void run(const std::filesystem::path& out_dir, const RowCallback& on_row = {});

  void save(const std::filesystem::path& stem, bool with_optimizer) const;

  [[nodiscard]] const TrainConfig& config() const noexcept { return config_; }
  [[nodiscard]] PaceModel& model() noexcept { return model_; }
  [[nodiscard]] const PaceModel& model() const noexcept { return model_; }
  [[nodiscard]] std::uint64_t global_step() const noexcept { return global_step_; }
  [[nodiscard]] std::size_t env_count() const noexcept { return slots_.size(); }
  [[nodiscard]] const pace_core::Context& context(std::size_t e) const { return slots_.at(e).ctx; }

 private:
  struct Slot {
    std::unique_ptr<core::Environment> env;
    pace_core::Context ctx;
    core::Observation obs;
    core::RngStream rng;
    std::vector<std::size_t> truth;
    double episode_return = 0.0;
  };

  TrainConfig config_;
  EnvFactory factory_;
  PaceModel model_;
  std::vector<Slot> slots_;
  std::uint64_t global_step_ = 0;
  std::uint64_t updates_ = 0;
  core::RngStream update_rng_;
};

// Fresh model and trainer for a pool with the given config.
Trainer make_trainer(const TrainConfig& config, const pool::PoolSpec& pool, std::shared_ptr<const pp::WorldConfig> world);

}  // namespace pace::train
