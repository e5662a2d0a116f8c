#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pace/cli/toml.hpp"
#include "pace/pool/peer_pool.hpp"
#include "pace/pp/predator_prey.hpp"
#include "pace/train/model.hpp"
#include "pace/train/trainer.hpp"

namespace pace::cli {

struct EvalConfig {
  std::size_t episodes = 100;  // N_eps at test time
  std::size_t window = 10;
  std::optional<double> change_threshold;
  std::optional<std::size_t> switch_at;
  std::size_t switch_to = 0;  // index into the test tuples
  bool greedy = false;
};

// Everything a run needs. Sections: [experiment], [pool], [ppo], [train],
// [reward], [model], [eval], [world] and [world.paths.<name>].
struct ExperimentConfig {
  pool::EnvKind env = pool::EnvKind::Kuhn;
  std::string preset = "pace";
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::filesystem::path output_dir;  // empty: $PACE_OUTPUT_ROOT or ./runs

  std::filesystem::path pool_file;  // empty: generate from the fields below
  std::size_t pool_train = 40;
  std::size_t pool_test = 10;
  std::uint64_t pool_seed = 7;

  train::TrainConfig train;
  std::vector<std::size_t> f_hidden, g_hidden, actor_hidden, critic_hidden;
  std::size_t embedding_width = 0;

  EvalConfig eval;
  pp::WorldConfig world;

  static ExperimentConfig defaults(pool::EnvKind env);

  // Model architecture for a pool's slot layout.
  [[nodiscard]] train::ModelSpec model_spec(const std::vector<std::size_t>& slots) const;
  // Train config for one seed with the preset applied.
  [[nodiscard]] train::TrainConfig train_config(std::uint64_t seed) const;

  // Fully resolved config; parse_experiment(to_toml()) reproduces this value.
  [[nodiscard]] std::string to_toml() const;
  void validate() const;
};

// Starts from the defaults of the env named in [experiment] and applies every
// key. Unknown sections or keys are errors. Relative pool paths resolve
// against base_dir; referenced files must exist.
ExperimentConfig parse_experiment(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment(const std::filesystem::path& path);

// $PACE_OUTPUT_ROOT when set, otherwise "runs".
std::filesystem::path default_output_root();

}  // namespace pace::cli
