#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "pace/nn/mlp.hpp"
#include "pace/pace/encoder.hpp"
#include "pace/pace/identifier.hpp"
#include "pace/pool/peer_pool.hpp"

namespace pace::train {

struct ModelSpec {
  pool::EnvKind env = pool::EnvKind::Kuhn;
  std::size_t obs_size = 0;
  std::size_t action_count = 0;
  pace_core::EncoderSpec encoder;  // input_width is filled from obs_size + action_count
  std::vector<std::size_t> actor_hidden{128, 128};
  std::vector<std::size_t> critic_hidden{128, 128};
  std::vector<std::size_t> slot_cardinalities;
  std::size_t context_episodes = 100;  // N_ctx the model was trained with
  double actor_output_gain = 0.01;

  [[nodiscard]] nlohmann::json to_json() const;
  static ModelSpec from_json(const nlohmann::json& j);
};

// Context encoder, actor, critic and identifier sharing one ParamStore. The
// actor and critic see the observation concatenated with z.
class PaceModel {
 public:
  PaceModel() = default;
  explicit PaceModel(ModelSpec spec);

  void initialize(core::RngStream& rng);

  [[nodiscard]] const ModelSpec& spec() const noexcept { return spec_; }
  nn::ParamStore& store() noexcept { return store_; }
  [[nodiscard]] const nn::ParamStore& store() const noexcept { return store_; }
  [[nodiscard]] const pace_core::ContextEncoder& encoder() const noexcept { return encoder_; }
  [[nodiscard]] const nn::Mlp& actor() const noexcept { return actor_; }
  [[nodiscard]] const nn::Mlp& critic() const noexcept { return critic_; }
  [[nodiscard]] const pace_core::Identifier& identifier() const noexcept { return identifier_; }

  // Mask selecting the identifier and encoder tensors (warm-up).
  [[nodiscard]] std::vector<bool> encoder_and_identifier_mask() const;

  // Rows of [obs | z].
  [[nodiscard]] nn::Tensor policy_input(const nn::Tensor& obs, const nn::Tensor& z) const;

  void save(const std::filesystem::path& stem, bool with_optimizer, const nlohmann::json& extra = {}) const;
  static PaceModel load(const std::filesystem::path& stem);

 private:
  void build();

  ModelSpec spec_;
  nn::ParamStore store_;
  pace_core::ContextEncoder encoder_;
  nn::Mlp actor_;
  nn::Mlp critic_;
  pace_core::Identifier identifier_;
};

// Default architecture for an environment: d_z 64, f [64, 64], g [64] for
// Kuhn; d_z 128, f [128, 128], g [128] for Predator-Prey-W.
ModelSpec default_model_spec(pool::EnvKind env, std::vector<std::size_t> slot_cardinalities,
                             std::size_t context_episodes);

}  // namespace pace::train
