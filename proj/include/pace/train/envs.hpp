#pragma once

#include <memory>

#include "pace/core/game.hpp"
#include "pace/pool/peer_pool.hpp"

namespace pace::train {

// Builds the environment instance for one peer tuple.
class EnvFactory {
 public:
  EnvFactory(pool::EnvKind env, std::shared_ptr<const pp::WorldConfig> world);

  [[nodiscard]] std::unique_ptr<core::Environment> make(const pool::PeerTuple& peers) const;
  [[nodiscard]] pool::EnvKind env() const noexcept { return env_; }
  [[nodiscard]] std::size_t observation_size() const;
  [[nodiscard]] std::size_t action_count() const;
  [[nodiscard]] const std::shared_ptr<const pp::WorldConfig>& world() const noexcept { return world_; }

 private:
  pool::EnvKind env_;
  std::shared_ptr<const pp::WorldConfig> world_;
};

}  // namespace pace::train
