#pragma once

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "pace/nn/params.hpp"

namespace pace::nn {

inline constexpr int kCheckpointVersion = 1;

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Checkpoint {
  ParamStore store;
  nlohmann::json metadata;  // caller-defined (env kind, architecture, ...)
  bool has_optimizer_state = false;
};

// Writes <stem>.json (manifest: version, names, shapes, optimizer flag, global
// step, metadata) and <stem>.bin (little-endian float64 per tensor, followed
// by both Adam moments per tensor when with_optimizer).
void save_checkpoint(const std::filesystem::path& stem, const ParamStore& store,
                     const nlohmann::json& metadata, bool with_optimizer);
Checkpoint load_checkpoint(const std::filesystem::path& stem);

// Accepts "run/ckpt", "run/ckpt.json" or "run/ckpt.bin".
std::filesystem::path checkpoint_stem(const std::filesystem::path& p);

}  // namespace pace::nn
