#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pace/nn/mlp.hpp"

namespace pace::pace_core {

// One categorical distribution per peer slot.
using SlotDistributions = std::vector<std::vector<double>>;

// Linear map from z to the concatenated slot logits, softmax per slot.
class Identifier {
 public:
  Identifier() = default;
  Identifier(std::size_t embedding_width, std::vector<std::size_t> slot_cardinalities, nn::ParamStore& store,
             const std::string& name = "identifier");

  [[nodiscard]] const nn::Mlp& head() const noexcept { return head_; }
  [[nodiscard]] const std::vector<std::size_t>& slot_cardinalities() const noexcept { return slots_; }
  [[nodiscard]] std::size_t slot_count() const noexcept { return slots_.size(); }
  [[nodiscard]] std::size_t slot_offset(std::size_t j) const { return offsets_.at(j); }
  [[nodiscard]] std::size_t logit_count() const noexcept { return offsets_.back(); }

  // [rows, d_z] -> [rows, sum K_j]
  nn::Tensor logits(const nn::ParamStore& store, const nn::Tensor& z, nn::MlpTape* tape = nullptr) const;
  [[nodiscard]] SlotDistributions distributions(std::span<const double> logits_row) const;
  [[nodiscard]] SlotDistributions identify(const nn::ParamStore& store, std::span<const double> z) const;

 private:
  nn::Mlp head_;
  std::vector<std::size_t> slots_;
  std::vector<std::size_t> offsets_;  // size m + 1
};

// (1/m) sum_j -log dist_j[i_j]. Throws UsageError on a bad index.
double aux_loss(const SlotDistributions& dists, std::span<const std::size_t> truth);
// (1/m) sum_j dist_j[i_j], in [0, 1].
double exploration_reward(const SlotDistributions& dists, std::span<const std::size_t> truth);

struct AuxTerm {
  double loss = 0.0;
  double reward = 0.0;   // exploration reward of the same row
  double accuracy = 0.0; // fraction of slots whose argmax is the truth
};

// Aux loss of one logits row with d loss / d logits added (times scale) into grad_row.
AuxTerm aux_loss_with_grad(const Identifier& id, std::span<const double> logits_row,
                           std::span<const std::size_t> truth, double scale, std::span<double> grad_row);

void init_identifier(const Identifier& id, nn::ParamStore& store, core::RngStream& rng);

// c(step) = c_init * max(0, 1 - step / M).
struct RewardSchedule {
  double c_init = 0.0;
  double horizon = 1.0;  // M, environment steps

  [[nodiscard]] double coefficient(double step) const;
  void validate() const;
};

enum class RewardMode { Training, Adaptation };

// r + c(step) r^e during training; the task reward unchanged during adaptation.
double mixed_reward(double task_reward, double exploration, double step, const RewardSchedule& schedule,
                    RewardMode mode = RewardMode::Training);

}  // namespace pace::pace_core
