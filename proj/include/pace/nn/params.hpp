#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pace/nn/tensor.hpp"

namespace pace::nn {

// Named parameter tensors with their Adam moments.
class ParamStore {
 public:
  struct Entry {
    std::string name;
    Tensor value;
    Tensor first_moment;
    Tensor second_moment;
    std::uint64_t steps = 0;  // Adam updates applied to this tensor
  };

  std::size_t add(std::string name, std::vector<std::size_t> shape);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] std::size_t parameter_count() const;
  [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const;

  Tensor& value(std::size_t i) { return entries_.at(i).value; }
  [[nodiscard]] const Tensor& value(std::size_t i) const { return entries_.at(i).value; }
  Entry& entry(std::size_t i) { return entries_.at(i); }
  [[nodiscard]] const Entry& entry(std::size_t i) const { return entries_.at(i); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return entries_.at(i).name; }

  // Optimizer updates performed on this store; checkpointed.
  std::uint64_t global_step = 0;

 private:
  std::vector<Entry> entries_;
};

// Per-tensor gradient buffers aligned with a ParamStore.
using Gradients = std::vector<Tensor>;
Gradients zero_gradients(const ParamStore& store);
void zero(Gradients& g);
double global_norm(const Gradients& g);

struct AdamConfig {
  double learning_rate = 2e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double max_grad_norm = 0.0;  // <= 0 disables clipping
};

struct AdamReport {
  double grad_norm = 0.0;   // before clipping
  double clip_scale = 1.0;  // factor applied to the gradients
};

// Bias-corrected Adam. Gradients are rescaled in place to max_grad_norm when
// their global L2 norm exceeds it. Tensors with active[i] == false are left
// untouched and do not count towards the norm.
AdamReport adam_step(ParamStore& store, Gradients& grads, const AdamConfig& config,
                     const std::vector<bool>& active = {});

}  // namespace pace::nn
