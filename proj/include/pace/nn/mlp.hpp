#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pace/core/rng.hpp"
#include "pace/nn/params.hpp"
#include "pace/nn/tensor.hpp"

namespace pace::nn {

// widths = {input, hidden..., output}; ReLU between layers, identity output.
struct MlpSpec {
  std::vector<std::size_t> widths;

  [[nodiscard]] std::size_t input() const { return widths.front(); }
  [[nodiscard]] std::size_t output() const { return widths.back(); }
  [[nodiscard]] std::size_t layers() const { return widths.size() - 1; }
};

MlpSpec make_mlp_spec(std::size_t input, const std::vector<std::size_t>& hidden, std::size_t output);

// Activations retained by a forward pass. inputs[l] feeds layer l; pre[l] is
// its affine output (the network output for the last layer).
struct MlpTape {
  std::vector<Tensor> inputs;
  std::vector<Tensor> pre;
};

// An MLP whose weights live in a ParamStore as "<name>.<l>.weight" with shape
// [in, out] and "<name>.<l>.bias" with shape [out].
class Mlp {
 public:
  Mlp() = default;
  Mlp(MlpSpec spec, ParamStore& store, const std::string& name);

  [[nodiscard]] const MlpSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::size_t weight_index(std::size_t layer) const { return first_param_ + 2 * layer; }
  [[nodiscard]] std::size_t bias_index(std::size_t layer) const { return first_param_ + 2 * layer + 1; }
  [[nodiscard]] std::size_t first_param() const noexcept { return first_param_; }
  [[nodiscard]] std::size_t param_count() const noexcept { return 2 * spec_.layers(); }

  // x: [batch, input]. The tape is filled when non-null.
  Tensor forward(const ParamStore& store, const Tensor& x, MlpTape* tape = nullptr) const;

  // Accumulates parameter gradients into grads; returns d loss / d input when
  // want_input_grad, otherwise an empty tensor.
  Tensor backward(const ParamStore& store, const MlpTape& tape, const Tensor& d_out, Gradients& grads,
                  bool want_input_grad = true) const;

 private:
  MlpSpec spec_;
  std::size_t first_param_ = 0;
};

// Semi-orthogonal weights scaled by gain (QR of a Gaussian matrix with the
// sign convention making diag(R) positive); biases zero.
void orthogonal_init(Tensor& weight, double gain, core::RngStream& rng);
void init_mlp(const Mlp& mlp, ParamStore& store, double hidden_gain, double output_gain,
              core::RngStream& rng);

}  // namespace pace::nn
