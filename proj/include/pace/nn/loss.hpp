#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pace/core/rng.hpp"

namespace pace::nn {

// Numerically stable log-softmax of one logit row.
void log_softmax(std::span<const double> logits, std::span<double> out);
std::vector<double> softmax(std::span<const double> logits);

struct CrossEntropy {
  double loss = 0.0;
  std::vector<double> grad;  // d loss / d logits = softmax - onehot(target)
};

// -log softmax(logits)[target]; throws ShapeError for an out-of-range target.
CrossEntropy softmax_ce(std::span<const double> logits, std::size_t target);

double entropy_from_log_probs(std::span<const double> log_probs);

// Inverse-CDF draw from a normalized distribution.
std::size_t sample_categorical(std::span<const double> probs, core::RngStream& rng);

}  // namespace pace::nn
