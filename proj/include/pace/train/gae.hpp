#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pace::train {

struct GaeResult {
  std::vector<double> advantages;
  std::vector<double> returns;  // advantage + value
};

// GAE over one environment's transitions in time order. The recursion resets
// only where meta_end is set (next value 0); episode boundaries inside a
// meta-episode do not cut it. The last step bootstraps from `bootstrap` unless
// it ends a meta-episode.
GaeResult compute_gae(std::span<const double> rewards, std::span<const double> values,
                      std::span<const std::uint8_t> meta_end, double bootstrap, double gamma, double lambda);

// Many environments stored back to back: segment s covers
// [starts[s], starts[s+1]) (the last one runs to the end). Segments are
// processed in parallel; results do not depend on the thread count.
void compute_gae_segments(std::span<const double> rewards, std::span<const double> values,
                          std::span<const std::uint8_t> meta_end, std::span<const std::size_t> starts,
                          std::span<const double> bootstraps, double gamma, double lambda,
                          std::span<double> advantages, std::span<double> returns);

namespace reference {
void compute_gae_segments(std::span<const double> rewards, std::span<const double> values,
                          std::span<const std::uint8_t> meta_end, std::span<const std::size_t> starts,
                          std::span<const double> bootstraps, double gamma, double lambda,
                          std::span<double> advantages, std::span<double> returns);
}

// In place (x - mean) / std with the population std; all zeros when x is constant.
void normalize(std::span<double> x);

}  // namespace pace::train
