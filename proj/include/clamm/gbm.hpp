// Zero-drift GBM modeling of the marginal price: volatility estimation from
// data and reproducible path sampling.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clamm/types.hpp"

namespace clamm {

struct GbmParams {
    double sigma = 0.0;          // per-step volatility of the marginal price
    double initial_price = 1.0;  // marginal units (pi_0^2); drift is fixed to zero
};

// A sampled sqrt-price sequence of length horizon + 1.
struct PricePath {
    std::vector<double> sqrt_prices;

    std::size_t horizon() const { return sqrt_prices.empty() ? 0 : sqrt_prices.size() - 1; }
};

// Sample standard deviation (n-1 denominator) of log returns of a marginal
// price series. Throws on nonpositive entries or fewer than two points.
double estimate_sigma(std::span<const double> marginal_prices);

// Draws num_paths independent paths of the marginal price
//   P_t = P_{t-1} * exp(-sigma^2/2 + sigma * Z_t)
// and returns them as sqrt prices. Path i depends only on (seed, i), so
// results are identical regardless of batching or generation order.
std::vector<PricePath> sample_gbm_paths(const GbmParams& params, std::size_t num_paths,
                                        std::size_t horizon, std::uint64_t seed);

// Single path, identical to sample_gbm_paths(...)[path_index].
PricePath sample_gbm_path(const GbmParams& params, std::size_t horizon,
                          std::uint64_t seed, std::size_t path_index);

}  // namespace clamm
