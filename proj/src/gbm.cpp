#include "clamm/gbm.hpp"

#include <cmath>
#include <random>

namespace clamm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

}  // namespace

double estimate_sigma(std::span<const double> marginal_prices) {
    if (marginal_prices.size() < 2) {
        throw std::invalid_argument("estimate_sigma needs at least two prices");
    }
    std::vector<double> returns;
    returns.reserve(marginal_prices.size() - 1);
    for (std::size_t i = 0; i < marginal_prices.size(); ++i) {
        if (!std::isfinite(marginal_prices[i]) || marginal_prices[i] <= 0.0) {
            throw data_error("estimate_sigma: nonpositive price at index " + std::to_string(i));
        }
        if (i > 0) returns.push_back(std::log(marginal_prices[i] / marginal_prices[i - 1]));
    }
    if (returns.size() < 2) return 0.0;

    double mean = 0.0;
    for (double r : returns) mean += r;
    mean /= static_cast<double>(returns.size());
    double ss = 0.0;
    for (double r : returns) ss += (r - mean) * (r - mean);
    return std::sqrt(ss / static_cast<double>(returns.size() - 1));
}

PricePath sample_gbm_path(const GbmParams& params, std::size_t horizon,
                          std::uint64_t seed, std::size_t path_index) {
    if (params.sigma < 0.0 || !std::isfinite(params.sigma)) {
        throw std::invalid_argument("sigma must be nonnegative");
    }
    if (params.initial_price <= 0.0 || !std::isfinite(params.initial_price)) {
        throw std::invalid_argument("initial_price must be positive");
    }
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");

    std::mt19937_64 rng(path_seed(seed, path_index));
    std::normal_distribution<double> normal(0.0, 1.0);

    PricePath path;
    path.sqrt_prices.reserve(horizon + 1);
    double p = params.initial_price;
    path.sqrt_prices.push_back(std::sqrt(p));
    const double drift = -0.5 * params.sigma * params.sigma;
    for (std::size_t t = 1; t <= horizon; ++t) {
        p *= std::exp(drift + params.sigma * normal(rng));
        path.sqrt_prices.push_back(std::sqrt(p));
    }
    return path;
}

std::vector<PricePath> sample_gbm_paths(const GbmParams& params, std::size_t num_paths,
                                        std::size_t horizon, std::uint64_t seed) {
    if (num_paths < 1) throw std::invalid_argument("num_paths must be at least 1");
    std::vector<PricePath> paths;
    paths.reserve(num_paths);
    for (std::size_t i = 0; i < num_paths; ++i) {
        paths.push_back(sample_gbm_path(params, horizon, seed, i));
    }
    return paths;
}

}  // namespace clamm
