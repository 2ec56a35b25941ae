// Core domain types for concentrated-liquidity positions.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace clamm {

// Ingestion / file problems (bad schema, broken counters, unreadable file).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Remote indexer problems (unreachable endpoint, persistent 5xx, empty range).
struct network_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Square root of the marginal exchange rate y/x. Token y is the numeraire
// (USD-stable units); marginal price is value squared.
class SqrtPrice {
public:
    explicit SqrtPrice(double value) : value_(value) {
        if (!std::isfinite(value) || value <= 0.0) {
            throw std::invalid_argument("SqrtPrice must be positive and finite, got " +
                                        std::to_string(value));
        }
    }

    double value() const { return value_; }
    double marginal() const { return value_ * value_; }

private:
    double value_;
};

// Construct from a marginal price (y per x).
inline SqrtPrice sqrt_price_from_marginal(double marginal_price) {
    if (!std::isfinite(marginal_price) || marginal_price <= 0.0) {
        throw std::invalid_argument("marginal price must be positive and finite");
    }
    return SqrtPrice(std::sqrt(marginal_price));
}

// Liquidity provision interval [lower, upper] in sqrt-price space.
class PriceInterval {
public:
    PriceInterval(SqrtPrice lower, SqrtPrice upper) : lower_(lower), upper_(upper) {
        if (!(lower.value() < upper.value())) {
            throw std::invalid_argument("PriceInterval requires lower < upper");
        }
    }

    SqrtPrice lower() const { return lower_; }
    SqrtPrice upper() const { return upper_; }

    bool contains(SqrtPrice p) const {
        return lower_.value() <= p.value() && p.value() <= upper_.value();
    }

private:
    SqrtPrice lower_;
    SqrtPrice upper_;
};

// Real token holdings.
struct Reserves {
    double x = 0.0;
    double y = 0.0;
};

// A liquidity position: virtual liquidity plus its provision interval.
struct Position {
    double liquidity = 0.0;
    PriceInterval interval;
};

// Where a price sits relative to an interval. Boundaries count as exited,
// matching the open-interval staying rule.
enum class PriceRegion { below, inside, above };

inline PriceRegion region_of(SqrtPrice price, const PriceInterval& interval) {
    if (price.value() <= interval.lower().value()) return PriceRegion::below;
    if (price.value() >= interval.upper().value()) return PriceRegion::above;
    return PriceRegion::inside;
}

}  // namespace clamm
