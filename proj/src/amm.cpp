#include "clamm/amm.hpp"

#include <algorithm>
#include <cmath>

namespace clamm {

Reserves reserves_for(const Position& position, SqrtPrice price) {
    const double L = position.liquidity;
    const double pl = position.interval.lower().value();
    const double pu = position.interval.upper().value();
    const double p = price.value();

    if (p < pl) {
        return Reserves{L * (1.0 / pl - 1.0 / pu), 0.0};
    }
    if (p > pu) {
        return Reserves{0.0, L * (pu - pl)};
    }
    return Reserves{L * (1.0 / p - 1.0 / pu), L * (p - pl)};
}

std::pair<Position, Reserves> liquidity_for_symmetric(double holdings_value,
                                                      SqrtPrice price,
                                                      double alpha) {
    if (!std::isfinite(alpha) || alpha <= 1.0) {
        throw std::invalid_argument("liquidity_for_symmetric requires alpha > 1");
    }
    if (!std::isfinite(holdings_value) || holdings_value < 0.0) {
        throw std::invalid_argument("holdings_value must be nonnegative");
    }

    const double p = price.value();
    PriceInterval interval{SqrtPrice(p / alpha), SqrtPrice(alpha * p)};

    const double y = holdings_value / 2.0;
    const double x = holdings_value / (2.0 * p * p);
    const double liquidity = alpha / (alpha - 1.0) * y / p;

    return {Position{liquidity, interval}, Reserves{x, y}};
}

double active_fraction(SqrtPrice prev_price, SqrtPrice price,
                       const PriceInterval& interval) {
    const double p_prev = prev_price.marginal();
    const double p_cur = price.marginal();
    const double pl2 = interval.lower().marginal();
    const double pu2 = interval.upper().marginal();

    if (interval.contains(price)) return 1.0;

    double raw = 0.0;
    if (price.value() < interval.lower().value()) {
        const double denom = p_prev - p_cur;
        if (denom <= 0.0) return 0.0;
        raw = (p_prev - pl2) / denom;
    } else {
        const double denom = p_cur - p_prev;
        if (denom <= 0.0) return 0.0;
        raw = (pu2 - p_prev) / denom;
    }
    return std::clamp(raw, 0.0, 1.0);
}

double position_value(const Position& position, SqrtPrice price,
                      double unclaimed_fees) {
    const Reserves r = reserves_for(position, price);
    return price.marginal() * r.x + r.y + unclaimed_fees;
}

double hold_value(const Reserves& initial, SqrtPrice price) {
    return price.marginal() * initial.x + initial.y;
}

}  // namespace clamm
