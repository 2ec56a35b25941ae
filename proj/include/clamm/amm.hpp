// Constant-product concentrated-liquidity math: reserves, liquidity,
// position valuation, activity fractions and hold baselines. Everything here
// is a pure function of its arguments.
#pragma once

#include <utility>

#include "clamm/types.hpp"

namespace clamm {

// Real reserves backing a position at the given sqrt price. Three cases:
// all-x below the interval, mixed inside (closed at both boundaries),
// all-y above. Continuous in the price at both boundaries.
Reserves reserves_for(const Position& position, SqrtPrice price);

// Opens a symmetric position [price/alpha, alpha*price] from a balanced
// deposit worth holdings_value (y-units). Returns the position together with
// the deposited reserves (x = value/(2*price^2), y = value/2), which satisfy
// L = alpha/(alpha-1) * y / price. Requires alpha > 1; holdings_value may be
// zero (empty position).
std::pair<Position, Reserves> liquidity_for_symmetric(double holdings_value,
                                                      SqrtPrice price,
                                                      double alpha);

// Fraction of the step [t-1, t] during which the interval was active, with
// prices interpolated linearly in marginal-price (pi^2) space. 1 when the
// current price is inside the interval; exit fractions are clamped to [0,1];
// a zero denominator (no price movement while outside) yields 0.
double active_fraction(SqrtPrice prev_price, SqrtPrice price,
                       const PriceInterval& interval);

// Mark-to-market wealth: price^2 * x + y + unclaimed fees, reserves per
// reserves_for.
double position_value(const Position& position, SqrtPrice price,
                      double unclaimed_fees);

// Value of simply holding the initial token amounts at the given price.
double hold_value(const Reserves& initial, SqrtPrice price);

}  // namespace clamm
