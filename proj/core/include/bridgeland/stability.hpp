#pragma once

#include <compare>

#include "bridgeland/chern.hpp"
#include "bridgeland/rational.hpp"

namespace bridgeland {

/// A point (s, t) of the stability half-plane, stored as (s, u = t^2) so that
/// every slope comparison stays in exact rational arithmetic.
class StabilityPoint {
public:
    /// Throws std::invalid_argument unless u > 0.
    StabilityPoint(Rational s, Rational u);

    [[nodiscard]] const Rational& s() const noexcept { return s_; }
    [[nodiscard]] const Rational& u() const noexcept { return u_; }

    friend bool operator==(const StabilityPoint&, const StabilityPoint&) noexcept = default;

private:
    Rational s_;
    Rational u_;
};

/// Re Z and Im Z / (2t) of the central charge Z_{s,t}(v).
struct ChargeComponents {
    Rational re;
    Rational im_over_2t;

    friend bool operator==(const ChargeComponents&, const ChargeComponents&) noexcept = default;
};

/// The t-slope numerator / (2t * denominator), or infinity when Im Z vanishes.
///
/// Finite values keep a strictly positive denominator. The factor 2t is
/// common to every slope at a fixed point, so it is never materialized.
struct SlopeValue {
    bool infinite = false;
    Rational numerator;
    Rational denominator;

    static SlopeValue make_infinite() noexcept { return {true, {}, {}}; }

    /// Equality of the represented slopes, so (kN, kD) == (N, D).
    friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.numerator * b.denominator == b.numerator * a.denominator;
    }
};

/// Re Z = -chi + 2sc - r(s^2 - u) and Im Z / 2t = c - rs.
[[nodiscard]] ChargeComponents charge_components(const ChernVector& v, const StabilityPoint& p);

[[nodiscard]] SlopeValue slope(const ChernVector& v, const StabilityPoint& p);

/// Exact ordering of mu(v) against mu(w) at p. Infinity exceeds every finite
/// slope and two infinite slopes compare equal.
[[nodiscard]] std::strong_ordering slope_compare(const ChernVector& v, const ChernVector& w,
                                                 const StabilityPoint& p);

/// Numerical sandwich condition 0 < Im Z(w) < Im Z(v), necessary for w to be
/// the class of a proper destabilizing subobject of an object of class v.
/// Only the s coordinate matters.
[[nodiscard]] bool sandwich_test(const ChernVector& v, const ChernVector& w, const Rational& s);
[[nodiscard]] bool sandwich_test(const ChernVector& v, const ChernVector& w, const StabilityPoint& p);

}  // namespace bridgeland
