#include "bridgeland/stability.hpp"

#include <stdexcept>
#include <utility>

namespace bridgeland {

StabilityPoint::StabilityPoint(Rational s, Rational u) : s_(std::move(s)), u_(std::move(u)) {
    if (u_.sign() <= 0) throw std::invalid_argument("stability point requires u = t^2 > 0, got " + u_.to_string());
}

ChargeComponents charge_components(const ChernVector& v, const StabilityPoint& p) {
    const Rational& s = p.s();
    Rational re = Rational(-v.chi) + Rational(2 * v.c) * s - Rational(v.r) * (s * s - p.u());
    Rational im = Rational(v.c) - Rational(v.r) * s;
    return {re, im};
}

SlopeValue slope(const ChernVector& v, const StabilityPoint& p) {
    auto [re, im] = charge_components(v, p);
    if (im.sign() == 0) return SlopeValue::make_infinite();
    // mu = -Re Z / Im Z
    Rational numerator = -re;
    if (im.sign() < 0) return {false, -numerator, -im};
    return {false, numerator, im};
}

std::strong_ordering slope_compare(const ChernVector& v, const ChernVector& w, const StabilityPoint& p) {
    const SlopeValue a = slope(v, p);
    const SlopeValue b = slope(w, p);
    if (a.infinite || b.infinite) {
        if (a.infinite && b.infinite) return std::strong_ordering::equal;
        return a.infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.numerator * b.denominator <=> b.numerator * a.denominator;
}

bool sandwich_test(const ChernVector& v, const ChernVector& w, const Rational& s) {
    Rational im_w = Rational(w.c) - Rational(w.r) * s;
    Rational im_v = Rational(v.c) - Rational(v.r) * s;
    return im_w.sign() > 0 && im_w < im_v;
}

bool sandwich_test(const ChernVector& v, const ChernVector& w, const StabilityPoint& p) {
    return sandwich_test(v, w, p.s());
}

}  // namespace bridgeland
