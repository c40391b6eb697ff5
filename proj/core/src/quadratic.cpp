#include "bridgeland/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace bridgeland {

namespace {

// n = k^2 * m with m squarefree.
void split_square(std::int64_t n, std::int64_t& k, std::int64_t& m) {
    k = 1;
    m = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            k *= p;
        }
        if (n % p == 0) {
            n /= p;
            m *= p;
        }
    }
    m *= n;
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Rational radicand) : a_(a) {
    if (radicand.sign() < 0) throw std::domain_error("square root of a negative rational");
    if (radicand.sign() == 0 || b.sign() == 0) return;
    // sqrt(p/q) = sqrt(p*q)/q
    const std::int64_t q = radicand.den();
    const Rational pq_rational = radicand * Rational(q * q);
    std::int64_t k = 1;
    std::int64_t m = 1;
    split_square(pq_rational.num(), k, m);
    const Rational coefficient = b * Rational(k, q);
    if (m == 1) {
        a_ += coefficient;
        return;
    }
    b_ = coefficient;
    m_ = m;
}

int QuadraticNumber::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 m
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(m_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(m_));
}

std::string QuadraticNumber::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string out;
    if (a_.sign() != 0) out = a_.to_string() + (b_.sign() > 0 ? "+" : "-");
    else if (b_.sign() < 0) out = "-";
    const Rational mag = abs(b_);
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "sqrt(" + std::to_string(m_) + ")";
    return out;
}

int compare_to_surd(const Rational& x, const Rational& center, int k, const Rational& radius_sq) {
    return QuadraticNumber(x - center, Rational(-k), radius_sq).sign();
}

}  // namespace bridgeland
