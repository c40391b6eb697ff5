#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "bridgeland/rational.hpp"

namespace bridgeland {

/// Exact number a + b*sqrt(m) with a, b rational and m a squarefree
/// positive integer. m == 1 only when b == 0, so two canonical values are
/// equal exactly when their fields are.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational a) : a_(a) {}  // NOLINT: implicit by intent

    /// a + b*sqrt(radicand) for a rational radicand >= 0.
    QuadraticNumber(Rational a, Rational b, Rational radicand);

    [[nodiscard]] const Rational& rational_part() const noexcept { return a_; }
    [[nodiscard]] const Rational& surd_coefficient() const noexcept { return b_; }
    [[nodiscard]] std::int64_t squarefree_radicand() const noexcept { return m_; }
    [[nodiscard]] bool is_rational() const noexcept { return b_.sign() == 0; }

    [[nodiscard]] int sign() const;
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) noexcept = default;

private:
    Rational a_;
    Rational b_;
    std::int64_t m_ = 1;
};

/// Sign of x - (center + k*sqrt(radius_sq)) for k in {-1, +1}.
[[nodiscard]] int compare_to_surd(const Rational& x, const Rational& center, int k, const Rational& radius_sq);

}  // namespace bridgeland
