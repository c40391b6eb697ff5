#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bridgeland {

/// Exact rational number over 64-bit integers.
///
/// Always stored in lowest terms with a strictly positive denominator.
/// Intermediate products are formed in 128-bit arithmetic; any result that
/// does not fit back into 64 bits throws std::overflow_error instead of
/// wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by intent
    Rational(std::int64_t numerator, std::int64_t denominator);

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    [[nodiscard]] std::int64_t floor() const noexcept;
    [[nodiscard]] std::int64_t ceil() const noexcept;
    [[nodiscard]] double to_double() const noexcept;

    /// "p/q", or "p" when the value is an integer.
    [[nodiscard]] std::string to_string() const;

    /// Accepts "p", "p/q" and finite decimals such as "-0.1" or "2.25".
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

private:
    __extension__ using wide = __int128;
    static Rational from_wide(wide numerator, wide denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

[[nodiscard]] inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace bridgeland
