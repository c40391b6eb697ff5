#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bridgeland {

/// Chern character (r, c*l, chi) on a principally polarized abelian surface
/// of Picard rank one, where l is the polarization with l^2 = 2 and chi is the
/// integrated ch_2 (equal to the Euler characteristic).
struct ChernVector {
    std::int64_t r = 0;
    std::int64_t c = 0;
    std::int64_t chi = 0;

    [[nodiscard]] bool is_zero() const noexcept { return r == 0 && c == 0 && chi == 0; }

    /// "r,c,chi"
    [[nodiscard]] std::string to_string() const;
    static ChernVector parse(std::string_view text);

    friend ChernVector operator+(const ChernVector& a, const ChernVector& b) noexcept {
        return {a.r + b.r, a.c + b.c, a.chi + b.chi};
    }
    friend ChernVector operator-(const ChernVector& a, const ChernVector& b) noexcept {
        return {a.r - b.r, a.c - b.c, a.chi - b.chi};
    }
    friend ChernVector operator*(std::int64_t k, const ChernVector& v) noexcept {
        return {k * v.r, k * v.c, k * v.chi};
    }

    friend bool operator==(const ChernVector&, const ChernVector&) noexcept = default;
    friend auto operator<=>(const ChernVector&, const ChernVector&) noexcept = default;
};

std::ostream& operator<<(std::ostream& os, const ChernVector& v);

/// Class of the twisted ideal sheaf L^2 (x) I_X with |X| = n, namely (1, 2, 4 - n).
[[nodiscard]] constexpr ChernVector twisted_ideal_class(std::int64_t n) noexcept { return {1, 2, 4 - n}; }

/// Product of Chern characters. Unit is (1,0,0).
[[nodiscard]] ChernVector tensor(const ChernVector& v, const ChernVector& w) noexcept;

/// Derived dual, (r, -c, chi).
[[nodiscard]] ChernVector dual(const ChernVector& v) noexcept;

/// Odd homological shift, which negates the class.
[[nodiscard]] ChernVector shift(const ChernVector& v) noexcept;

/// Symmetric Euler form chi(v, w) = r_v chi_w + r_w chi_v - 2 c_v c_w.
[[nodiscard]] std::int64_t euler_pairing(const ChernVector& v, const ChernVector& w) noexcept;

/// Bogomolov discriminant c^2 - r chi. Non-negative for mu-semistable sheaves.
[[nodiscard]] std::int64_t discriminant(const ChernVector& v) noexcept;

/// Expected dimension 2*discriminant + 2 of the moduli of objects with
/// class v. Throws std::invalid_argument for the zero vector or a negative
/// discriminant.
[[nodiscard]] std::int64_t moduli_dim(const ChernVector& v);

/// Cohomological action of the (shifted) Poincare transform:
/// (r, c, chi) -> (-chi, c, -r).
[[nodiscard]] ChernVector fm_transform(const ChernVector& v) noexcept;

/// tensor(v, ch(L^m)) with ch(L^m) = (1, m, m^2).
[[nodiscard]] ChernVector twist_by_L(const ChernVector& v, std::int64_t m) noexcept;

/// Class (a^2, -ab, b^2) of the semi-homogeneous kernel restriction for
/// slope b/a. Requires a > 0 and gcd(a, b) = 1.
[[nodiscard]] ChernVector kernel_class(std::int64_t a, std::int64_t b);

}  // namespace bridgeland
