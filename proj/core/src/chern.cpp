#include "bridgeland/chern.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace bridgeland {

std::string ChernVector::to_string() const {
    return std::to_string(r) + "," + std::to_string(c) + "," + std::to_string(chi);
}

ChernVector ChernVector::parse(std::string_view text) {
    std::vector<std::int64_t> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw std::invalid_argument("expected 'r,c,chi' integers, got '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw std::invalid_argument("expected 'r,c,chi' integers, got '" + std::string(text) + "'");
    return {parts[0], parts[1], parts[2]};
}

std::ostream& operator<<(std::ostream& os, const ChernVector& v) {
    return os << '(' << v.r << ',' << v.c << ',' << v.chi << ')';
}

ChernVector tensor(const ChernVector& v, const ChernVector& w) noexcept {
    return {v.r * w.r, v.r * w.c + w.r * v.c, v.r * w.chi + w.r * v.chi + 2 * v.c * w.c};
}

ChernVector dual(const ChernVector& v) noexcept { return {v.r, -v.c, v.chi}; }

ChernVector shift(const ChernVector& v) noexcept { return {-v.r, -v.c, -v.chi}; }

std::int64_t euler_pairing(const ChernVector& v, const ChernVector& w) noexcept {
    return v.r * w.chi + w.r * v.chi - 2 * v.c * w.c;
}

std::int64_t discriminant(const ChernVector& v) noexcept { return v.c * v.c - v.r * v.chi; }

std::int64_t moduli_dim(const ChernVector& v) {
    if (v.is_zero()) throw std::invalid_argument("moduli_dim: zero Chern vector");
    const std::int64_t delta = discriminant(v);
    if (delta < 0)
        throw std::invalid_argument("moduli_dim: negative discriminant for " + v.to_string());
    return 2 * delta + 2;
}

ChernVector fm_transform(const ChernVector& v) noexcept { return {-v.chi, v.c, -v.r}; }

ChernVector twist_by_L(const ChernVector& v, std::int64_t m) noexcept { return tensor(v, {1, m, m * m}); }

ChernVector kernel_class(std::int64_t a, std::int64_t b) {
    if (a <= 0) throw std::invalid_argument("kernel_class: a must be positive");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("kernel_class: a and b must be coprime");
    return {a * a, -a * b, b * b};
}

}  // namespace bridgeland
