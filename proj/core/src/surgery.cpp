#include "bridgeland/surgery.hpp"

#include <stdexcept>
#include <utility>

namespace bridgeland {

namespace {

Rational frac(const Rational& x) { return x - Rational(x.floor()); }

FlopRecord make_record(std::int64_t n, Wall wall, ChernVector e1, ChernVector e2) {
    FlopRecord record;
    record.wall = std::move(wall);
    record.e1_class = e1;
    record.e2_class = e2;
    record.dim_B1 = moduli_dim(e1);
    record.dim_B2 = moduli_dim(e2);
    record.N = -euler_pairing(e1, e2) - 1;
    record.dim_P = record.dim_B1 + record.dim_B2 + record.N;
    record.codim = moduli_dim(twisted_ideal_class(n)) - record.dim_P;
    if (record.N <= 1)
        record.flags.push_back(std::string(kFlagFlopHypothesis) +
                               ": N = " + std::to_string(record.N) +
                               " but the flop construction needs N > 1; this wall is a P^1-bundle divisor "
                               "handled by a direct isomorphism");
    return record;
}

}  // namespace

FlopRecord flop_record(std::int64_t n, std::int64_t wall_index) {
    const std::int64_t count = wall_count(n);
    if (n < 3 || wall_index < 0 || wall_index >= count)
        throw std::invalid_argument("flop_record: wall_index " + std::to_string(wall_index) + " out of range for n=" +
                                    std::to_string(n) + " (" + std::to_string(count) + " walls)");
    std::vector<Wall> walls = actual_walls(n);
    Wall wall = walls[static_cast<std::size_t>(wall_index)];
    if (n == 5 && wall_index == 2) {
        FlopRecord record = make_record(n, std::move(wall), {2, 1, 0}, {-1, 1, -1});
        record.flags.push_back(std::string(kFlagCodimDiscrepancy) + ": wall locus of dimension " +
                               std::to_string(record.dim_P) + " has codimension " + std::to_string(record.codim) +
                               " in the " + std::to_string(moduli_dim(twisted_ideal_class(n))) +
                               "-dimensional moduli, while the surgery diagram lists stratum C as codimension 4 in M_1");
        return record;
    }
    // For n != 5 (and the first two walls of n = 5) the index is m = |X'|.
    const std::int64_t m = wall_index;
    return make_record(n, std::move(wall), {1, 1, 1 - m}, {0, 1, 3 - n + m});
}

ModuliChain moduli_chain(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("moduli_chain: n must be non-negative");
    ModuliChain chain;
    chain.n = n;
    chain.chambers = chambers(n);
    chain.ambient_dim = moduli_dim(twisted_ideal_class(n));
    for (std::int64_t i = 0; i < wall_count(n); ++i) chain.records.push_back(flop_record(n, i));
    return chain;
}

TorusPoint::TorusPoint(const std::array<Rational, 4>& coords) {
    for (std::size_t i = 0; i < 4; ++i) coords_[i] = frac(coords[i]);
}

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
    std::array<Rational, 4> sum;
    for (std::size_t i = 0; i < 4; ++i) sum[i] = a.coords_[i] + b.coords_[i];
    return TorusPoint(sum);
}

TorusPoint operator-(const TorusPoint& a) {
    std::array<Rational, 4> neg;
    for (std::size_t i = 0; i < 4; ++i) neg[i] = -a.coords_[i];
    return TorusPoint(neg);
}

TorusPoint operator*(std::int64_t k, const TorusPoint& a) {
    std::array<Rational, 4> scaled;
    for (std::size_t i = 0; i < 4; ++i) scaled[i] = Rational(k) * a.coords_[i];
    return TorusPoint(scaled);
}

IntMatrix4 n3_matrix() {
    return {{{-1, -1, 0, -1}, {0, -1, -1, -1}, {-1, 0, -1, -1}, {1, 1, 1, 1}}};
}

std::int64_t determinant(const IntMatrix4& m) {
    IntMatrix4 a = m;
    std::int64_t sign = 1;
    std::int64_t previous = 1;
    for (std::size_t k = 0; k < 3; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < 4 && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == 4) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < 4; ++i) {
            for (std::size_t j = k + 1; j < 4; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    return sign * a[3][3];
}

IntMatrix4 unimodular_inverse(const IntMatrix4& m) {
    const std::int64_t det = determinant(m);
    if (det != 1 && det != -1) throw std::domain_error("matrix is not unimodular (det " + std::to_string(det) + ")");
    // inverse = adj(m) / det with adj[j][i] = (-1)^{i+j} det(minor_ij)
    IntMatrix4 inverse{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            std::array<std::array<std::int64_t, 3>, 3> minor{};
            std::size_t mi = 0;
            for (std::size_t r = 0; r < 4; ++r) {
                if (r == i) continue;
                std::size_t mj = 0;
                for (std::size_t c = 0; c < 4; ++c) {
                    if (c == j) continue;
                    minor[mi][mj++] = m[r][c];
                }
                ++mi;
            }
            const std::int64_t d3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1]) -
                                    minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0]) +
                                    minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
            const std::int64_t cofactor = ((i + j) % 2 == 0 ? 1 : -1) * d3;
            inverse[j][i] = cofactor * det;  // det is its own inverse
        }
    }
    return inverse;
}

TorusQuadruple apply_matrix(const IntMatrix4& m, const TorusQuadruple& pts) {
    TorusQuadruple out{};
    for (std::size_t i = 0; i < 4; ++i) {
        TorusPoint sum;
        for (std::size_t j = 0; j < 4; ++j) sum = sum + m[i][j] * pts[j];
        out[i] = sum;
    }
    return out;
}

TorusQuadruple n3_iso_apply(const TorusQuadruple& pts) { return apply_matrix(n3_matrix(), pts); }

}  // namespace bridgeland
