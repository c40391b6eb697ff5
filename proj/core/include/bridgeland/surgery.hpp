#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bridgeland/chern.hpp"
#include "bridgeland/rational.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland {

/// Bookkeeping for the Mukai flop at one wall of (1,2,4-n).
///
/// The unstable locus P is a projective bundle with fibres of dimension
/// N = -chi(e1, e2) - 1 over B1 x B2, where B_i is the moduli of objects of
/// class e_i.
struct FlopRecord {
    Wall wall;
    ChernVector e1_class;
    ChernVector e2_class;
    std::int64_t dim_B1 = 0;
    std::int64_t dim_B2 = 0;
    std::int64_t N = 0;
    std::int64_t dim_P = 0;
    std::int64_t codim = 0;
    std::vector<std::string> flags;
};

inline constexpr const char* kFlagFlopHypothesis = "flop-hypothesis-fails";
inline constexpr const char* kFlagCodimDiscrepancy = "codim-discrepancy";

/// Record for the wall_index-th wall (top-down) of actual_walls(n).
/// Throws std::invalid_argument when wall_index is out of range.
[[nodiscard]] FlopRecord flop_record(std::int64_t n, std::int64_t wall_index);

struct ModuliChain {
    std::int64_t n = 0;
    std::vector<Chamber> chambers;
    std::vector<FlopRecord> records;
    std::int64_t ambient_dim = 0;
};

[[nodiscard]] ModuliChain moduli_chain(std::int64_t n);

/// Rational point of the real 4-torus underlying T (identified with its dual).
/// Coordinates are kept in [0, 1).
class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(const std::array<Rational, 4>& coords);

    [[nodiscard]] const std::array<Rational, 4>& coords() const noexcept { return coords_; }

    friend TorusPoint operator+(const TorusPoint& a, const TorusPoint& b);
    friend TorusPoint operator-(const TorusPoint& a);
    friend TorusPoint operator*(std::int64_t k, const TorusPoint& a);

    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

private:
    std::array<Rational, 4> coords_{};
};

using IntMatrix4 = std::array<std::array<std::int64_t, 4>, 4>;
using TorusQuadruple = std::array<TorusPoint, 4>;

/// Matrix of the n = 3 isomorphism M_{>1} -> M_{<1} acting on (p, q, y, xhat).
[[nodiscard]] IntMatrix4 n3_matrix();

/// Fraction-free (Bareiss) elimination.
[[nodiscard]] std::int64_t determinant(const IntMatrix4& m);

/// Integer inverse of a unimodular matrix. Throws std::domain_error when the
/// determinant is not +-1.
[[nodiscard]] IntMatrix4 unimodular_inverse(const IntMatrix4& m);

/// out[i] = sum_j m[i][j] * pts[j] in the torus group.
[[nodiscard]] TorusQuadruple apply_matrix(const IntMatrix4& m, const TorusQuadruple& pts);

[[nodiscard]] TorusQuadruple n3_iso_apply(const TorusQuadruple& pts);

}  // namespace bridgeland
