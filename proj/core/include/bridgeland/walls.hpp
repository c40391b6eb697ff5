#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bridgeland/chern.hpp"
#include "bridgeland/quadratic.hpp"
#include "bridgeland/rational.hpp"
#include "bridgeland/stability.hpp"

namespace bridgeland {

/// Semicircle u + (s - center_s)^2 = radius_sq in the (s, u = t^2) half-plane.
struct Circle {
    Rational center_s;
    Rational radius_sq;

    friend bool operator==(const Circle&, const Circle&) noexcept = default;
    friend auto operator<=>(const Circle&, const Circle&) noexcept = default;
};

struct VerticalLine {
    Rational s;

    friend bool operator==(const VerticalLine&, const VerticalLine&) noexcept = default;
    friend auto operator<=>(const VerticalLine&, const VerticalLine&) noexcept = default;
};

using WallShape = std::variant<Circle, VerticalLine>;

/// A numerical wall for the class `target`, together with the destabilizer
/// classes that produce it.
///
/// A witness w and its complement target - w give the same locus; only the
/// canonical one of the two is stored (see canonical_witness).
struct Wall {
    WallShape shape;
    ChernVector target;
    std::vector<ChernVector> witnesses;

    /// u-coordinate where the wall meets s = 0 with u > 0, if it does.
    [[nodiscard]] std::optional<Rational> u_at_s0() const;

    /// True when w or target - w is a stored witness.
    [[nodiscard]] bool has_witness(const ChernVector& w) const;

    [[nodiscard]] bool same_shape(const Wall& other) const { return shape == other.shape; }
};

/// Search window [s_min, s_max) x (0, u_max).
class Region {
public:
    Region(Rational s_min, Rational s_max, std::optional<Rational> u_max = std::nullopt);

    [[nodiscard]] const Rational& s_min() const noexcept { return s_min_; }
    [[nodiscard]] const Rational& s_max() const noexcept { return s_max_; }
    [[nodiscard]] const std::optional<Rational>& u_max() const noexcept { return u_max_; }

private:
    Rational s_min_;
    Rational s_max_;
    std::optional<Rational> u_max_;
};

/// Raised when the candidate search cannot prove its chi-range finite.
class UnboundedSearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Whichever of w and v - w is smaller under (|r|, |c|, |chi|), ties broken
/// by (r, c, chi).
[[nodiscard]] ChernVector canonical_witness(const ChernVector& v, const ChernVector& w);

/// Locus where mu(v) = mu(w):
///   (r_w c_v - r_v c_w)(u + s^2) + (r_v chi_w - r_w chi_v) s + (chi_v c_w - chi_w c_v) = 0.
/// Empty when the locus is empty or everything, and when w has r = c = 0.
/// Throws std::invalid_argument on a zero vector.
[[nodiscard]] std::optional<Wall> wall_between(const ChernVector& v, const ChernVector& w);

/// Wall for (1,2,4-n) destabilized by L I_{X'} with |X'| = m. Requires n >= 3
/// and 0 <= m < (n-2)/2.
[[nodiscard]] Wall rank_one_wall(std::int64_t n, std::int64_t m);

/// The walls along s = 0 for (1,2,4-n): one per admissible m, plus the
/// rank-two wall when n = 5. Ordered by decreasing u at s = 0.
[[nodiscard]] std::vector<Wall> actual_walls(std::int64_t n);

/// floor((n-1)/2) for n != 5, 3 for n = 5, 0 for n <= 2.
[[nodiscard]] std::int64_t wall_count(std::int64_t n);

/// Power-series coefficients, degrees 0..max_n, of the wall-count generating
/// function x^3 (1 + x^2 - x^3 - x^4 + x^5) / ((1 + x)(1 - x)^2).
[[nodiscard]] std::vector<std::int64_t> series_coefficients(std::int64_t max_n);

/// Squared stability threshold max(0, 2k - n - 2) when the maximal collinear
/// subscheme has length k, 2 <= k <= n.
[[nodiscard]] Rational threshold_u(std::int64_t n, std::int64_t k);

/// Open u-interval along s = 0 between consecutive walls.
struct Chamber {
    std::string label;
    Rational u_lower;
    std::optional<Rational> u_upper;  // empty means unbounded

    friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// Chambers M_0 (top, unbounded) down to M_{wall_count(n)}.
[[nodiscard]] std::vector<Chamber> chambers(std::int64_t n);

struct EnumerationOptions {
    unsigned threads = 1;
};

/// Every numerical wall for v meeting the region that is produced by a
/// class w with |r_w| <= rank_bound such that
///   - discriminant(w) >= 0 and discriminant(v - w) >= 0,
///   - 0 < Im Z(w) < Im Z(v) at some point of the wall inside the region.
/// Walls are merged by shape and ordered as actual_walls orders them, with
/// walls that miss s = 0 appended by center.
///
/// Throws std::invalid_argument for rank_bound < 1 or negative discriminant(v),
/// and UnboundedSearchError when a candidate family is not finite in the
/// region.
[[nodiscard]] std::vector<Wall> enumerate_pseudo_walls(const ChernVector& v, const Region& region,
                                                       std::int64_t rank_bound,
                                                       const EnumerationOptions& options = {});

/// A rational point of the wall inside the region where some witness passes
/// the sandwich condition, or nullopt if there is none.
[[nodiscard]] std::optional<StabilityPoint> sample_point(const Wall& wall, const Region& region);

/// The two t = 0 endpoints center -/+ sqrt(radius_sq) of a circular wall.
[[nodiscard]] std::pair<QuadraticNumber, QuadraticNumber> t0_endpoints(const Circle& circle);

/// Walls crossing s = 0 first (decreasing u), then the rest by shape.
void sort_walls(std::vector<Wall>& walls);

}  // namespace bridgeland
