#include "bridgeland/walls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>
#include <set>
#include <tuple>

namespace bridgeland {

namespace {

// Sub-interval of the s-axis with rational endpoints.
struct SRange {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = false;

    [[nodiscard]] bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

    [[nodiscard]] bool contains(const Rational& s) const {
        const bool above = lo_closed ? s >= lo : s > lo;
        const bool below = hi_closed ? s <= hi : s < hi;
        return above && below;
    }

    // Intersect with the open half-line {s : a + b s > 0}.
    void require_positive(const Rational& a, const Rational& b) {
        if (b.sign() == 0) {
            if (a.sign() <= 0) {
                lo = Rational(1);
                hi = Rational(0);
            }
            return;
        }
        const Rational root = -a / b;
        if (b.sign() > 0) {
            if (root >= lo) {
                lo = root;
                lo_closed = false;
            }
        } else if (root <= hi) {
            hi = root;
            hi_closed = false;
        }
    }
};

// s-values in the region where 0 < Im Z(w) < Im Z(v).
SRange sandwich_range(const ChernVector& v, std::int64_t r_w, std::int64_t c_w, const Region& region) {
    SRange range{region.s_min(), region.s_max(), true, false};
    range.require_positive(Rational(c_w), Rational(-r_w));
    range.require_positive(Rational(v.c - c_w), Rational(-(v.r - r_w)));
    return range;
}

// Open interval (center + k_lo sqrt(q_lo), center + k_hi sqrt(q_hi)).
struct SurdInterval {
    Rational center;
    int k_lo;
    Rational q_lo;
    int k_hi;
    Rational q_hi;
};

// The s-values of a circle where 0 < u(s) (< u_max).
std::vector<SurdInterval> circle_pieces(const Circle& circle, const std::optional<Rational>& u_max) {
    const Rational& c = circle.center_s;
    const Rational& q = circle.radius_sq;
    if (!u_max || q <= *u_max) return {{c, -1, q, +1, q}};
    const Rational inner = q - *u_max;
    return {{c, -1, q, -1, inner}, {c, +1, inner, +1, q}};
}

bool range_meets(const SRange& range, const SurdInterval& piece) {
    if (range.empty()) return false;
    if (range.lo == range.hi) {
        return compare_to_surd(range.lo, piece.center, piece.k_lo, piece.q_lo) > 0 &&
               compare_to_surd(range.lo, piece.center, piece.k_hi, piece.q_hi) < 0;
    }
    return compare_to_surd(range.lo, piece.center, piece.k_hi, piece.q_hi) < 0 &&
           compare_to_surd(range.hi, piece.center, piece.k_lo, piece.q_lo) > 0;
}

bool wall_meets(const WallShape& shape, const SRange& range, const std::optional<Rational>& u_max) {
    if (range.empty()) return false;
    if (const auto* line = std::get_if<VerticalLine>(&shape)) return range.contains(line->s);
    for (const SurdInterval& piece : circle_pieces(std::get<Circle>(shape), u_max))
        if (range_meets(range, piece)) return true;
    return false;
}

double surd_value(const Rational& center, int k, const Rational& q) {
    return center.to_double() + k * std::sqrt(q.to_double());
}

bool inside_piece(const Rational& s, const SurdInterval& piece) {
    return compare_to_surd(s, piece.center, piece.k_lo, piece.q_lo) > 0 &&
           compare_to_surd(s, piece.center, piece.k_hi, piece.q_hi) < 0;
}

// Dyadic rational strictly inside range and piece.
std::optional<Rational> rational_inside(const SRange& range, const SurdInterval& piece) {
    const double lo = std::max(range.lo.to_double(), surd_value(piece.center, piece.k_lo, piece.q_lo));
    const double hi = std::min(range.hi.to_double(), surd_value(piece.center, piece.k_hi, piece.q_hi));
    const double mid = 0.5 * (lo + hi);
    for (int bits = 2; bits <= 40; ++bits) {
        const std::int64_t scale = std::int64_t{1} << bits;
        const Rational s(static_cast<std::int64_t>(std::llround(mid * static_cast<double>(scale))), scale);
        if (range.contains(s) && inside_piece(s, piece)) return s;
    }
    return std::nullopt;
}

template <typename T>
void tighten_lo(std::optional<T>& lo, T value) {
    if (!lo || value > *lo) lo = value;
}

template <typename T>
void tighten_hi(std::optional<T>& hi, T value) {
    if (!hi || value < *hi) hi = value;
}

using Hit = std::pair<WallShape, ChernVector>;

// All hits for one rank r_w of the candidate destabilizer.
std::vector<Hit> search_rank(const ChernVector& v, const Region& region, std::int64_t r_w) {
    std::vector<Hit> hits;
    const std::int64_t r_q = v.r - r_w;

    // 0 < c_w - r_w s and c_w < c_v - r_q s somewhere on [s_min, s_max].
    const Rational lower_c = std::min(Rational(r_w) * region.s_min(), Rational(r_w) * region.s_max());
    const Rational upper_c = std::max(Rational(v.c) - Rational(r_q) * region.s_min(),
                                      Rational(v.c) - Rational(r_q) * region.s_max());
    for (std::int64_t c_w = lower_c.floor() + 1; c_w <= upper_c.ceil() - 1; ++c_w) {
        const SRange range = sandwich_range(v, r_w, c_w, region);
        if (range.empty()) continue;
        const std::int64_t c_q = v.c - c_w;

        std::optional<std::int64_t> chi_lo;
        std::optional<std::int64_t> chi_hi;
        // discriminant(w) >= 0
        if (r_w > 0) tighten_hi(chi_hi, Rational(c_w * c_w, r_w).floor());
        if (r_w < 0) tighten_lo(chi_lo, Rational(c_w * c_w, r_w).ceil());
        // discriminant(v - w) >= 0
        if (r_q > 0) tighten_lo(chi_lo, (Rational(v.chi) - Rational(c_q * c_q, r_q)).ceil());
        if (r_q < 0) tighten_hi(chi_hi, (Rational(v.chi) - Rational(c_q * c_q, r_q)).floor());

        const std::int64_t lead = r_w * v.c - v.r * c_w;
        if (lead == 0) {
            // (r_w, c_w) is proportional to (r_v, c_v): the wall, if any, is the
            // vertical line s = c_v / r_v for every chi_w.
            if (v.r == 0 || !range.contains(Rational(v.c, v.r))) continue;
        } else {
            // On the wall u = (chi_w D_v - chi_v D_w) / lead - s^2 with
            // 0 < D_w < D_v, so u > 0 bounds chi_w on one side.
            if (lead > 0) tighten_lo(chi_lo, std::min<std::int64_t>(0, v.chi) + 1);
            else tighten_hi(chi_hi, std::max<std::int64_t>(0, v.chi) - 1);

            if (region.u_max()) {
                auto d_w = [&](const Rational& s) { return Rational(c_w) - Rational(r_w) * s; };
                auto d_v = [&](const Rational& s) { return Rational(v.c) - Rational(v.r) * s; };
                const Rational s_sq = std::max(range.lo * range.lo, range.hi * range.hi);
                const Rational dw_max = std::max(d_w(range.lo), d_w(range.hi));
                const Rational dv_min = std::min(d_v(range.lo), d_v(range.hi));
                if (dv_min.sign() > 0) {
                    const Rational base = Rational(lead) * (*region.u_max() + s_sq);
                    if (lead > 0)
                        tighten_hi(chi_hi, ((base + Rational(std::max<std::int64_t>(0, v.chi)) * dw_max) / dv_min).floor());
                    else
                        tighten_lo(chi_lo, ((base + Rational(std::min<std::int64_t>(0, v.chi)) * dw_max) / dv_min).ceil());
                }
            }
        }
        if (!chi_lo || !chi_hi)
            throw UnboundedSearchError("candidate family (r, c) = (" + std::to_string(r_w) + ", " + std::to_string(c_w) +
                                       ") has unbounded chi in the region; bound u to search it");

        for (std::int64_t chi_w = *chi_lo; chi_w <= *chi_hi; ++chi_w) {
            const ChernVector w{r_w, c_w, chi_w};
            const ChernVector quotient = v - w;
            if (w.is_zero() || quotient.is_zero()) continue;
            if (discriminant(w) < 0 || discriminant(quotient) < 0) continue;
            std::optional<Wall> wall = wall_between(v, w);
            if (!wall) continue;
            if (!wall_meets(wall->shape, range, region.u_max())) continue;
            hits.emplace_back(wall->shape, canonical_witness(v, w));
        }
    }
    return hits;
}

std::tuple<std::int64_t, std::int64_t, std::int64_t> magnitude_key(const ChernVector& w) {
    return {std::llabs(w.r), std::llabs(w.c), std::llabs(w.chi)};
}

}  // namespace

std::optional<Rational> Wall::u_at_s0() const {
    const auto* circle = std::get_if<Circle>(&shape);
    if (circle == nullptr) return std::nullopt;
    const Rational u = circle->radius_sq - circle->center_s * circle->center_s;
    if (u.sign() <= 0) return std::nullopt;
    return u;
}

bool Wall::has_witness(const ChernVector& w) const {
    const ChernVector key = canonical_witness(target, w);
    return std::find(witnesses.begin(), witnesses.end(), key) != witnesses.end();
}

Region::Region(Rational s_min, Rational s_max, std::optional<Rational> u_max)
    : s_min_(s_min), s_max_(s_max), u_max_(u_max) {
    if (!(s_min_ < s_max_))
        throw std::invalid_argument("region requires s_min < s_max, got " + s_min_.to_string() + " >= " + s_max_.to_string());
    if (u_max_ && u_max_->sign() <= 0) throw std::invalid_argument("region requires u_max > 0");
}

ChernVector canonical_witness(const ChernVector& v, const ChernVector& w) {
    const ChernVector other = v - w;
    const auto kw = magnitude_key(w);
    const auto ko = magnitude_key(other);
    if (kw != ko) return kw < ko ? w : other;
    return std::min(w, other);
}

std::optional<Wall> wall_between(const ChernVector& v, const ChernVector& w) {
    if (v.is_zero() || w.is_zero()) throw std::invalid_argument("wall_between: zero Chern vector");
    if (w.r == 0 && w.c == 0) return std::nullopt;
    const std::int64_t lead = w.r * v.c - v.r * w.c;
    const std::int64_t linear = v.r * w.chi - w.r * v.chi;
    const std::int64_t constant = v.chi * w.c - w.chi * v.c;
    Wall wall{Circle{}, v, {canonical_witness(v, w)}};
    if (lead == 0) {
        if (linear == 0) return std::nullopt;
        wall.shape = VerticalLine{Rational(-constant, linear)};
        return wall;
    }
    const Rational center(-linear, 2 * lead);
    const Rational radius_sq = center * center - Rational(constant, lead);
    if (radius_sq.sign() <= 0) return std::nullopt;
    wall.shape = Circle{center, radius_sq};
    return wall;
}

Wall rank_one_wall(std::int64_t n, std::int64_t m) {
    if (n < 3) throw std::invalid_argument("rank_one_wall: n must be at least 3");
    if (m < 0 || 2 * m >= n - 2)
        throw std::invalid_argument("rank_one_wall: need 0 <= m < (n-2)/2, got n=" + std::to_string(n) +
                                    " m=" + std::to_string(m));
    return *wall_between(twisted_ideal_class(n), {1, 1, 1 - m});
}

std::vector<Wall> actual_walls(std::int64_t n) {
    std::vector<Wall> walls;
    if (n < 3) return walls;
    for (std::int64_t m = 0; 2 * m < n - 2; ++m) walls.push_back(rank_one_wall(n, m));
    // ch(E^0) = (2, l, 0) occurs only for n = 5.
    if (n == 5) walls.push_back(*wall_between(twisted_ideal_class(5), {2, 1, 0}));
    sort_walls(walls);
    return walls;
}

std::int64_t wall_count(std::int64_t n) {
    if (n == 5) return 3;
    if (n <= 2) return 0;
    return (n - 1) / 2;
}

std::vector<std::int64_t> series_coefficients(std::int64_t max_n) {
    if (max_n < 0) throw std::invalid_argument("series_coefficients: max_n must be non-negative");
    // x^3 (1 + x^2 - x^3 - x^4 + x^5)
    const std::vector<std::int64_t> numerator{0, 0, 0, 1, 0, 1, -1, -1, 1};
    // (1 + x)(1 - x)^2 expanded
    std::vector<std::int64_t> denominator{1};
    for (const std::vector<std::int64_t>& factor : {std::vector<std::int64_t>{1, 1}, {1, -1}, {1, -1}}) {
        std::vector<std::int64_t> product(denominator.size() + factor.size() - 1, 0);
        for (std::size_t i = 0; i < denominator.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j) product[i + j] += denominator[i] * factor[j];
        denominator = std::move(product);
    }
    std::vector<std::int64_t> coefficients(static_cast<std::size_t>(max_n) + 1, 0);
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        std::int64_t value = k < numerator.size() ? numerator[k] : 0;
        for (std::size_t j = 1; j < denominator.size() && j <= k; ++j) value -= denominator[j] * coefficients[k - j];
        coefficients[k] = value;  // leading denominator coefficient is 1
    }
    return coefficients;
}

Rational threshold_u(std::int64_t n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("threshold_u: n must be positive");
    if (k < 2 || k > n)
        throw std::invalid_argument("threshold_u: collinear length k must satisfy 2 <= k <= n, got k=" + std::to_string(k));
    return Rational(std::max<std::int64_t>(0, 2 * k - n - 2));
}

std::vector<Chamber> chambers(std::int64_t n) {
    std::vector<Chamber> out;
    std::optional<Rational> upper;
    std::int64_t index = 0;
    for (const Wall& wall : actual_walls(n)) {
        const Rational u = *wall.u_at_s0();
        out.push_back({"M_" + std::to_string(index++), u, upper});
        upper = u;
    }
    out.push_back({"M_" + std::to_string(index), Rational(0), upper});
    return out;
}

std::vector<Wall> enumerate_pseudo_walls(const ChernVector& v, const Region& region, std::int64_t rank_bound,
                                         const EnumerationOptions& options) {
    if (rank_bound < 1) throw std::invalid_argument("enumerate_pseudo_walls: rank_bound must be at least 1");
    if (v.is_zero()) throw std::invalid_argument("enumerate_pseudo_walls: zero Chern vector");
    if (discriminant(v) < 0) throw std::invalid_argument("enumerate_pseudo_walls: negative discriminant for " + v.to_string());

    const unsigned workers = std::max(1u, options.threads);
    std::vector<std::vector<Hit>> partial;
    if (workers == 1) {
        for (std::int64_t r_w = -rank_bound; r_w <= rank_bound; ++r_w) partial.push_back(search_rank(v, region, r_w));
    } else {
        std::vector<std::future<std::vector<Hit>>> tasks;
        for (unsigned worker = 0; worker < workers; ++worker) {
            tasks.push_back(std::async(std::launch::async, [&, worker] {
                std::vector<Hit> hits;
                for (std::int64_t r_w = -rank_bound + worker; r_w <= rank_bound; r_w += workers) {
                    std::vector<Hit> more = search_rank(v, region, r_w);
                    hits.insert(hits.end(), more.begin(), more.end());
                }
                return hits;
            }));
        }
        for (auto& task : tasks) partial.push_back(task.get());
    }

    std::map<WallShape, std::set<ChernVector>> merged;
    for (const auto& hits : partial)
        for (const auto& [shape, witness] : hits) merged[shape].insert(witness);

    std::vector<Wall> walls;
    for (auto& [shape, witnesses] : merged) walls.push_back({shape, v, {witnesses.begin(), witnesses.end()}});
    sort_walls(walls);
    return walls;
}

std::optional<StabilityPoint> sample_point(const Wall& wall, const Region& region) {
    for (const ChernVector& w : wall.witnesses) {
        const SRange range = sandwich_range(wall.target, w.r, w.c, region);
        if (range.empty()) continue;
        if (const auto* line = std::get_if<VerticalLine>(&wall.shape)) {
            if (!range.contains(line->s)) continue;
            const Rational u = region.u_max() ? *region.u_max() / Rational(2) : Rational(1);
            return StabilityPoint(line->s, u);
        }
        const Circle& circle = std::get<Circle>(wall.shape);
        for (const SurdInterval& piece : circle_pieces(circle, region.u_max())) {
            if (!range_meets(range, piece)) continue;
            if (auto s = rational_inside(range, piece)) {
                const Rational offset = *s - circle.center_s;
                return StabilityPoint(*s, circle.radius_sq - offset * offset);
            }
        }
    }
    return std::nullopt;
}

std::pair<QuadraticNumber, QuadraticNumber> t0_endpoints(const Circle& circle) {
    return {QuadraticNumber(circle.center_s, Rational(-1), circle.radius_sq),
            QuadraticNumber(circle.center_s, Rational(1), circle.radius_sq)};
}

void sort_walls(std::vector<Wall>& walls) {
    auto position = [](const WallShape& shape) {
        if (const auto* line = std::get_if<VerticalLine>(&shape)) return line->s;
        return std::get<Circle>(shape).center_s;
    };
    std::stable_sort(walls.begin(), walls.end(), [&](const Wall& a, const Wall& b) {
        const auto ua = a.u_at_s0();
        const auto ub = b.u_at_s0();
        if (ua && ub) return *ua > *ub;
        if (ua || ub) return ua.has_value();
        const Rational pa = position(a.shape);
        const Rational pb = position(b.shape);
        if (pa != pb) return pa < pb;
        return a.shape < b.shape;
    });
}

}  // namespace bridgeland
