#include "doctest.h"

#include <stdexcept>

#include "bridgeland/surgery.hpp"
#include "oracles.hpp"

using namespace bridgeland;

namespace {

bool has_flag(const FlopRecord& record, const char* prefix) {
    for (const std::string& flag : record.flags)
        if (flag.rfind(prefix, 0) == 0) return true;
    return false;
}

TorusPoint random_point() {
    std::array<Rational, 4> coords;
    for (Rational& x : coords) x = Rational(oracle::uniform(-40, 40), oracle::uniform(1, 24));
    return TorusPoint(coords);
}

TorusQuadruple random_quadruple() {
    return {random_point(), random_point(), random_point(), random_point()};
}

TorusQuadruple add(const TorusQuadruple& a, const TorusQuadruple& b) {
    TorusQuadruple out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<std::vector<std::int64_t>> as_rows(const IntMatrix4& m) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : m) rows.emplace_back(row.begin(), row.end());
    return rows;
}

}  // namespace

TEST_CASE("rank one flop records") {
    for (std::int64_t n = 3; n <= 20; ++n) {
        for (std::int64_t m = 0; 2 * m < n - 2; ++m) {
            const FlopRecord record = flop_record(n, m);
            CHECK(record.e1_class == ChernVector{1, 1, 1 - m});
            CHECK(record.e2_class == ChernVector{0, 1, 3 - n + m});
            CHECK(record.e1_class + record.e2_class == twisted_ideal_class(n));
            CHECK(record.dim_B1 == 2 * m + 2);
            CHECK(record.dim_B2 == 4);
            CHECK(record.N == n - m - 2);
            CHECK(record.N == -euler_pairing(record.e1_class, record.e2_class) - 1);
            CHECK(record.dim_P == n + m + 4);
            CHECK(record.dim_P == record.dim_B1 + record.dim_B2 + record.N);
            CHECK(record.codim == n - m - 2);
            CHECK(record.wall.same_shape(rank_one_wall(n, m)));
            CHECK(has_flag(record, kFlagFlopHypothesis) == (record.N <= 1));
            if (n >= 4) CHECK(record.N > 1);
        }
    }
}

TEST_CASE("the n = 3 wall is a P^1 bundle divisor") {
    const FlopRecord record = flop_record(3, 0);
    CHECK(record.N == 1);
    CHECK(record.dim_B1 == 2);
    CHECK(record.dim_B2 == 4);
    CHECK(record.dim_P == 7);
    CHECK(record.codim == 1);
    CHECK(has_flag(record, kFlagFlopHypothesis));
}

TEST_CASE("n = 5 records") {
    CHECK(flop_record(5, 0).codim == 3);
    CHECK(flop_record(5, 1).codim == 2);
    const FlopRecord higher = flop_record(5, 2);
    CHECK(higher.e1_class == ChernVector{2, 1, 0});
    CHECK(higher.e2_class == ChernVector{-1, 1, -1});
    CHECK(higher.dim_B1 == 4);
    CHECK(higher.dim_B2 == 2);
    CHECK(higher.N == 3);
    CHECK(higher.dim_P == 9);
    CHECK(higher.codim == 3);
    CHECK(higher.wall.u_at_s0() == Rational(1, 3));
    CHECK(has_flag(higher, kFlagCodimDiscrepancy));
    CHECK_FALSE(has_flag(higher, kFlagFlopHypothesis));
    CHECK_THROWS_AS((void)flop_record(5, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)flop_record(5, -1), std::invalid_argument);
    CHECK_THROWS_AS((void)flop_record(2, 0), std::invalid_argument);
}

TEST_CASE("moduli chains") {
    const ModuliChain five = moduli_chain(5);
    CHECK(five.chambers.size() == 4);
    CHECK(five.records.size() == 3);
    CHECK(five.ambient_dim == 12);
    const ModuliChain zero = moduli_chain(0);
    CHECK(zero.chambers.size() == 1);
    CHECK(zero.records.empty());
    CHECK(zero.ambient_dim == 2);
    const ModuliChain four = moduli_chain(4);
    CHECK(four.chambers.size() == 2);
    REQUIRE(four.records.size() == 1);
    CHECK(four.records[0].codim == 2);
    for (std::int64_t n = 0; n <= 20; ++n) {
        const ModuliChain chain = moduli_chain(n);
        CHECK(static_cast<std::int64_t>(chain.records.size()) == wall_count(n));
        CHECK(chain.ambient_dim == 2 * n + 2);
        for (std::size_t i = 0; i < chain.records.size(); ++i) {
            const FlopRecord& record = chain.records[i];
            CHECK(record.e1_class + record.e2_class == twisted_ideal_class(n));
            CHECK(record.dim_B1 == moduli_dim(record.e1_class));
            CHECK(record.dim_B2 == moduli_dim(record.e2_class));
            CHECK(record.codim == chain.ambient_dim - record.dim_P);
            // records line up with the chamber boundaries
            CHECK(record.wall.u_at_s0() == chain.chambers[i].u_lower);
        }
    }
    CHECK_THROWS_AS((void)moduli_chain(-1), std::invalid_argument);
}

TEST_CASE("torus points") {
    const TorusPoint p({Rational(3, 2), Rational(-1, 3), Rational(0), Rational(7)});
    CHECK(p.coords() == std::array<Rational, 4>{Rational(1, 2), Rational(2, 3), Rational(0), Rational(0)});
    CHECK(p + (-p) == TorusPoint());
    CHECK(2 * p == TorusPoint({Rational(0), Rational(1, 3), Rational(0), Rational(0)}));
    for (int i = 0; i < 200; ++i) {
        const TorusPoint a = random_point();
        for (const Rational& x : a.coords()) {
            CHECK(x >= Rational(0));
            CHECK(x < Rational(1));
        }
    }
}

TEST_CASE("n = 3 matrix") {
    const IntMatrix4 m = n3_matrix();
    CHECK(m[0] == std::array<std::int64_t, 4>{-1, -1, 0, -1});
    CHECK(m[1] == std::array<std::int64_t, 4>{0, -1, -1, -1});
    CHECK(m[2] == std::array<std::int64_t, 4>{-1, 0, -1, -1});
    CHECK(m[3] == std::array<std::int64_t, 4>{1, 1, 1, 1});
    CHECK(m[3][3] == 1);
    CHECK(oracle::cofactor_det(as_rows(m)) == 1);
    CHECK(determinant(m) == 1);
    const IntMatrix4 expected_inverse{{{0, 1, 0, 1}, {0, 0, 1, 1}, {1, 0, 0, 1}, {-1, -1, -1, -2}}};
    CHECK(unimodular_inverse(m) == expected_inverse);
    CHECK(unimodular_inverse(expected_inverse) == m);
}

TEST_CASE("determinant against cofactor expansion") {
    for (int i = 0; i < 300; ++i) {
        IntMatrix4 m;
        for (auto& row : m)
            for (auto& x : row) x = oracle::uniform(-5, 5);
        CHECK(determinant(m) == oracle::cofactor_det(as_rows(m)));
    }
    IntMatrix4 singular{{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}, {1, 0, 0, 0}}};
    CHECK(determinant(singular) == 0);
    CHECK_THROWS_AS((void)unimodular_inverse(singular), std::domain_error);
}

TEST_CASE("n = 3 isomorphism on torus quadruples") {
    CHECK(n3_iso_apply({}) == TorusQuadruple{});
    const TorusPoint half({Rational(1, 2), Rational(0), Rational(0), Rational(0)});
    const TorusQuadruple image = n3_iso_apply({half, TorusPoint(), TorusPoint(), TorusPoint()});
    // column 1 of the matrix is (-1, 0, -1, 1); -1/2 = 1/2 mod 1
    CHECK(image == TorusQuadruple{half, TorusPoint(), half, half});

    const TorusQuadruple gen = random_quadruple();
    const auto& [p, q, y, x] = gen;
    CHECK(n3_iso_apply(gen) == TorusQuadruple{-p + -q + -x, -q + -y + -x, -p + -y + -x, p + q + y + x});

    const IntMatrix4 inverse = unimodular_inverse(n3_matrix());
    for (int i = 0; i < 1000; ++i) {
        const TorusQuadruple a = random_quadruple();
        const TorusQuadruple b = random_quadruple();
        CHECK(n3_iso_apply(add(a, b)) == add(n3_iso_apply(a), n3_iso_apply(b)));
        CHECK(apply_matrix(inverse, n3_iso_apply(a)) == a);
        CHECK(n3_iso_apply(apply_matrix(inverse, a)) == a);
    }
}
