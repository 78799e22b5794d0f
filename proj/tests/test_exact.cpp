#include <doctest.h>

#include <random>

#include "fragmenta/exact.hpp"

using namespace fragmenta;

TEST_CASE("scalar arithmetic over Gaussian rationals") {
    ExactScalar a(make_rational(1, 3), make_rational(1, 2));
    ExactScalar b(make_rational(2, 5), make_rational(-1, 4));
    CHECK((a * b).re == make_rational(1, 3) * make_rational(2, 5) +
                            make_rational(1, 2) * make_rational(1, 4));
    CHECK(((a / b) * b) == a);
    CHECK(quarter_phase(1) * quarter_phase(1) == ExactScalar(-1));
    CHECK(quarter_phase(3) == quarter_phase(-1));
    CHECK(a.conj().conj() == a);
}

TEST_CASE("sparse vectors drop stored zeros") {
    ExactVector v(4);
    v.set(1, ExactScalar(2));
    v.add(1, ExactScalar(-2));
    CHECK(v.is_zero());
    v.set(2, ExactScalar::unit_i());
    CHECK(v.norm2() == 1);
    CHECK(v.inner(v) == ExactScalar(1));
}

TEST_CASE("operator apply and hermiticity") {
    ExactOperator h(2);
    h.add(0, 1, ExactScalar::unit_i());
    CHECK_FALSE(h.is_hermitian());
    h.add(1, 0, -ExactScalar::unit_i());
    CHECK(h.is_hermitian());
    ExactVector v(2);
    v.set(0, ExactScalar(1));
    v.set(1, ExactScalar(1));
    ExactVector hv = h.apply(v);
    CHECK(hv.get(0) == ExactScalar::unit_i());
    CHECK(hv.get(1) == -ExactScalar::unit_i());
}

TEST_CASE("apply distributes over addition on random exact vectors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    ExactOperator h(6);
    for (int t = 0; t < 12; ++t) h.add(rng() % 6, rng() % 6, ExactScalar(coef(rng)));
    for (int trial = 0; trial < 20; ++trial) {
        ExactVector a(6), b(6);
        for (int i = 0; i < 6; ++i) {
            a.set(i, ExactScalar(coef(rng)));
            b.set(i, ExactScalar(coef(rng), make_rational(coef(rng), 2)));
        }
        CHECK(h.apply(a + b) == h.apply(a) + h.apply(b));
    }
}

TEST_CASE("rank and nullity by fraction-free elimination") {
    // 3x3 with rank 2
    ExactOperator m(3);
    m.add(0, 0, ExactScalar(1));
    m.add(0, 1, ExactScalar(2));
    m.add(1, 1, ExactScalar(1));
    m.add(2, 0, ExactScalar(2));
    m.add(2, 1, ExactScalar(5));
    CHECK(exact_rank(m) == 2);
    CHECK(kernel_dimension(m) == 1);
    CHECK(kernel_dimension(m) + exact_rank(m) == m.dim);
}

TEST_CASE("complex rank agrees with the modular certificate") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ExactVector> rows;
        for (int i = 0; i < 8; ++i) {
            ExactVector v(12);
            for (int j = 0; j < 12; ++j)
                v.set(j, ExactScalar(coef(rng), Rational(coef(rng))));
            rows.push_back(v);
        }
        // duplicate a row to force dependence
        rows.push_back(rows.front());
        int exact = exact_rank(rows);
        CHECK(exact <= 8);
        CHECK(modular_rank(rows) <= exact);
    }
}

TEST_CASE("echelon span membership") {
    ExactEchelon ech(3);
    ExactVector a(3), b(3), c(3);
    a.set(0, ExactScalar(1));
    a.set(1, ExactScalar(1));
    b.set(1, ExactScalar(1));
    b.set(2, ExactScalar(1));
    c.set(0, ExactScalar(1));
    c.set(2, ExactScalar(-1));
    CHECK(ech.insert(a));
    CHECK(ech.insert(b));
    CHECK(ech.contains(c));  // c = a - b
    CHECK_FALSE(ech.insert(c));
    ExactVector d(3);
    d.set(2, ExactScalar(1));
    CHECK_FALSE(ech.contains(d));
}

TEST_CASE("projector from an outer product") {
    ExactVector v(3);
    v.set(0, ExactScalar(1));
    v.set(2, ExactScalar(-1));
    ExactOperator p = outer_projector(v);
    CHECK(p.is_hermitian());
    CHECK(p.apply(v) == v.scaled(ExactScalar(2)));  // <v|v> = 2 on the unnormalized vector
}
