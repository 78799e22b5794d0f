#include <doctest.h>

#include "fragmenta/krylov.hpp"
#include "fragmenta/models.hpp"

using namespace fragmenta;

TEST_CASE("TFIM_QF carries the N=3 orbit projectors") {
    auto psis = qf_projector_states(ModelKind::TFIM_QF, 3);
    REQUIRE(psis.size() == 3);
    // |psi^1> = |01> + |12> + |20>
    ChainGeometry two(2, 3);
    ExactVector psi1(9);
    psi1.set(encode(ProductState::from_string("01"), two), ExactScalar(1));
    psi1.set(encode(ProductState::from_string("12"), two), ExactScalar(1));
    psi1.set(encode(ProductState::from_string("20"), two), ExactScalar(1));
    CHECK(psis[1] == psi1);
}

TEST_CASE("TJZ_QF at L=2: plus state annihilated, minus state has eigenvalue 2") {
    ModelId id{ModelKind::TJZ_QF, 3, 2, Boundary::open, {}, {}, {}};
    ExactOperator H = build_model(id);
    ChainGeometry geom(2, 3);
    ExactVector plus = basis_vector(geom, "01") + basis_vector(geom, "10");
    ExactVector minus = basis_vector(geom, "01") - basis_vector(geom, "10");
    CHECK(H.apply(plus).is_zero());
    CHECK(H.apply(minus) == minus.scaled(ExactScalar(2)));
}

TEST_CASE("DIPOLE3_QF at L=3 annihilates the difference vectors") {
    ModelId id{ModelKind::DIPOLE3_QF, 3, 3, Boundary::open, {}, {}, {}};
    ExactOperator H = build_model(id);
    ChainGeometry geom(3, 3);
    // |+-+> - |0+0> with digits -/0/+ = 0/1/2
    ExactVector v = basis_vector(geom, "202") - basis_vector(geom, "121");
    CHECK(H.apply(v).is_zero());
    ExactVector w = basis_vector(geom, "201") - basis_vector(geom, "120");  // |+-0> - |0+->
    CHECK(H.apply(w).is_zero());
}

TEST_CASE("every QF model is an exact sum of stored projectors") {
    struct Case {
        ModelKind kind;
        int N, L, range;
    };
    for (const Case& c : {Case{ModelKind::TJZ_QF, 3, 3, 1}, Case{ModelKind::DIPOLE3_QF, 3, 4, 2},
                          Case{ModelKind::TFIM_QF, 3, 3, 1}}) {
        ModelId id{c.kind, c.N, c.L, Boundary::open, {}, {}, {}};
        ExactOperator H = build_model(id);
        ChainGeometry geom(c.L, c.N);
        ExactOperator rebuilt(H.dim);
        for (const auto& psi : qf_projector_states(c.kind, c.N)) {
            for (int x = 0; x < geom.num_bonds(c.range); ++x) {
                ExactOperator term = embed_window_operator(outer_projector(psi), x, c.range, geom);
                rebuilt = rebuilt + term;
            }
        }
        CHECK(operator_equal(H, rebuilt));
        // positive semidefinite by construction: every kernel vector is a ground state
        CHECK(H.is_hermitian());
    }
}

TEST_CASE("controlled subtraction acts as |a, b-a mod N>") {
    ChainGeometry geom(2, 3);
    auto image = controlled_subtraction_permutation(3, 2);
    std::int64_t in = encode(ProductState::from_string("21"), geom);
    std::int64_t out = encode(ProductState::from_string("22"), geom);  // 1 - 2 = 2 mod 3
    CHECK(image[in] == out);
}

TEST_CASE("U maps the orbit superposition to |+> x |a>") {
    const int N = 3;
    ChainGeometry geom(2, N);
    ExactOperator U = controlled_subtraction_circuit(N, 2);
    auto psis = qf_projector_states(ModelKind::TFIM_QF, N);
    for (int a = 0; a < N; ++a) {
        ExactVector expect(9);
        for (int n = 0; n < N; ++n)
            expect.set(encode(ProductState({n, a}), geom), ExactScalar(1));
        CHECK(U.apply(psis[a]) == expect);
    }
}

TEST_CASE("the sequential circuit is a permutation matrix") {
    ExactOperator c = controlled_subtraction_circuit(3, 4);
    // exactly one unit entry per row and per column, all 81 columns
    std::vector<int> col_hits(c.dim, 0);
    for (std::int64_t i = 0; i < c.dim; ++i) {
        CHECK(c.rows[i].size() == 1);
        for (const auto& [j, v] : c.rows[i]) {
            CHECK(v == ExactScalar(1));
            col_hits[j] += 1;
        }
    }
    for (int hits : col_hits) CHECK(hits == 1);
}

TEST_CASE("TFIM builds Hermitian for N in {2,3,4} and rejects N=5") {
    for (int N : {2, 3, 4}) {
        ModelId id{ModelKind::TFIM, N, 3, Boundary::open, {}, {}, {}};
        CHECK(build_model(id).is_hermitian());
    }
    ModelId bad{ModelKind::TFIM, 5, 3, Boundary::open, {}, {}, {}};
    CHECK_THROWS_AS(build_model(bad), Error);
}

TEST_CASE("k=1 diagonal IOM counts spins") {
    ChainGeometry geom(2, 3);
    ExactOperator M = tjz_iom({1}, {1}, geom);  // sum_j |up><up|_j
    ExactVector v = basis_vector(geom, "11");
    CHECK(M.apply(v) == v.scaled(ExactScalar(2)));
    CHECK(M.apply(basis_vector(geom, "00")).is_zero());
}

TEST_CASE("off-diagonal IOMs do not commute with each other") {
    ChainGeometry geom(2, 3);
    ExactOperator m1 = tjz_iom({1}, {2}, geom);
    ExactOperator m2 = tjz_iom({2}, {1}, geom);
    CHECK_FALSE(commutator(m1, m2).is_zero());
}

TEST_CASE("PF with generic symmetric couplings") {
    std::vector<std::vector<Rational>> g = {{make_rational(1), make_rational(1, 2), make_rational(2)},
                                            {make_rational(1, 2), make_rational(3), make_rational(1, 3)},
                                            {make_rational(2), make_rational(1, 3), make_rational(1)}};
    ModelId id{ModelKind::PF, 3, 3, Boundary::open, {}, {}, g};
    ExactOperator H = build_model(id);
    CHECK(H.is_hermitian());
    // connectivity (and hence the sector structure) is coupling-independent
    ChainGeometry geom(3, 3);
    ModelId plain{ModelKind::PF, 3, 3, Boundary::open, {}, {}, {}};
    CHECK(cf_sectors(H, geom).size() == cf_sectors(build_model(plain), geom).size());

    std::vector<std::vector<Rational>> asym = g;
    asym[0][1] = make_rational(5);
    ModelId bad{ModelKind::PF, 3, 3, Boundary::open, {}, {}, asym};
    CHECK_THROWS_AS(build_model(bad), Error);
}

TEST_CASE("model parameter validation") {
    ModelId bad{ModelKind::TJZ, 2, 3, Boundary::open, {}, {}, {}};
    CHECK_THROWS_AS(build_model(bad), Error);
    ModelId badJ{ModelKind::TL, 2, 3, Boundary::open, {Rational(1)}, {}, {}};
    CHECK_THROWS_AS(build_model(badJ), Error);
}
