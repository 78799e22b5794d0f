#include <doctest.h>

#include "fragmenta/frozen.hpp"
#include "fragmenta/models.hpp"

using namespace fragmenta;

namespace {

ExactOperator tl_op(int N, int L, Boundary b = Boundary::open) {
    ModelId id{ModelKind::TL, N, L, b, {}, {}, {}};
    return build_model(id);
}

}  // namespace

TEST_CASE("TL segments reproduce the worked displays") {
    SUBCASE("psi^{(0)}_3 = |000> - |110> - |011>") {
        ChainGeometry geom(3, 2);
        IrreducibleString s;
        s.colors = {0};
        ExactVector v = tl_segment(s, {0, 1}, 3, 2);
        ExactVector expect = state_sum(geom, {{ExactScalar(1), "000"},
                                              {ExactScalar(-1), "110"},
                                              {ExactScalar(-1), "011"}});
        CHECK(v == expect);
        CHECK(tl_op(2, 3).apply(v).is_zero());
    }
    SUBCASE("product segment when the label spans the chain") {
        ChainGeometry geom(2, 2);
        IrreducibleString s;
        s.colors = {0, 1};
        CHECK(tl_segment(s, {0, 1}, 2, 2) == basis_vector(geom, "01"));
    }
    SUBCASE("psi^{(empty)}_4: the six-term display") {
        ChainGeometry geom(4, 2);
        ExactVector v = tl_segment({}, {0, 1}, 4, 2);
        ExactVector expect = state_sum(
            geom, {{ExactScalar(1), "0000"},
                   {ExactScalar(-1), "1100"},
                   {ExactScalar(-1), "0110"},
                   {ExactScalar(-1), "0011"},
                   {ExactScalar(1), "1111"},
                   {ExactScalar(-1), "1001"}});
        CHECK(v == expect);
        CHECK(tl_op(2, 4).apply(v).is_zero());
    }
    SUBCASE("two-color restriction inside a larger palette") {
        ExactVector v = tl_segment({}, {0, 2}, 4, 3);
        CHECK(tl_op(3, 4).apply(v).is_zero());
        for (const auto& [idx, amp] : v.entries) {
            ChainGeometry geom(4, 3);
            for (int d : decode(idx, geom).digits) CHECK(d != 1);
        }
    }
    SUBCASE("invariant violations are rejected") {
        IrreducibleString s;
        s.colors = {0, 1};
        CHECK_THROWS_AS(tl_segment(s, {0, 1}, 3, 2), ConstraintViolation);  // parity mismatch
        CHECK_THROWS_AS(tl_segment(s, {0, 2}, 4, 3), ConstraintViolation);  // label outside colors
    }
}

TEST_CASE("frozen construction from classical sectors") {
    SUBCASE("alternating signs require a bipartite sector") {
        ChainGeometry geom(3, 3, Boundary::periodic);
        ModelId cf{ModelKind::TJZ, 3, 3, Boundary::periodic, {}, {}, {}};
        ModelId qf{ModelKind::TJZ_QF, 3, 3, Boundary::periodic, {}, {}, {}};
        ExactOperator H_cf = build_model(cf);
        ExactOperator H_qf = build_model(qf);
        std::int64_t seed = encode(ProductState::from_string("100"), geom);
        CHECK_THROWS_AS(build_frozen(H_cf, H_qf, seed, PhasePolicy::Theta::zero), FrustrationError);
        ExactVector v = build_frozen(H_cf, H_qf, seed, PhasePolicy::Theta::pi);
        CHECK(v.nnz() == 3);
        CHECK(H_qf.apply(v).is_zero());
    }
    SUBCASE("dipole sectors carry alternating signs") {
        ChainGeometry geom(5, 3);
        ModelId cf{ModelKind::DIPOLE3, 3, 5, Boundary::open, {}, {}, {}};
        ModelId qf{ModelKind::DIPOLE3_QF, 3, 5, Boundary::open, {}, {}, {}};
        ExactOperator H_cf = build_model(cf);
        ExactOperator H_qf = build_model(qf);
        std::int64_t seed = encode(ProductState::from_string("02020"), geom);
        ExactVector v = build_frozen(H_cf, H_qf, seed, PhasePolicy::Theta::zero);
        CHECK(H_qf.apply(v).is_zero());
    }
}

TEST_CASE("segment composition and its constraints") {
    SUBCASE("dimerless compositions are annihilated") {
        ExactVector v = compose({entangled_segment("", {0, 1}, 2), product_segment("2")}, 3);
        CHECK(tl_op(3, 3).apply(v).is_zero());
        ExactVector w = compose({entangled_segment("0", {0, 1}, 3), product_segment("2")}, 3);
        CHECK(tl_op(3, 4).apply(w).is_zero());
    }
    SUBCASE("intersecting color sets are rejected with the violated constraint") {
        CHECK_THROWS_WITH_AS(
            compose({entangled_segment("", {0, 1}, 2), entangled_segment("", {0, 2}, 2)}, 3),
            doctest::Contains("shared color 0"), ConstraintViolation);
    }
    SUBCASE("product boundary colors must avoid the entangled neighbor") {
        CHECK_THROWS_AS(compose({product_segment("10"), entangled_segment("", {0, 2}, 2)}, 3),
                        ConstraintViolation);
    }
}

TEST_CASE("omega basis sizes and ranks") {
    SUBCASE("L=2, N=2 reproduces the four-element display") {
        ChainGeometry geom(2, 2);
        auto omega = omega_basis(geom);
        REQUIRE(omega.size() == 4);
        ExactVector dimer = basis_vector(geom, "00") + basis_vector(geom, "11");
        ExactVector ent = basis_vector(geom, "00") - basis_vector(geom, "11");
        int found = 0;
        for (const auto& v : omega)
            if (v == dimer || v == ent || v == basis_vector(geom, "01") ||
                v == basis_vector(geom, "10"))
                ++found;
        CHECK(found == 4);
    }
    SUBCASE("N=2 counts are 2^L with full rank") {
        for (int L = 1; L <= 8; ++L) {
            ChainGeometry geom(L, 2);
            auto omega = omega_basis(geom);
            CHECK(omega.size() == (1u << L));
            CHECK(exact_rank(omega) == (1 << L));
        }
    }
    SUBCASE("N=3 is overcomplete but spanning at L=3 and L=4") {
        for (int L : {3, 4}) {
            ChainGeometry geom(L, 3);
            auto omega = omega_basis(geom);
            CHECK(static_cast<std::int64_t>(omega.size()) > geom.hilbert_dim());
            CHECK(exact_rank(omega) == geom.hilbert_dim());
        }
    }
    SUBCASE("three colors admit frozen states beyond the labeled compositions") {
        // (|00>-|11>)(|00>-|22>) - |0110> is annihilated on four sites but no
        // tensor product of color-compatible segments reaches it; the gap
        // fillings therefore complete each region to its full frozen space
        ChainGeometry geom(4, 3);
        ExactVector v = state_sum(geom, {{ExactScalar(1), "0000"},
                                         {ExactScalar(-1), "0022"},
                                         {ExactScalar(-1), "1100"},
                                         {ExactScalar(1), "1122"},
                                         {ExactScalar(-1), "0110"}});
        CHECK(tl_op(3, 4).apply(v).is_zero());
        auto omega = omega_basis(geom);
        ExactEchelon span(geom.hilbert_dim());
        for (const auto& w : omega) span.insert(w);
        CHECK(span.contains(v));
    }
}

TEST_CASE("ghz frozen states") {
    SUBCASE("L=3 amplitudes follow the weight rule") {
        ExactVector psi = ghz_frozen(3, 1);
        ChainGeometry geom(3, 2, Boundary::periodic);
        CHECK(psi.get(encode(ProductState::from_string("000"), geom)) == ExactScalar(1));
        CHECK(psi.get(encode(ProductState::from_string("011"), geom)) == ExactScalar(-1));
        CHECK(psi.get(encode(ProductState::from_string("110"), geom)) == ExactScalar(-1));
        CHECK(psi.get(encode(ProductState::from_string("001"), geom)).is_zero());
    }
    SUBCASE("annihilated under PBC for L = 3, 5") {
        for (int L : {3, 5}) {
            for (int parity : {1, -1}) {
                ExactVector psi = ghz_frozen(L, parity);
                CHECK(tl_op(2, L, Boundary::periodic).apply(psi).is_zero());
            }
        }
    }
    SUBCASE("even L and even parity arguments are rejected") {
        CHECK_THROWS_AS(ghz_frozen(4, 1), Error);
        CHECK_THROWS_AS(ghz_frozen(3, 0), Error);
    }
}

TEST_CASE("fusion worked examples and the mirror rule") {
    SUBCASE("complete fusion") {
        // psi^{(01)}_2 is the frozen product |01>
        SectorLabel out = fuse(entangled_segment("10", {0, 1}, 4), product_segment("01"));
        CHECK(out.dimer_count == 2);
        REQUIRE(out.segments.size() == 1);
        CHECK(out.segments[0].label.empty());
        CHECK(out.segments[0].length == 2);
    }
    SUBCASE("partial fusion") {
        SectorLabel out = fuse(entangled_segment("10", {0, 1}, 4), product_segment("02"));
        CHECK(out.dimer_count == 1);
        REQUIRE(out.segments.size() == 2);
        CHECK(out.segments[0].label.str() == "1");
        CHECK(out.segments[0].length == 3);
        CHECK(out.segments[1].label.str() == "2");
    }
    SUBCASE("disjoint colors stay frozen") {
        SectorLabel out = fuse(entangled_segment("01", {0, 1}, 4), product_segment("23"));
        CHECK(out.dimer_count == 0);
        CHECK(out.segments.size() == 2);
    }
    SUBCASE("shorter-first inputs mirror to the same physics") {
        // a shorter segment on the left: fuse(b, a) with reversal
        SectorLabel out = fuse(product_segment("20"), entangled_segment("01", {0, 1}, 4));
        // mirrored partial fusion: |2> x psi^{(0)}_3 x dimer
        CHECK(out.dimer_count == 1);
        REQUIRE(out.segments.size() == 2);
        CHECK(out.segments[0].label.str() == "2");
        CHECK(out.segments[1].length == 3);
    }
}

TEST_CASE("fusion verification on the worked examples") {
    CHECK(fuse_verify(entangled_segment("10", {0, 1}, 4), product_segment("01"), 2));
    CHECK(fuse_verify(entangled_segment("10", {0, 1}, 4), product_segment("02"), 3));
    CHECK(fuse_verify(entangled_segment("01", {0, 1}, 4), product_segment("23"), 4));
}
