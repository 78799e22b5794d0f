#include <doctest.h>

#include "fragmenta/quad2d.hpp"

using namespace fragmenta;

TEST_CASE("lattice bookkeeping") {
    EdgeLattice lat = EdgeLattice::rectangular(2, 2, 3, {0, 2});
    CHECK(lat.edge_count() == 16);  // 6 + 6 core + 4 dangling
    CHECK(lat.faces().size() == 4);
    auto fv = lat.four_valent_vertices();
    REQUIRE(fv.size() == 1);
    CHECK(fv[0] == std::pair<int, int>{1, 1});
    CHECK(lat.row_path(2).size() == 4);  // stub + 2 bulk + stub
    CHECK(lat.row_path(1).size() == 2);

    EdgeLattice plus = EdgeLattice::plus_shape(3);
    CHECK(plus.edge_count() == 16);
    CHECK(plus.faces().size() == 4);
    CHECK(plus.four_valent_vertices().size() == 5);
}

TEST_CASE("pack/unpack round trip") {
    EdgeLattice lat = EdgeLattice::rectangular(2, 1, 3);
    for (std::int64_t s = 0; s < lat.state_count(); ++s) CHECK(lat.pack(lat.unpack(s)) == s);
}

TEST_CASE("path charges") {
    EdgeLattice lat = EdgeLattice::rectangular(2, 2, 3);
    EdgeState uniform{std::vector<int>(lat.edge_count(), 1)};
    SUBCASE("closed face boundary on a source-free state carries zero charge") {
        CHECK(source_free(lat, uniform));
        for (const auto& face : lat.faces()) {
            std::vector<int> path(face.begin(), face.end());
            for (int alpha = 0; alpha < 3; ++alpha) CHECK(charge(lat, uniform, path, alpha) == 0);
        }
    }
    SUBCASE("single matching edge counts once") {
        std::vector<int> path = {0};
        CHECK(charge(lat, uniform, path, 1) == 1);
        CHECK(charge(lat, uniform, path, 0) == 0);
    }
    SUBCASE("even-length alternating paths telescope on uniform backgrounds") {
        auto path = lat.row_path(0);
        CHECK(charge(lat, uniform, path, 1) == 0);  // two horizontal edges, signs +/-
    }
}

TEST_CASE("quad flip application") {
    EdgeLattice lat = EdgeLattice::rectangular(2, 2, 3);
    auto star = lat.incident(1, 1);
    REQUIRE(star.size() == 4);
    SUBCASE("a uniform star flips to every color") {
        std::vector<int> colors(lat.edge_count(), 2);
        ExactVector v(lat.state_count());
        v.set(lat.pack(colors), ExactScalar(1));
        ExactVector out = apply_vertex_term(lat, v, 1, 1, isotropic_xi(3));
        CHECK(out.nnz() == 3);  // alpha = 0, 1, 2 (the diagonal alpha = beta included)
    }
    SUBCASE("no four-equal support annihilates") {
        std::vector<int> colors(lat.edge_count(), 2);
        colors[star[0]] = 0;
        ExactVector v(lat.state_count());
        v.set(lat.pack(colors), ExactScalar(1));
        CHECK(apply_vertex_term(lat, v, 1, 1, isotropic_xi(3)).is_zero());
    }
}

TEST_CASE("source-free preservation and charge conservation, exhaustive") {
    EdgeLattice lat = EdgeLattice::rectangular(2, 2, 3);  // 12 edges
    CHECK(source_free_preserved_exhaustive(lat));
    CHECK(row_charges_commute_exhaustive(lat));
}

TEST_CASE("cut labels are constant within classical sectors, exhaustive") {
    EdgeLattice lat = EdgeLattice::rectangular(2, 2, 3);
    auto verts = lat.four_valent_vertices();
    std::vector<std::vector<int>> paths;
    for (int y = 0; y <= lat.H; ++y) paths.push_back(lat.row_path(y));
    std::int64_t violations = 0;
    for (std::int64_t s = 0; s < lat.state_count(); ++s) {
        std::vector<int> colors = lat.unpack(s);
        for (const auto& [vx, vy] : verts) {
            auto star = lat.incident(vx, vy);
            int beta = colors[star[0]];
            bool uniform = true;
            for (int e : star) uniform = uniform && colors[e] == beta;
            if (!uniform) continue;
            for (int alpha = 0; alpha < lat.N; ++alpha) {
                std::vector<int> flipped = colors;
                for (int e : star) flipped[e] = alpha;
                for (const auto& path : paths) {
                    std::vector<int> a, b;
                    for (int e : path) {
                        a.push_back(colors[e]);
                        b.push_back(flipped[e]);
                    }
                    if (!(pair_reduce(a) == pair_reduce(b))) ++violations;
                }
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("two-term frozen fixture") {
    QuadFixture fx = fixture_two_term();
    REQUIRE(fx.state.nnz() == 2);
    for (const auto& [idx, amp] : fx.state.entries)
        CHECK(source_free(fx.lattice, EdgeState{fx.lattice.unpack(idx)}));
    CHECK(apply_hamiltonian(fx.lattice, fx.state, isotropic_xi(3)).is_zero());
    // the classical (generic-coupling) dynamics moves the plaquette instead
    CHECK_FALSE(apply_hamiltonian(fx.lattice, fx.state, generic_xi(3)).is_zero());
    CHECK(horizontal_cut_label(fx.lattice, fx.state, 2).str() == "12");
    CHECK(horizontal_cut_label(fx.lattice, fx.state, 0).str() == "12");
    auto mid = horizontal_cut_amplitudes(fx.lattice, fx.state, 1);
    REQUIRE(mid.size() == 2);
    CHECK(mid.at(0) == ExactScalar(-1));      // |00>
    CHECK(mid.at(4) == ExactScalar(1));       // |11>
}

TEST_CASE("three-term frozen fixture") {
    QuadFixture fx = fixture_three_term();
    REQUIRE(fx.state.nnz() == 3);
    for (const auto& [idx, amp] : fx.state.entries)
        CHECK(source_free(fx.lattice, EdgeState{fx.lattice.unpack(idx)}));
    CHECK(apply_hamiltonian(fx.lattice, fx.state, isotropic_xi(3)).is_zero());
    CHECK(horizontal_cut_label(fx.lattice, fx.state, 1).str() == "0");
    ChainGeometry cut(3, 3);
    auto mid = horizontal_cut_amplitudes(fx.lattice, fx.state, 1);
    REQUIRE(mid.size() == 3);
    CHECK(mid.at(encode(ProductState::from_string("000"), cut)) == ExactScalar(1));
    CHECK(mid.at(encode(ProductState::from_string("110"), cut)) == ExactScalar(-1));
    CHECK(mid.at(encode(ProductState::from_string("011"), cut)) == ExactScalar(-1));
}

TEST_CASE("mismatched cut labels are reported") {
    EdgeLattice lat = EdgeLattice::rectangular(2, 1, 3);
    ExactVector v(lat.state_count());
    std::vector<int> a(lat.edge_count(), 0), b(lat.edge_count(), 0);
    b[lat.edge_index(EdgeLattice::EdgeKind::horizontal, 0, 0)] = 1;
    v.set(lat.pack(a), ExactScalar(1));
    v.set(lat.pack(b), ExactScalar(1));
    CHECK_THROWS_AS(horizontal_cut_label(lat, v, 0), Error);
}

TEST_CASE("GHZ loop dynamics on the plus patch") {
    QuadFixture fx = fixture_four_frozen_loops();
    REQUIRE(fx.state.nnz() == 16);
    for (const auto& [idx, amp] : fx.state.entries)
        CHECK(source_free(fx.lattice, EdgeState{fx.lattice.unpack(idx)}));

    SUBCASE("the center step creates the dimer x GHZ loop state") {
        GhzStepResult step = ghz_loop_step(fx.lattice, fx.state, 2, 2);
        CHECK_FALSE(step.zero);
        CHECK(step.color_symmetric);
        CHECK(step.result == plus_dimer_ghz_state(fx.lattice));
    }
    SUBCASE("deforming the GHZ loop preserves coherence in the dimer background") {
        ExactVector state = plus_dimer_ghz_state(fx.lattice);
        GhzStepResult step = ghz_loop_step(fx.lattice, state, 2, 3);
        CHECK_FALSE(step.zero);
        CHECK(step.color_symmetric);
    }
    SUBCASE("a single-colored background dephases the loop") {
        ExactVector state = plus_ghz_blue_background(fx.lattice);
        GhzStepResult step = ghz_loop_step(fx.lattice, state, 2, 3);
        CHECK_FALSE(step.zero);
        CHECK_FALSE(step.color_symmetric);
    }
    SUBCASE("a vertex without four-equal support returns zero") {
        std::vector<int> colors(fx.lattice.edge_count(), 2);
        auto star = fx.lattice.incident(2, 2);
        colors[star[0]] = 0;
        colors[star[1]] = 1;
        ExactVector v(fx.lattice.state_count());
        v.set(fx.lattice.pack(colors), ExactScalar(1));
        CHECK(ghz_loop_step(fx.lattice, v, 2, 2).zero);
    }
}

TEST_CASE("ascii rendering shows every edge") {
    QuadFixture fx = fixture_two_term();
    auto first = fx.state.entries.begin();
    std::string art = fx.lattice.ascii_render(fx.lattice.unpack(first->first));
    CHECK(art.find('+') != std::string::npos);
    CHECK(art.size() > 20);
}
