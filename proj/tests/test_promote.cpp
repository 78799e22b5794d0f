#include <doctest.h>

#include "fragmenta/models.hpp"
#include "fragmenta/promote.hpp"

using namespace fragmenta;

TEST_CASE("PF local decomposition: one paired component plus singletons") {
    LocalSectorDecomposition dec = decompose_local(pf_rule(3));
    CHECK(dec.num_nontrivial() == 1);
    std::size_t nontrivial = 0;
    for (const auto& c : dec.components) {
        if (c.size() > 1) {
            CHECK(c.size() == 3);  // {|00>, |11>, |22>}
            CHECK(c.configs == std::vector<std::int64_t>{0, 4, 8});
            CHECK_FALSE(c.bipartite);  // the local graph is K_3
            ++nontrivial;
        }
    }
    CHECK(nontrivial == 1);
    CHECK(dec.components.size() == 7);  // 1 + 6 frozen singletons
}

TEST_CASE("dipole local decomposition: four two-element components") {
    LocalSectorDecomposition dec = decompose_local(dipole3_rule());
    int pairs = 0;
    for (const auto& c : dec.components) {
        if (c.size() == 1) continue;
        CHECK(c.size() == 2);
        CHECK(c.bipartite);
        ++pairs;
    }
    CHECK(pairs == 4);
}

TEST_CASE("TFIM local decomposition: N orbit components of size N") {
    LocalSectorDecomposition dec = decompose_local(tfim_xx_rule(3));
    int orbits = 0;
    for (const auto& c : dec.components)
        if (c.size() > 1) {
            CHECK(c.size() == 3);
            ++orbits;
        }
    CHECK(orbits == 3);
}

TEST_CASE("promotion reproduces the named QF models") {
    SUBCASE("PF to TL") {
        for (int N : {2, 3}) {
            ChainGeometry geom(4, N);
            ExactOperator qf = promote(pf_rule(N), PhasePolicy::zero(), geom);
            ModelId tl{ModelKind::TL, N, 4, Boundary::open, {}, {}, {}};
            CHECK(operator_equal(qf, build_model(tl)));
        }
    }
    SUBCASE("tJz with theta = pi") {
        ChainGeometry geom(3, 3);
        ExactOperator qf = promote(tjz_rule(), PhasePolicy::pi_(), geom);
        ModelId id{ModelKind::TJZ_QF, 3, 3, Boundary::open, {}, {}, {}};
        CHECK(operator_equal(qf, build_model(id)));
    }
    SUBCASE("dipole with theta = 0") {
        ChainGeometry geom(4, 3);
        ExactOperator qf = promote(dipole3_rule(), PhasePolicy::zero(), geom);
        ModelId id{ModelKind::DIPOLE3_QF, 3, 4, Boundary::open, {}, {}, {}};
        CHECK(operator_equal(qf, build_model(id)));
    }
    SUBCASE("TFIM with theta = 0") {
        ChainGeometry geom(3, 3);
        ExactOperator qf = promote(tfim_xx_rule(3), PhasePolicy::zero(), geom);
        ModelId id{ModelKind::TFIM_QF, 3, 3, Boundary::open, {}, {}, {}};
        CHECK(operator_equal(qf, build_model(id)));
    }
}

TEST_CASE("theta = pi is rejected on the non-bipartite TL component") {
    ChainGeometry geom(3, 3);
    CHECK_THROWS_AS(promote(pf_rule(3), PhasePolicy::pi_(), geom), FrustrationError);
}

TEST_CASE("per-component phase overrides") {
    // tJz with the up pair at theta=pi and the down pair at theta=0
    LocalSectorDecomposition dec = decompose_local(tjz_rule());
    PhasePolicy policy = PhasePolicy::pi_();
    int down_component = dec.component_of(0 * 3 + 2);  // |0 down>
    policy.component_override[down_component] = PhasePolicy::Theta::zero;
    auto psis = local_projector_states(dec, policy);
    REQUIRE(psis.size() == 2);
    bool saw_minus = false, saw_plus = false;
    for (const auto& psi : psis) {
        auto it = psi.entries.begin();
        ExactScalar first = it->second;
        ExactScalar second = std::next(it)->second;
        (first == second ? saw_plus : saw_minus) = true;
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

TEST_CASE("H^QF preserves every classical sector") {
    ChainGeometry geom(4, 3);
    ExactOperator cf = assemble_hamiltonian(tjz_rule(), geom);
    ExactOperator qf = promote(tjz_rule(), PhasePolicy::pi_(), geom);
    // component id per basis state by BFS over the classical Hamiltonian
    std::vector<int> comp(cf.dim, -1);
    int next = 0;
    for (std::int64_t s = 0; s < cf.dim; ++s) {
        if (comp[s] != -1) continue;
        std::vector<std::int64_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            std::int64_t u = stack.back();
            stack.pop_back();
            for (const auto& [v, amp] : cf.rows[u])
                if (comp[v] == -1) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    for (std::int64_t i = 0; i < qf.dim; ++i)
        for (const auto& [j, amp] : qf.rows[i]) CHECK(comp[i] == comp[j]);
}

TEST_CASE("difference vectors are annihilated at L = k+1") {
    SUBCASE("theta = 0 pairs") {
        ChainGeometry geom(3, 3);
        ExactOperator qf = promote(dipole3_rule(), PhasePolicy::zero(), geom);
        LocalSectorDecomposition dec = decompose_local(dipole3_rule());
        for (const auto& c : dec.components) {
            if (c.size() < 2) continue;
            for (std::size_t i = 0; i + 1 < c.configs.size(); ++i) {
                ExactVector diff(qf.dim);
                diff.set(c.configs[i], ExactScalar(1));
                diff.set(c.configs[i + 1], ExactScalar(-1));
                CHECK(qf.apply(diff).is_zero());
            }
        }
    }
    SUBCASE("theta = pi pairs carry policy-consistent phases") {
        ChainGeometry geom(2, 3);
        ExactOperator qf = promote(tjz_rule(), PhasePolicy::pi_(), geom);
        LocalSectorDecomposition dec = decompose_local(tjz_rule());
        for (const auto& c : dec.components) {
            if (c.size() < 2) continue;
            int sign0 = c.dist[0] % 2 ? -1 : 1;
            int sign1 = c.dist[1] % 2 ? -1 : 1;
            ExactVector diff(qf.dim);
            diff.set(c.configs[0], ExactScalar(sign0));
            diff.set(c.configs[1], ExactScalar(-sign1));
            CHECK(qf.apply(diff).is_zero());
        }
    }
}

TEST_CASE("decomposing the promoted local term refines the parent components") {
    LocalRule parent = tjz_rule();
    LocalSectorDecomposition before = decompose_local(parent);
    // the promoted local term as a rule
    auto psis = local_projector_states(before, PhasePolicy::pi_());
    LocalRule promoted_rule;
    promoted_rule.num_colors = parent.num_colors;
    promoted_rule.range = parent.range;
    for (const auto& psi : psis) {
        ExactOperator proj = outer_projector(psi);
        for (std::int64_t i = 0; i < proj.dim; ++i)
            for (const auto& [j, v] : proj.rows[i]) promoted_rule.add(i, j, v);
    }
    LocalSectorDecomposition after = decompose_local(promoted_rule);
    for (const auto& c : after.components) {
        int parent_comp = before.component_of(c.configs.front());
        for (std::int64_t cfg : c.configs) CHECK(before.component_of(cfg) == parent_comp);
    }
}

TEST_CASE("frustration detection on the tJz triangle") {
    ChainGeometry pbc(3, 3, Boundary::periodic);
    ModelId cf{ModelKind::TJZ, 3, 3, Boundary::periodic, {}, {}, {}};
    ExactOperator H = build_model(cf);
    auto up = encode(ProductState::from_string("100"), pbc);
    auto report = detect_frustration(H, up);
    CHECK_FALSE(report.bipartite);
    CHECK(report.odd_cycle.size() == 3);
    CHECK(report.component.size() == 3);

    ChainGeometry obc(3, 3, Boundary::open);
    ModelId cf_obc{ModelKind::TJZ, 3, 3, Boundary::open, {}, {}, {}};
    auto report_obc = detect_frustration(build_model(cf_obc), up);
    CHECK(report_obc.bipartite);
}

TEST_CASE("the TL N=3 paired component is a non-bipartite global triangle") {
    // {|00>, |11>, |22>} forms K_3; theta = 0 promotion stays valid there
    // because two-color frozen vectors sidestep the alternating-sign recipe
    ChainGeometry geom(2, 3);
    ModelId tl{ModelKind::TL, 3, 2, Boundary::open, {}, {}, {}};
    ExactOperator H = build_model(tl);
    auto report = detect_frustration(H, encode(ProductState::from_string("00"), geom));
    CHECK_FALSE(report.bipartite);
    CHECK(report.component.size() == 3);
    CHECK(report.odd_cycle.size() == 3);
    CHECK_NOTHROW(promote(pf_rule(3), PhasePolicy::zero(), geom));
}

TEST_CASE("DOT exports name states by digit strings") {
    std::string dot = local_connectivity_dot(tjz_rule());
    CHECK(dot.find("\"01\" -- \"10\"") != std::string::npos);
}
