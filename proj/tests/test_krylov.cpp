#include <doctest.h>

#include <algorithm>
#include <random>

#include "fragmenta/frozen.hpp"
#include "fragmenta/krylov.hpp"
#include "fragmenta/models.hpp"

using namespace fragmenta;

TEST_CASE("pair reduction removes adjacent equal pairs left to right") {
    CHECK(pair_reduce(ProductState::from_string("1020110")).str() == "102");
    CHECK(pair_reduce(ProductState::from_string("00")).str() == "");
    CHECK(pair_reduce(ProductState::from_string("0110")).str() == "");
    CHECK(pair_reduce(ProductState::from_string("012")).str() == "012");
}

TEST_CASE("pair reduction parity matches the string length") {
    ChainGeometry geom(7, 3);
    for (std::int64_t s = 0; s < geom.hilbert_dim(); ++s) {
        IrreducibleString irr = pair_reduce(decode(s, geom));
        CHECK((irr.length() - geom.L) % 2 == 0);
    }
}

TEST_CASE("classical sector counts match the closed forms") {
    SUBCASE("PF N=2 L=3 has 4 sectors") {
        ChainGeometry geom(3, 2);
        ModelId id{ModelKind::PF, 2, 3, Boundary::open, {}, {}, {}};
        CHECK(cf_sectors(build_model(id), geom).size() == 4);
    }
    SUBCASE("PF N=3 L=2 has 7 sectors") {
        ChainGeometry geom(2, 3);
        ModelId id{ModelKind::PF, 3, 2, Boundary::open, {}, {}, {}};
        CHECK(cf_sectors(build_model(id), geom).size() == 7);
    }
    SUBCASE("tJz L=2 splits into two doublets and five singletons") {
        ChainGeometry geom(2, 3);
        ModelId id{ModelKind::TJZ, 3, 2, Boundary::open, {}, {}, {}};
        auto sectors = cf_sectors(build_model(id), geom);
        CHECK(sectors.size() == 7);
        int doublets = 0, singletons = 0;
        for (const auto& s : sectors) (s.size() == 2 ? doublets : singletons) += 1;
        CHECK(doublets == 2);
        CHECK(singletons == 5);
    }
}

TEST_CASE("sector sizes partition the full space") {
    ChainGeometry geom(5, 3);
    ModelId id{ModelKind::PF, 3, 5, Boundary::open, {}, {}, {}};
    auto sectors = cf_sectors(build_model(id), geom);
    std::int64_t total = 0;
    for (const auto& s : sectors) total += static_cast<std::int64_t>(s.size());
    CHECK(total == geom.hilbert_dim());
}

TEST_CASE("the irreducible string is constant on every PF sector") {
    for (int N : {2, 3}) {
        int L = N == 2 ? 7 : 5;
        ChainGeometry geom(L, N);
        ModelId id{ModelKind::PF, N, L, Boundary::open, {}, {}, {}};
        for (const auto& sec : cf_sectors(build_model(id), geom)) {
            IrreducibleString ref = pair_reduce(decode(sec.representative, geom));
            for (std::int64_t m : sec.members) CHECK(pair_reduce(decode(m, geom)) == ref);
        }
    }
}

TEST_CASE("tJz spin patterns and dipole data are sector invariants") {
    SUBCASE("tJz pattern") {
        ChainGeometry geom(5, 3);
        ModelId id{ModelKind::TJZ, 3, 5, Boundary::open, {}, {}, {}};
        for (const auto& sec : cf_sectors(build_model(id), geom)) {
            std::string ref = tjz_spin_pattern(decode(sec.representative, geom));
            for (std::int64_t m : sec.members) CHECK(tjz_spin_pattern(decode(m, geom)) == ref);
        }
    }
    SUBCASE("dipole charge, defects and interval dipoles") {
        ChainGeometry geom(6, 3);
        ModelId id{ModelKind::DIPOLE3, 3, 6, Boundary::open, {}, {}, {}};
        for (const auto& sec : cf_sectors(build_model(id), geom)) {
            DipoleLabel ref = dipole_label(decode(sec.representative, geom));
            for (std::int64_t m : sec.members) CHECK(dipole_label(decode(m, geom)) == ref);
        }
    }
}

TEST_CASE("dipole label of the appendix example") {
    DipoleLabel lab = dipole_label(ProductState::from_string("0202"));  // |-+-+>
    CHECK(lab.charge == 0);
    CHECK(lab.defect_spins.empty());
    CHECK(lab.interval_dipoles == std::vector<long>{2});
    CHECK(dipole_label(ProductState::from_string("1012")) == lab);  // |0-0+>
    CHECK(dipole_label(ProductState::from_string("0121")) == lab);  // |-0+0>
}

TEST_CASE("krylov closures of seed vectors") {
    ChainGeometry geom(2, 2);
    ModelId tl{ModelKind::TL, 2, 2, Boundary::open, {}, {}, {}};
    ExactOperator H = build_model(tl);
    SUBCASE("frozen seed closes at dimension 1") {
        ExactVector v = basis_vector(geom, "00") - basis_vector(geom, "11");
        CHECK(krylov_closure(H, v).dimension == 1);
    }
    SUBCASE("eigenvector seed closes at dimension 1") {
        ExactVector v = basis_vector(geom, "00") + basis_vector(geom, "11");
        CHECK(krylov_closure(H, v).dimension == 1);
    }
    SUBCASE("product seed closure equals its classical sector size") {
        ChainGeometry g4(4, 2);
        ModelId pf{ModelKind::PF, 2, 4, Boundary::open, {}, {}, {}};
        ExactOperator Hp = build_model(pf);
        CHECK(krylov_closure(Hp, basis_vector(g4, "0101")).dimension == 1);  // frozen product
        auto terms = assemble_bond_terms(pf_rule(2), g4);
        for (const auto& sec : cf_sectors(Hp, g4)) {
            ExactVector seed = basis_vector(g4, sec.representative);
            CHECK(module_closure(terms, seed).dimension == static_cast<int>(sec.size()));
        }
        // the plain power span can be strictly smaller on symmetric seeds:
        // from |0000> the vector |1100> - |0011| is unreachable through
        // powers of the full (reflection-symmetric) Hamiltonian
        CHECK(krylov_closure(Hp, basis_vector(g4, "0000")).dimension == 5);
        CHECK(module_closure(terms, basis_vector(g4, "0000")).dimension == 6);
    }
}

TEST_CASE("closure budgets are hard errors") {
    ChainGeometry geom(4, 2);
    ModelId pf{ModelKind::PF, 2, 4, Boundary::open, {}, {}, {}};
    ExactOperator H = build_model(pf);
    ClosureBudget tiny;
    tiny.max_dim = 1;
    CHECK_THROWS_AS(krylov_closure(H, basis_vector(geom, "0000"), tiny), BudgetExceeded);
}

TEST_CASE("census over the entangled basis") {
    SUBCASE("TL N=2 L=2 gives 4 classes") {
        ChainGeometry geom(2, 2);
        ModelId tl{ModelKind::TL, 2, 2, Boundary::open, {}, {}, {}};
        CHECK(sector_census(build_model(tl), omega_basis(geom)) == 4);
    }
    SUBCASE("TL N=2 L=3 gives 6 classes") {
        ChainGeometry geom(3, 2);
        ModelId tl{ModelKind::TL, 2, 3, Boundary::open, {}, {}, {}};
        CHECK(sector_census(build_model(tl), omega_basis(geom)) == 6);
    }
    SUBCASE("TFIM_QF N=3 L=2 has 6 kernel classes") {
        ChainGeometry geom(2, 3);
        ModelId id{ModelKind::TFIM_QF, 3, 2, Boundary::open, {}, {}, {}};
        ExactOperator H = build_model(id);
        // basis: the six kernel vectors plus the three orbit states
        std::vector<std::pair<std::string, std::string>> pairs = {
            {"00", "11"}, {"11", "22"}, {"01", "12"}, {"12", "20"}, {"02", "10"}, {"10", "21"}};
        std::vector<ExactVector> basis;
        for (const auto& [a, b] : pairs)
            basis.push_back(basis_vector(geom, a) - basis_vector(geom, b));
        for (const auto& psi : qf_projector_states(ModelKind::TFIM_QF, 3)) basis.push_back(psi);
        CHECK(sector_census(H, basis) == 9);
        int kernel_classes = 0;
        for (const auto& v : basis)
            if (H.apply(v).is_zero()) ++kernel_classes;
        CHECK(kernel_classes == 6);
    }
    SUBCASE("census is independent of basis order") {
        ChainGeometry geom(3, 2);
        ModelId tl{ModelKind::TL, 2, 3, Boundary::open, {}, {}, {}};
        ExactOperator H = build_model(tl);
        auto omega = omega_basis(geom);
        std::mt19937 rng(99);
        for (int trial = 0; trial < 3; ++trial) {
            std::shuffle(omega.begin(), omega.end(), rng);
            CHECK(sector_census(H, omega) == 6);
        }
    }
    SUBCASE("non-spanning bases are rejected") {
        ChainGeometry geom(2, 2);
        ModelId tl{ModelKind::TL, 2, 2, Boundary::open, {}, {}, {}};
        std::vector<ExactVector> partial = {basis_vector(geom, "00")};
        CHECK_THROWS_AS(sector_census(build_model(tl), partial), Error);
    }
}
