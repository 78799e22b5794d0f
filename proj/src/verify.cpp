#include "fragmenta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fragmenta/counting.hpp"
#include "fragmenta/entangle.hpp"
#include "fragmenta/frozen.hpp"
#include "fragmenta/models.hpp"
#include "fragmenta/quad2d.hpp"

namespace fragmenta {

namespace {

struct Claim {
    std::string id;
    int criterion;
    int L;  // the largest chain the claim touches, for config-level skipping
    std::string paper_ref;
    std::function<void(ClaimResult&)> run;
};

void set_equal(ClaimResult& r, const std::string& expected, const std::string& computed) {
    r.expected = expected;
    r.computed = computed;
    r.match = expected == computed;
}

void set_bool(ClaimResult& r, bool ok, const std::string& expected = "true") {
    r.expected = expected;
    r.computed = ok ? "true" : "false";
    r.match = ok;
}

std::string big_str(const BigInt& z) { return z.get_str(); }

ExactOperator tl_hamiltonian(int N, int L, Boundary b = Boundary::open) {
    ModelId id{ModelKind::TL, N, L, b, {}, {}, {}};
    return build_model(id);
}

// zero Hamiltonian on a chain too short to host any local term
ExactOperator empty_hamiltonian(int N, int L) { return ExactOperator(ChainGeometry(L, N).hilbert_dim()); }

bool entropy_bounded(const ExactVector& v, const ChainGeometry& geom) {
    for (int cut = 1; cut < geom.L; ++cut) {
        SchmidtData data = schmidt(v, cut, geom);
        if (data.rank == 0) return false;
        if (data.entropy > std::log(static_cast<double>(data.rank)) + 1e-9) return false;
    }
    return true;
}

// two-color segment inventory for the fusion sweep
std::vector<FrozenSegment> sweep_segments(int max_len, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<FrozenSegment> segs;
    for (auto [b, c] : pairs) {
        for (int l = 1; l <= max_len; ++l) {
            // products: alternating strings of exactly length l
            for (int lead : {b, c}) {
                std::string s;
                for (int i = 0; i < l; ++i)
                    s.push_back(static_cast<char>('0' + ((i % 2 == 0) ? lead : (lead == b ? c : b))));
                segs.push_back(product_segment(s));
                if (l == 1) break;  // "b" and "c" both covered by lead loop below
            }
            if (l == 1) segs.push_back(product_segment(std::string(1, static_cast<char>('0' + c))));
            // entangled: labels shorter than l with matching parity
            for (int k = l % 2; k < l; k += 2) {
                if (k == 0) {
                    segs.push_back(entangled_segment("", {b, c}, l));
                    continue;
                }
                for (int lead : {b, c}) {
                    std::string s;
                    for (int i = 0; i < k; ++i)
                        s.push_back(static_cast<char>('0' + ((i % 2 == 0) ? lead : (lead == b ? c : b))));
                    segs.push_back(entangled_segment(s, {b, c}, l));
                }
            }
        }
    }
    return segs;
}

std::mt19937 claim_rng() { return std::mt19937(20260811u); }

std::vector<Rational> random_rational_couplings(int count, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 4);
    std::vector<Rational> J;
    for (int i = 0; i < count; ++i) J.push_back(make_rational(num(rng), den(rng)));
    return J;
}

void add_criterion_1(std::vector<Claim>& claims) {
    for (int N : {2, 3}) {
        for (int L = 2; L <= 6; ++L) {
            std::ostringstream id;
            id << "AC1/promote-PF-equals-TL-N" << N << "-L" << L;
            claims.push_back(
                {id.str(), 1, L, "sec II.B: 'Setting g^{a,b}_x = J_x, one obtains the TL model'",
                 [N, L](ClaimResult& r) {
                     ChainGeometry geom(L, N);
                     ExactOperator promoted = promote(pf_rule(N), PhasePolicy::zero(), geom);
                     ExactOperator tl = tl_hamiltonian(N, L);
                     set_bool(r, operator_equal(promoted, tl), "entrywise equal");
                     if (r.match) r.computed = "entrywise equal";
                 }});
        }
    }
}

void add_criterion_2(std::vector<Claim>& claims) {
    auto add = [&claims](int N, int L) {
        std::ostringstream id;
        id << "AC2/tl-kernel-N" << N << "-L" << L;
        claims.push_back({id.str(), 2, L, "Eq. (TL ker dim): 'L+1, N=2' and the N>2 closed form",
                          [N, L](ClaimResult& r) {
                              ExactOperator H = L >= 2 ? tl_hamiltonian(N, L) : empty_hamiltonian(N, L);
                              BigInt formula = tl_kernel_dim(N, L);
                              std::int64_t computed = kernel_dimension(H);
                              set_equal(r, big_str(formula), std::to_string(computed));
                          }});
    };
    for (int L = 1; L <= 8; ++L) add(2, L);
    for (int L = 1; L <= 5; ++L) add(3, L);
}

void add_criterion_3(std::vector<Claim>& claims) {
    auto add = [&claims](int N, int L) {
        std::ostringstream id;
        id << "AC3/tfim-qf-kernel-N" << N << "-L" << L;
        claims.push_back({id.str(), 3, L, "Eq. (XX_gs): |G_L| = N(N-1)^{L-1}",
                          [N, L](ClaimResult& r) {
                              ModelId md{ModelKind::TFIM_QF, N, L, Boundary::open, {}, {}, {}};
                              BigInt formula = tfim_qf_kernel_dim(N, L);
                              std::int64_t computed = kernel_dimension(build_model(md));
                              set_equal(r, big_str(formula), std::to_string(computed));
                          }});
    };
    for (int L = 2; L <= 8; ++L) add(2, L);
    for (int L = 2; L <= 5; ++L) add(3, L);

    claims.push_back(
        {"AC3/ground-basis-N3-L2", 3, 2,
         "sec II.C ground space display: 'which indeed has dimension 6=3(3-1)^1'",
         [](ClaimResult& r) {
             ChainGeometry geom(2, 3);
             ModelId md{ModelKind::TFIM_QF, 3, 2, Boundary::open, {}, {}, {}};
             ExactOperator H = build_model(md);
             std::vector<std::pair<std::string, std::string>> pairs = {
                 {"00", "11"}, {"11", "22"}, {"01", "12"}, {"12", "20"}, {"02", "10"}, {"10", "21"}};
             std::vector<ExactVector> basis;
             bool all_annihilated = true;
             for (const auto& [a, b] : pairs) {
                 ExactVector v = basis_vector(geom, a) - basis_vector(geom, b);
                 all_annihilated = all_annihilated && H.apply(v).is_zero();
                 basis.push_back(std::move(v));
             }
             bool spans = exact_rank(basis) == 6 && kernel_dimension(H) == 6;
             set_bool(r, all_annihilated && spans, "6 annihilated vectors of rank 6");
             if (r.match) r.computed = r.expected;
         }});
}

void add_criterion_4(std::vector<Claim>& claims) {
    for (int N : {2, 3}) {
        for (int L = 2; L <= 5; ++L) {
            std::ostringstream id;
            id << "AC4/circuit-identity-N" << N << "-L" << L;
            claims.push_back(
                {id.str(), 4, L, "Eq. (QFXX_rotated): C H^QF C^dag = sum_i J_i |+><+|_i",
                 [N, L](ClaimResult& r) {
                     auto rng = claim_rng();
                     std::vector<Rational> J = random_rational_couplings(L - 1, rng);
                     ModelId md{ModelKind::TFIM_QF, N, L, Boundary::open, J, {}, {}};
                     ExactOperator H = build_model(md);
                     auto image = controlled_subtraction_permutation(N, L);
                     ExactOperator rotated = H.conjugate_by_permutation(image);
                     ExactOperator target = plus_projector_sum(N, L, J);
                     set_bool(r, operator_equal(rotated, target), "operators equal");
                     if (r.match) r.computed = r.expected;
                 }});
        }
    }
}

struct FrozenCase {
    std::string name;
    int L;
    std::function<std::pair<ExactVector, ChainGeometry>()> make;
};

// every frozen state in the acceptance suite, each paired with the geometry
// of the Hamiltonian that annihilates it
std::vector<FrozenCase> frozen_suite() {
    std::vector<FrozenCase> cases;
    cases.push_back({"tjz-up-L3", 3, [] {
                         ChainGeometry geom(3, 3);
                         ModelId cf{ModelKind::TJZ, 3, 3, Boundary::open, {}, {}, {}};
                         ModelId qf{ModelKind::TJZ_QF, 3, 3, Boundary::open, {}, {}, {}};
                         ExactVector v = build_frozen(build_model(cf), build_model(qf),
                                                      encode(ProductState::from_string("100"), geom),
                                                      PhasePolicy::Theta::pi);
                         return std::make_pair(v, geom);
                     }});
    cases.push_back({"tjz-ud-L4", 4, [] {
                         ChainGeometry geom(4, 3);
                         ModelId cf{ModelKind::TJZ, 3, 4, Boundary::open, {}, {}, {}};
                         ModelId qf{ModelKind::TJZ_QF, 3, 4, Boundary::open, {}, {}, {}};
                         ExactVector v = build_frozen(build_model(cf), build_model(qf),
                                                      encode(ProductState::from_string("1200"), geom),
                                                      PhasePolicy::Theta::pi);
                         return std::make_pair(v, geom);
                     }});
    cases.push_back({"dipole-L4", 4, [] {
                         ChainGeometry geom(4, 3);
                         ModelId cf{ModelKind::DIPOLE3, 3, 4, Boundary::open, {}, {}, {}};
                         ModelId qf{ModelKind::DIPOLE3_QF, 3, 4, Boundary::open, {}, {}, {}};
                         ExactVector v = build_frozen(build_model(cf), build_model(qf),
                                                      encode(ProductState::from_string("0202"), geom),
                                                      PhasePolicy::Theta::zero);
                         return std::make_pair(v, geom);
                     }});
    cases.push_back({"tl-20-02-L4", 4, [] {
                         ChainGeometry geom(4, 3);
                         IrreducibleString s;
                         s.colors = {2, 0};
                         return std::make_pair(tl_segment(s, {0, 2}, 4, 3), geom);
                     }});
    cases.push_back({"tl-0-L3", 3, [] {
                         ChainGeometry geom(3, 2);
                         IrreducibleString s;
                         s.colors = {0};
                         return std::make_pair(tl_segment(s, {0, 1}, 3, 2), geom);
                     }});
    cases.push_back({"tl-empty-L4", 4, [] {
                         ChainGeometry geom(4, 2);
                         return std::make_pair(tl_segment({}, {0, 1}, 4, 2), geom);
                     }});
    for (int L : {3, 5, 7}) {
        for (int parity : {1, -1}) {
            std::ostringstream name;
            name << "ghz-" << (parity > 0 ? "plus" : "minus") << "-L" << L;
            cases.push_back({name.str(), L, [L, parity] {
                                 ChainGeometry geom(L, 2, Boundary::periodic);
                                 return std::make_pair(ghz_frozen(L, parity), geom);
                             }});
        }
    }
    cases.push_back({"compose-dimerless-L3", 3, [] {
                         ChainGeometry geom(3, 3);
                         std::vector<FrozenSegment> segs = {entangled_segment("", {0, 1}, 2),
                                                            product_segment("2")};
                         return std::make_pair(compose(segs, 3), geom);
                     }});
    cases.push_back({"compose-psi0-2-L4", 4, [] {
                         ChainGeometry geom(4, 3);
                         std::vector<FrozenSegment> segs = {entangled_segment("0", {0, 1}, 3),
                                                            product_segment("2")};
                         return std::make_pair(compose(segs, 3), geom);
                     }});
    return cases;
}

ExactOperator annihilator_for(const FrozenCase& fc, const ExactVector& v, const ChainGeometry& geom) {
    // the suite states are frozen for their own model; TL covers the segment
    // and composition cases, GHZ states live on the periodic chain
    if (fc.name.rfind("tjz", 0) == 0) {
        ModelId qf{ModelKind::TJZ_QF, 3, geom.L, geom.boundary, {}, {}, {}};
        return build_model(qf);
    }
    if (fc.name.rfind("dipole", 0) == 0) {
        ModelId qf{ModelKind::DIPOLE3_QF, 3, geom.L, geom.boundary, {}, {}, {}};
        return build_model(qf);
    }
    (void)v;
    return tl_hamiltonian(geom.N, geom.L, geom.boundary);
}

void add_criterion_5(std::vector<Claim>& claims) {
    for (const auto& fc : frozen_suite()) {
        claims.push_back({"AC5/frozen-" + fc.name, 5, fc.L,
                          "Eq. (frozen_state), Eq. (lambda), App. B/C displays, sec IV GHZ states",
                          [fc](ClaimResult& r) {
                              auto [v, geom] = fc.make();
                              ExactOperator H = annihilator_for(fc, v, geom);
                              set_bool(r, H.apply(v).is_zero(), "H v = 0 exactly");
                              if (r.match) r.computed = r.expected;
                          }});
    }

    claims.push_back({"AC5/tjz-up-L3-display", 5, 3,
                      "App. B: equal-weight (|u00> + |0u0> + |00u>)/sqrt(3)",
                      [](ClaimResult& r) {
                          ChainGeometry geom(3, 3);
                          ModelId cf{ModelKind::TJZ, 3, 3, Boundary::open, {}, {}, {}};
                          ModelId qf{ModelKind::TJZ_QF, 3, 3, Boundary::open, {}, {}, {}};
                          ExactVector v = build_frozen(build_model(cf), build_model(qf),
                                                       encode(ProductState::from_string("100"), geom),
                                                       PhasePolicy::Theta::pi);
                          ExactVector expect = state_sum(
                              geom, {{ExactScalar(1), "100"}, {ExactScalar(1), "010"}, {ExactScalar(1), "001"}});
                          set_bool(r, v == expect, "equal-weight superposition");
                          if (r.match) r.computed = r.expected;
                      }});
    claims.push_back(
        {"AC5/dipole-L4-display", 5, 4, "App. B: (|-+-+> - |0-0+> - |-0+0>)/sqrt(3)",
         [](ClaimResult& r) {
             ChainGeometry geom(4, 3);
             ModelId cf{ModelKind::DIPOLE3, 3, 4, Boundary::open, {}, {}, {}};
             ModelId qf{ModelKind::DIPOLE3_QF, 3, 4, Boundary::open, {}, {}, {}};
             ExactVector v = build_frozen(build_model(cf), build_model(qf),
                                          encode(ProductState::from_string("0202"), geom),
                                          PhasePolicy::Theta::zero);
             ExactVector expect = state_sum(geom, {{ExactScalar(1), "0202"},
                                                   {ExactScalar(-1), "1012"},
                                                   {ExactScalar(-1), "0121"}});
             bool same = v == expect || v == expect.scaled(ExactScalar(-1));
             set_bool(r, same, "matches the display up to a global sign");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC5/tl-segment-display-L4", 5, 4,
         "sec III.A: |psi^{(20),{0,2}}_4> = (|2000> - |2220> - |2022> + |0020>)/2",
         [](ClaimResult& r) {
             ChainGeometry geom(4, 3);
             IrreducibleString s;
             s.colors = {2, 0};
             ExactVector v = tl_segment(s, {0, 2}, 4, 3);
             ExactVector expect = state_sum(geom, {{ExactScalar(1), "2000"},
                                                   {ExactScalar(-1), "2220"},
                                                   {ExactScalar(-1), "2022"},
                                                   {ExactScalar(1), "0020"}});
             bool same = v == expect || v == expect.scaled(ExactScalar(-1));
             set_bool(r, same, "matches the display up to a global sign");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back({"AC5/ghz-product-in-y", 5, 5,
                      "sec IV: (psi_+ +- psi_-)/sqrt(2) are product states in the y basis",
                      [](ClaimResult& r) {
                          const int L = 5;
                          ExactVector sum = ghz_frozen(L, 1) + ghz_frozen(L, -1);
                          bool ok = true;
                          for (std::int64_t s = 0; s < (1 << L); ++s) {
                              int w = 0;
                              for (std::int64_t t = s; t; t >>= 1) w += static_cast<int>(t & 1);
                              ok = ok && sum.get(s) == quarter_phase(w);
                          }
                          set_bool(r, ok, "amplitudes i^weight on every configuration");
                          if (r.match) r.computed = r.expected;
                      }});
}

void add_criterion_6(std::vector<Claim>& claims) {
    claims.push_back(
        {"AC6/schmidt-1010-L8", 6, 8,
         "sec V: W = 3, mu^2 = {3/14, 4/7, 3/14}, 'bipartite entropy S_A=0.98'",
         [](ClaimResult& r) {
             ChainGeometry geom(8, 2);
             IrreducibleString s;
             s.colors = {1, 0, 1, 0};
             ExactVector v = tl_segment(s, {0, 1}, 8, 2);
             SchmidtData data = schmidt(v, 4, geom);
             bool rank_ok = data.rank == 3;
             bool spectrum_ok = verify_schmidt_squares(
                 v, 4, geom, {make_rational(3, 14), make_rational(4, 7), make_rational(3, 14)});
             bool entropy_ok = std::abs(data.entropy - 0.98) <= 0.01;
             std::ostringstream got;
             got << "W=" << data.rank << " spectrum=" << (spectrum_ok ? "exact" : "mismatch")
                 << " S_A=" << data.entropy;
             r.expected = "W=3 spectrum=exact S_A=0.98+-0.01";
             r.computed = got.str();
             r.match = rank_ok && spectrum_ok && entropy_ok;
         }});
    claims.push_back({"AC6/entropy-bound-suite", 6, 8, "sec V: S_A <= ln W on every frozen state",
                      [](ClaimResult& r) {
                          bool ok = true;
                          for (const auto& fc : frozen_suite()) {
                              auto [v, geom] = fc.make();
                              if (geom.L < 2) continue;
                              ok = ok && entropy_bounded(v, geom);
                          }
                          set_bool(r, ok, "S_A <= ln W at every cut");
                          if (r.match) r.computed = r.expected;
                      }});
}

void add_criterion_7(std::vector<Claim>& claims) {
    auto add_pf = [&claims](int N, int L) {
        std::ostringstream id;
        id << "AC7/pf-census-N" << N << "-L" << L;
        claims.push_back({id.str(), 7, L, "sec III.C: #K_PF = ((N-1)^{L+1} - 1)/(N-2), L+1 for N=2",
                          [N, L](ClaimResult& r) {
                              ChainGeometry geom(L, N);
                              ExactOperator H =
                                  L >= 2 ? build_model(ModelId{ModelKind::PF, N, L, Boundary::open, {}, {}, {}})
                                         : empty_hamiltonian(N, L);
                              auto sectors = cf_sectors(H, geom);
                              set_equal(r, big_str(count_pf_sectors(N, L)),
                                        std::to_string(sectors.size()));
                          }});
    };
    for (int L = 1; L <= 8; ++L) add_pf(2, L);
    for (int L = 1; L <= 5; ++L) add_pf(3, L);

    auto add_tl = [&claims](int N, int L) {
        std::ostringstream id;
        id << "AC7/tl-census-N" << N << "-L" << L;
        claims.push_back({id.str(), 7, L,
                          "sec III.C: #K_TL = ((L+2)^2 - sigma)/4 for N=2; q-expression for N>2",
                          [N, L](ClaimResult& r) {
                              ChainGeometry geom(L, N);
                              ExactOperator H = tl_hamiltonian(N, L);
                              auto omega = omega_basis(geom);
                              auto terms = assemble_bond_terms(tl_rule(N), geom);
                              int census = sector_census(H, omega, {}, terms);
                              set_equal(r, big_str(count_tl_sectors(N, L)), std::to_string(census));
                          }});
    };
    for (int L = 2; L <= 6; ++L) add_tl(2, L);
    for (int L = 2; L <= 3; ++L) add_tl(3, L);
}

void add_criterion_8(std::vector<Claim>& claims) {
    for (int L = 1; L <= 10; ++L) {
        std::ostringstream id;
        id << "AC8/omega-rank-L" << L;
        claims.push_back({id.str(), 8, L, "App. C: |Omega(L)| = 2^L and the basis matrix is full rank",
                          [L](ClaimResult& r) {
                              ChainGeometry geom(L, 2);
                              auto omega = omega_basis(geom);
                              std::int64_t want = 1;
                              for (int i = 0; i < L; ++i) want *= 2;
                              bool size_ok = static_cast<std::int64_t>(omega.size()) == want;
                              int rank = modular_rank(omega);
                              if (rank < want) rank = exact_rank(omega);
                              std::ostringstream exp, got;
                              exp << "size=" << want << " rank=" << want;
                              got << "size=" << omega.size() << " rank=" << rank;
                              set_equal(r, exp.str(), got.str());
                          }});
    }
}

void add_criterion_9(std::vector<Claim>& claims, bool full_sweep) {
    claims.push_back(
        {"AC9/fusion-worked-example-1", 9, 6,
         "sec III.B: psi^{(10)}_4 x psi^{(01)}_2 -> psi^{(irr(1001))}_2 x 2 dimers",
         [](ClaimResult& r) {
             FrozenSegment a = entangled_segment("10", {0, 1}, 4);
             FrozenSegment b = product_segment("01");  // psi^{(01)}_2 has L_s = l
             SectorLabel out = fuse(a, b);
             bool shape = out.dimer_count == 2 && out.segments.size() == 1 &&
                          out.segments[0].entangled() && out.segments[0].label.empty() &&
                          out.segments[0].length == 2;
             set_bool(r, shape && fuse_verify(a, b, 2), "psi(s=-,l=2) x D^2, closure-confirmed");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC9/fusion-worked-example-2", 9, 6,
         "sec III.B: psi^{(10)}_4 x |02> -> psi^{(1)}_3 x |2> x 1 dimer",
         [](ClaimResult& r) {
             FrozenSegment a = entangled_segment("10", {0, 1}, 4);
             FrozenSegment b = product_segment("02");
             SectorLabel out = fuse(a, b);
             bool shape = out.dimer_count == 1 && out.segments.size() == 2 &&
                          out.segments[0].entangled() && out.segments[0].label.str() == "1" &&
                          out.segments[0].length == 3 && !out.segments[1].entangled() &&
                          out.segments[1].label.str() == "2";
             set_bool(r, shape && fuse_verify(a, b, 3), "psi(s=1,l=3) x |2> x D, closure-confirmed");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back({"AC9/fusion-disjoint-colors", 9, 6,
                      "sec III.B: 'otherwise, the state is simply frozen'",
                      [](ClaimResult& r) {
                          FrozenSegment a = entangled_segment("01", {0, 1}, 4);
                          FrozenSegment b = product_segment("23");
                          SectorLabel out = fuse(a, b);
                          bool unchanged = out.dimer_count == 0 && out.segments.size() == 2;
                          set_bool(r, unchanged && fuse_verify(a, b, 4), "input unchanged, closure dim 1");
                          if (r.match) r.computed = r.expected;
                      }});
    if (!full_sweep) return;
    claims.push_back(
        {"AC9/fusion-exhaustive-sweep", 9, 8,
         "App. D cases 1-3: symbolic outcome vs projector-closure oracle, l+l' <= 8",
         [](ClaimResult& r) {
             auto segs = sweep_segments(7, {{0, 1}, {0, 2}, {1, 2}});
             int checked = 0, failures = 0, outside = 0;
             for (const auto& a : segs) {
                 for (const auto& b : segs) {
                     if (a.length + b.length > 8) continue;
                     SectorLabel predicted;
                     try {
                         predicted = fuse(a, b);
                     } catch (const ConstraintViolation&) {
                         ++outside;  // documented exclusions (empty label, one shared color)
                         continue;
                     }
                     ++checked;
                     if (!fuse_verify(a, b, 3)) {
                         ++failures;
                         if (failures == 1)
                             r.computed = "first failure: " + a.str() + " x " + b.str() + " -> " +
                                          predicted.str();
                     }
                 }
             }
             std::ostringstream got;
             got << checked << " pairs checked, " << failures << " failures, " << outside
                 << " outside the classified cases";
             r.expected = "0 failures";
             if (r.computed.empty()) r.computed = got.str();
             r.match = failures == 0 && checked > 0;
         }});
}

void add_criterion_10(std::vector<Claim>& claims) {
    claims.push_back(
        {"AC10/tjz-triangle-witness", 10, 3,
         "sec II.B: 'whose connectivity graph is a triangle'",
         [](ClaimResult& r) {
             ChainGeometry geom(3, 3, Boundary::periodic);
             ModelId cf{ModelKind::TJZ, 3, 3, Boundary::periodic, {}, {}, {}};
             ExactOperator H = build_model(cf);
             auto report = detect_frustration(H, encode(ProductState::from_string("100"), geom));
             std::vector<std::int64_t> expect = {encode(ProductState::from_string("100"), geom),
                                                 encode(ProductState::from_string("010"), geom),
                                                 encode(ProductState::from_string("001"), geom)};
             std::sort(expect.begin(), expect.end());
             std::vector<std::int64_t> cyc = report.odd_cycle;
             std::sort(cyc.begin(), cyc.end());
             set_bool(r, !report.bipartite && cyc == expect, "non-bipartite with the 3-cycle witness");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC10/tjz-theta0-promotion-errors", 10, 3,
         "sec II.B: 'leading to a frustration when constructing the entangled frozen states'",
         [](ClaimResult& r) {
             ChainGeometry geom(3, 3, Boundary::periodic);
             bool threw = false;
             std::size_t witness = 0;
             try {
                 promote(tjz_rule(), PhasePolicy::zero(), geom);
             } catch (const FrustrationError& e) {
                 threw = true;
                 witness = e.odd_cycle.size();
             }
             set_bool(r, threw && witness % 2 == 1 && witness >= 3,
                      "FrustrationError with an odd-cycle witness");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC10/tjz-theta-pi-succeeds", 10, 3, "sec II.B: 'To avoid the frustration, we set theta=pi'",
         [](ClaimResult& r) {
             ChainGeometry geom(3, 3, Boundary::periodic);
             ExactOperator H = promote(tjz_rule(), PhasePolicy::pi_(), geom);
             ModelId qf{ModelKind::TJZ_QF, 3, 3, Boundary::periodic, {}, {}, {}};
             bool equal = operator_equal(H, build_model(qf));
             ModelId cf{ModelKind::TJZ, 3, 3, Boundary::periodic, {}, {}, {}};
             ExactVector v = build_frozen(build_model(cf), H,
                                          encode(ProductState::from_string("100"), geom),
                                          PhasePolicy::Theta::pi);
             set_bool(r, equal && H.apply(v).is_zero(),
                      "theta=pi build matches Eq. (QF_tJz); equal-weight state annihilated");
             if (r.match) r.computed = r.expected;
         }});
}

void add_criterion_11(std::vector<Claim>& claims) {
    for (int L : {3, 5, 7}) {
        std::ostringstream id;
        id << "AC11/bellness-L" << L;
        claims.push_back(
            {id.str(), 11, L, "sec IV: rho_{j,j+1} = (P_phi0 + P_phi1)/2, 'are two Bell states'",
             [L](ClaimResult& r) {
                 ChainGeometry geom(L, 2, Boundary::periodic);
                 ExactVector psi = ghz_frozen(L, 1);
                 bool ok = true;
                 for (int j = 0; j < L; ++j) {
                     DensityMatrix rho = reduced_density(psi, {j, (j + 1) % L}, geom);
                     BellnessReport rep = bellness(rho);
                     ok = ok && rep.is_half_bell_mixture;
                 }
                 set_bool(r, ok, "half Bell mixture on every adjacent pair");
                 if (r.match) r.computed = r.expected;
             }});
    }
}

void add_criterion_12(std::vector<Claim>& claims) {
    claims.push_back({"AC12/source-free-preserved", 12, 0,
                      "sec VI: 'the source-free condition' is preserved by quad flips",
                      [](ClaimResult& r) {
                          EdgeLattice lat = EdgeLattice::rectangular(2, 2, 3);
                          set_bool(r, source_free_preserved_exhaustive(lat),
                                   "preserved for all 3^12 states");
                          if (r.match) r.computed = r.expected;
                      }});
    claims.push_back({"AC12/row-charges-conserved", 12, 0,
                      "sec VI: '1-form symmetry charges defined on any path' commute with H",
                      [](ClaimResult& r) {
                          EdgeLattice lat = EdgeLattice::rectangular(2, 2, 3);
                          set_bool(r, row_charges_commute_exhaustive(lat),
                                   "every flip preserves every row charge (any couplings)");
                          if (r.match) r.computed = r.expected;
                      }});
    claims.push_back(
        {"AC12/two-term-frozen", 12, 0, "sec VI: the two-loop difference 'is frozen under the dynamics'",
         [](ClaimResult& r) {
             QuadFixture fx = fixture_two_term();
             bool sf = true;
             for (const auto& [idx, amp] : fx.state.entries)
                 sf = sf && source_free(fx.lattice, EdgeState{fx.lattice.unpack(idx)});
             bool frozen = apply_hamiltonian(fx.lattice, fx.state, isotropic_xi(3)).is_zero();
             IrreducibleString top = horizontal_cut_label(fx.lattice, fx.state, 2);
             auto mid = horizontal_cut_amplitudes(fx.lattice, fx.state, 1);
             // the middle cut carries |00> - |11> on the two bulk edges
             bool cut_ok = top.str() == "12" && mid.size() == 2 &&
                           mid.at(0 * 3 + 0) + mid.at(1 * 3 + 1) == ExactScalar();
             set_bool(r, sf && frozen && cut_ok,
                      "source-free, annihilated, cut labels (12) and |00>-|11|");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC12/three-term-frozen", 12, 0,
         "sec VI: the larger frozen area cuts to (|000> - |110> - |011>)/sqrt(3)",
         [](ClaimResult& r) {
             QuadFixture fx = fixture_three_term();
             bool sf = true;
             for (const auto& [idx, amp] : fx.state.entries)
                 sf = sf && source_free(fx.lattice, EdgeState{fx.lattice.unpack(idx)});
             bool frozen = apply_hamiltonian(fx.lattice, fx.state, isotropic_xi(3)).is_zero();
             auto mid = horizontal_cut_amplitudes(fx.lattice, fx.state, 1);
             ChainGeometry cutg(3, 3);
             bool cuts_ok = mid.size() == 3 &&
                            mid.at(encode(ProductState::from_string("000"), cutg)) == ExactScalar(1) &&
                            mid.at(encode(ProductState::from_string("110"), cutg)) == ExactScalar(-1) &&
                            mid.at(encode(ProductState::from_string("011"), cutg)) == ExactScalar(-1);
             bool label_ok = horizontal_cut_label(fx.lattice, fx.state, 1).str() == "0";
             set_bool(r, sf && frozen && cuts_ok && label_ok,
                      "source-free, annihilated, psi^{(0)}_3 on the bulk cut");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC12/ghz-loop-coherence", 12, 0,
         "Eq. (GHZ loop): coherence preserved in the dimer background",
         [](ClaimResult& r) {
             QuadFixture fx = fixture_four_frozen_loops();
             GhzStepResult step = ghz_loop_step(fx.lattice, fx.state, 2, 2);
             bool creates_ghz = !step.zero && step.color_symmetric &&
                                step.result == plus_dimer_ghz_state(fx.lattice);
             // a further step on the north vertex deforms the loop coherently
             GhzStepResult deform = ghz_loop_step(fx.lattice, step.result, 2, 3);
             set_bool(r, creates_ghz && !deform.zero && deform.color_symmetric,
                      "dimer x GHZ loop created, deformation stays color-symmetric");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC12/ghz-loop-dephasing", 12, 0,
         "sec VI: single-colored background 'leads to dephasing and eventual loss of coherence'",
         [](ClaimResult& r) {
             EdgeLattice lat = EdgeLattice::plus_shape(3);
             ExactVector state = plus_ghz_blue_background(lat);
             GhzStepResult step = ghz_loop_step(lat, state, 2, 3);
             set_bool(r, !step.zero && !step.color_symmetric, "asymmetric branching flagged");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back({"AC12/no-support-zero", 12, 0,
                      "vertex without four equal colors: the flip term annihilates the state",
                      [](ClaimResult& r) {
                          EdgeLattice lat = EdgeLattice::plus_shape(3);
                          std::vector<int> colors(lat.edge_count(), 2);
                          auto star = lat.incident(2, 2);
                          colors[star[0]] = 0;
                          colors[star[1]] = 1;
                          ExactVector v(lat.state_count());
                          v.set(lat.pack(colors), ExactScalar(1));
                          GhzStepResult step = ghz_loop_step(lat, v, 2, 2);
                          set_bool(r, step.zero, "zero vector");
                          if (r.match) r.computed = r.expected;
                      }});
}

void add_criterion_13(std::vector<Claim>& claims) {
    for (int L : {3, 4}) {
        std::ostringstream id;
        id << "AC13/iom-commute-L" << L;
        claims.push_back(
            {id.str(), 13, L, "sec II.D: nonlocal IOMs 'commuting with all local projectors'",
             [L](ClaimResult& r) {
                 ChainGeometry geom(L, 3);
                 ModelId qf{ModelKind::TJZ_QF, 3, L, Boundary::open, {}, {}, {}};
                 ExactOperator H = build_model(qf);
                 bool ok = true;
                 for (int a1 : {1, 2})
                     for (int b1 : {1, 2}) {
                         ExactOperator M = tjz_iom({a1}, {b1}, geom);
                         ok = ok && commutator(M, H).is_zero();
                         for (int a2 : {1, 2})
                             for (int b2 : {1, 2}) {
                                 ExactOperator M2 = tjz_iom({a1, a2}, {b1, b2}, geom);
                                 ok = ok && commutator(M2, H).is_zero();
                             }
                     }
                 set_bool(r, ok, "[M, H] = 0 for all k <= 2 IOMs");
                 if (r.match) r.computed = r.expected;
             }});
    }
    claims.push_back(
        {"AC13/noncommuting-pair", 13, 3,
         "sec II.D: 'the commutant algebra is non-Abelian'",
         [](ClaimResult& r) {
             ChainGeometry geom(3, 3);
             ModelId qf{ModelKind::TJZ_QF, 3, 3, Boundary::open, {}, {}, {}};
             ExactOperator H = build_model(qf);
             ExactOperator M1 = tjz_iom({1}, {2}, geom);  // flips up to down
             ExactOperator M2 = tjz_iom({2}, {1}, geom);
             bool commute_with_h = commutator(M1, H).is_zero() && commutator(M2, H).is_zero();
             bool noncommuting = !commutator(M1, M2).is_zero();
             set_bool(r, commute_with_h && noncommuting,
                      "[M1,H] = [M2,H] = 0 and [M1,M2] != 0");
             if (r.match) r.computed = r.expected;
         }});
    claims.push_back(
        {"AC13/per-bond-commutation", 13, 3,
         "sec II.D: IOMs commute with every individual bond term, not merely the sum",
         [](ClaimResult& r) {
             ChainGeometry geom(3, 3);
             auto psis = qf_projector_states(ModelKind::TJZ_QF, 3);
             ExactOperator local(9);
             for (const auto& psi : psis) local = local + outer_projector(psi);
             bool ok = true;
             for (int bond = 0; bond < 2; ++bond) {
                 ExactOperator term = embed_window_operator(local, bond, 1, geom);
                 for (int a : {1, 2})
                     for (int b : {1, 2})
                         ok = ok && commutator(tjz_iom({a}, {b}, geom), term).is_zero();
             }
             set_bool(r, ok, "[M, h_x] = 0 for every bond term");
             if (r.match) r.computed = r.expected;
         }});
}

}  // namespace

VerifyReport run_all_claims(const VerifyOptions& options) {
    std::vector<Claim> claims;
    add_criterion_1(claims);
    add_criterion_2(claims);
    add_criterion_3(claims);
    add_criterion_4(claims);
    add_criterion_5(claims);
    add_criterion_6(claims);
    add_criterion_7(claims);
    add_criterion_8(claims);
    add_criterion_9(claims, options.fusion_sweep);
    add_criterion_10(claims);
    add_criterion_11(claims);
    add_criterion_12(claims);
    add_criterion_13(claims);

    VerifyReport report;
    for (const auto& claim : claims) {
        ClaimResult result;
        result.id = claim.id;
        result.criterion = claim.criterion;
        result.paper_ref = claim.paper_ref;
        if (options.max_L > 0 && claim.L > options.max_L) {
            result.skipped = true;
            result.skip_reason = "config";
            result.expected = "skipped by configuration";
            result.computed = result.expected;
            result.match = true;
            report.claims.push_back(std::move(result));
            ++report.skipped;
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            claim.run(result);
        } catch (const BudgetExceeded& e) {
            result.skipped = true;
            result.skip_reason = std::string("budget: ") + e.what();
            result.match = false;
        } catch (const std::exception& e) {
            result.match = false;
            result.computed = std::string("exception: ") + e.what();
            if (result.expected.empty()) result.expected = "no exception";
        }
        auto t1 = std::chrono::steady_clock::now();
        result.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (result.skipped)
            ++report.skipped;
        else if (result.match)
            ++report.passed;
        else
            ++report.failed;
        report.claims.push_back(std::move(result));
    }
    bool budget_skip = false;
    for (const auto& c : report.claims)
        if (c.skipped && c.skip_reason.rfind("budget", 0) == 0) budget_skip = true;
    report.exit_code = report.failed > 0 ? 3 : (budget_skip ? 2 : 0);
    return report;
}

nlohmann::json report_to_json(const VerifyReport& report, bool with_timestamp) {
    nlohmann::json j;
    j["schema"] = "fragmenta-report-v1";
    if (with_timestamp) {
        j["timestamp"] =
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count();
    }
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : report.claims) {
        claims.push_back({{"id", c.id},
                          {"criterion", c.criterion},
                          {"paper_ref", c.paper_ref},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"match", c.match},
                          {"skipped", c.skipped},
                          {"skip_reason", c.skip_reason},
                          {"runtime_ms", c.runtime_ms}});
    }
    j["claims"] = claims;
    j["summary"] = {{"total", report.claims.size()},
                    {"passed", report.passed},
                    {"failed", report.failed},
                    {"skipped", report.skipped},
                    {"exit_code", report.exit_code}};
    return j;
}

std::string criterion_summary(const VerifyReport& report) {
    std::ostringstream os;
    for (int crit = 1; crit <= 13; ++crit) {
        int total = 0, passed = 0, skipped = 0;
        double ms = 0;
        for (const auto& c : report.claims) {
            if (c.criterion != crit) continue;
            ++total;
            ms += c.runtime_ms;
            if (c.skipped)
                ++skipped;
            else if (c.match)
                ++passed;
        }
        os << "criterion " << crit << ": ";
        if (passed + skipped == total && passed > 0)
            os << (skipped ? "PASS (with skips)" : "PASS");
        else if (total == skipped)
            os << "SKIPPED";
        else
            os << "FAIL";
        os << "  [" << passed << "/" << total - skipped << " claims";
        if (skipped) os << ", " << skipped << " skipped";
        os << ", " << static_cast<long>(ms) << " ms]\n";
        for (const auto& c : report.claims)
            if (c.criterion == crit && !c.skipped && !c.match)
                os << "    FAILED " << c.id << ": expected " << c.expected << ", got " << c.computed
                   << "\n";
    }
    return os.str();
}

}  // namespace fragmenta
