#pragma once

#include <string>
#include <vector>

#include "fragmenta/hilbert.hpp"
#include "fragmenta/promote.hpp"

namespace fragmenta {

// tJz digit convention: 0 = empty, 1 = up, 2 = down.
// dipole (spin-1) digit convention: 0 = minus, 1 = zero, 2 = plus.
enum class ModelKind { PF, TL, TJZ, TJZ_QF, DIPOLE3, DIPOLE3_QF, TFIM, TFIM_QF };

ModelKind model_kind_from_string(const std::string& name);
std::string model_kind_name(ModelKind kind);

struct ModelId {
    ModelKind kind = ModelKind::TL;
    int N = 2;
    int L = 2;
    Boundary boundary = Boundary::open;
    std::vector<Rational> J;                 // bond couplings; empty = all ones
    std::vector<Rational> h;                 // TFIM on-site fields; empty = all ones
    std::vector<std::vector<Rational>> g;    // PF couplings g^{ab}; empty = all ones

    ChainGeometry geometry() const;
    void validate() const;
};

// Parent local rules (all Hermitian-closed).
LocalRule pf_rule(int N, const std::vector<std::vector<Rational>>& g = {});
LocalRule tl_rule(int N);
LocalRule tjz_rule();
LocalRule dipole3_rule();
LocalRule tfim_xx_rule(int N);  // the bond part; the field part is on-site

// The model Hamiltonian of the cited equation, term by term.
ExactOperator build_model(const ModelId& id);

// Window-level projector target states for the *_QF models, in the order the
// corresponding equations list them.
std::vector<ExactVector> qf_projector_states(ModelKind kind, int N);

// Generalized Paulis; X|n> = |n+1 mod N>. The Hermitian Z combination
// Z + Z^dag only stays inside Gaussian rationals for N <= 4.
ExactOperator generalized_x(int N);
ExactOperator hermitian_z(int N);

// Controlled subtraction U|a,b> = |a, b-a mod N> and the sequential circuit
// C = U_{L-1,L} ... U_{1,2} (the i = 1 factor acts first).
std::vector<std::int64_t> controlled_subtraction_permutation(int N, int L);
ExactOperator controlled_subtraction_circuit(int N, int L);
ExactOperator plus_projector_sum(int N, int L, const std::vector<Rational>& J = {});

// Nonlocal tJz integrals of motion
//   M^{beta...}_{alpha...} = sum_{j_1<...<j_k} prod_l |beta_l><alpha_l|_{j_l},
// with the literal single-site operator (it annihilates the empty state).
// alphas/betas use the tJz digit convention (1 = up, 2 = down).
ExactOperator tjz_iom(const std::vector<int>& alphas, const std::vector<int>& betas,
                      const ChainGeometry& geom);

}  // namespace fragmenta
