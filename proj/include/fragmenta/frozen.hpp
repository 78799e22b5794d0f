#pragma once

#include <vector>

#include "fragmenta/hilbert.hpp"
#include "fragmenta/krylov.hpp"
#include "fragmenta/promote.hpp"

namespace fragmenta {

struct ConstraintViolation : Error {
    using Error::Error;
};

// A frozen segment of the TL chain: either a frozen product state
// (length == label length) or a two-color entangled frozen state
// (length > label length, same parity, label alternating over the colors).
struct FrozenSegment {
    IrreducibleString label;
    std::vector<int> colors;  // sorted distinct; exactly two when entangled
    int length = 0;

    bool entangled() const { return length > label.length(); }
    void validate() const;
    FrozenSegment reversed() const;
    std::string str() const;
};

FrozenSegment product_segment(const std::string& digits);
FrozenSegment entangled_segment(const std::string& label, std::pair<int, int> colorset, int length);

// Symbolic Krylov-sector label: ordered frozen segments plus a dimer count.
struct SectorLabel {
    std::vector<FrozenSegment> segments;
    int dimer_count = 0;

    std::string str() const;
};

// sum_a lambda_a |phi_a> over the CF sector of `seed`, with
//   theta = 0 : lambda_a = (-1)^{d_a}  (requires a bipartite sector graph)
//   theta = pi: lambda_a = +1          (always consistent)
// where d_a is the BFS distance from the lexicographically smallest member.
// The result is verified to satisfy H_qf v = 0 exactly before returning.
ExactVector build_frozen(const ExactOperator& H_cf, const ExactOperator& H_qf, std::int64_t seed,
                         PhasePolicy::Theta theta);

// |psi^{s,{b,c}}_l>: superposition over all product states reachable from
// the seed |s b...b> under dynamics involving only the two colors, with
// alternating signs. Lives on an l-site chain with N colors.
ExactVector tl_segment(const IrreducibleString& s, std::pair<int, int> colorset, int length, int N);

ExactVector segment_vector(const FrozenSegment& seg, int N);

// Tensor product of color-compatible frozen segments; verified to be
// annihilated by the TL Hamiltonian on the combined chain.
ExactVector compose(const std::vector<FrozenSegment>& segments, int N);

// The dimer Sum_a |aa> on two sites (unnormalized).
ExactVector dimer_vector(int N);

// The entangled basis Omega: all tensor products of non-crossing dimers and
// admissible frozen fillings. Exactly 2^L elements for N = 2; overcomplete
// for N >= 3.
std::vector<ExactVector> omega_basis(const ChainGeometry& geom);

// Symbolic fusion outcome for the tensor product of two frozen segments per
// the complete/blocking/partial cases; disjoint color sets leave the pair
// frozen. Throws ConstraintViolation for inputs outside the classified cases
// (an empty entangled label sharing exactly one color, or products carrying
// three or more colors against an entangled partner).
SectorLabel fuse(const FrozenSegment& a, const FrozenSegment& b);

// Numerically confirms fuse(): the dynamical closure of a x b under the TL
// projector terms contains the predicted representative state.
bool fuse_verify(const FrozenSegment& a, const FrozenSegment& b, int N,
                 const ClosureBudget& budget = {});

// GHZ-type frozen states of the N = 2 TL chain with odd L under PBC;
// parity +1 gives the even-occupation state, parity -1 the odd one.
// Amplitudes are i^{weight} restricted to the parity class.
ExactVector ghz_frozen(int L, int parity);

}  // namespace fragmenta
