#pragma once

#include <string>
#include <vector>

#include "fragmenta/hilbert.hpp"

namespace fragmenta {

// Residue of left-to-right removal of adjacent equal pairs; adjacent
// entries always differ.
struct IrreducibleString {
    std::vector<int> colors;

    bool empty() const { return colors.empty(); }
    int length() const { return static_cast<int>(colors.size()); }
    std::string str() const;
    bool operator==(const IrreducibleString& o) const { return colors == o.colors; }
    bool operator<(const IrreducibleString& o) const { return colors < o.colors; }
};

IrreducibleString pair_reduce(const ProductState& s);
IrreducibleString pair_reduce(const std::vector<int>& digits);
IrreducibleString concat_reduce(const IrreducibleString& a, const IrreducibleString& b);

// Connected component of the product-basis connectivity graph.
struct CfSector {
    std::int64_t representative = 0;       // smallest member
    std::vector<std::int64_t> members;     // sorted ascending
    std::size_t size() const { return members.size(); }
};

std::vector<CfSector> cf_sectors(const ExactOperator& H, const ChainGeometry& geom,
                                 std::int64_t budget = 1 << 24);

// Model-specific classical sector labels.
std::string tjz_spin_pattern(const ProductState& s);  // vacancies deleted

struct DipoleLabel {
    long charge = 0;                 // sum of spins
    std::vector<int> defect_spins;   // spins equal to their previous occupied neighbor
    std::vector<long> interval_dipoles;  // P_k between consecutive defects, sites indexed from 1
    std::string str() const;
    bool operator==(const DipoleLabel& o) const {
        return charge == o.charge && defect_spins == o.defect_spins &&
               interval_dipoles == o.interval_dipoles;
    }
};
DipoleLabel dipole_label(const ProductState& s);

// Invariant subspace generated from a seed vector: grow span{v, Hv, ...}
// with exact rank tracking until it stabilizes.
struct KrylovSubspace {
    int dimension = 0;
    std::vector<ExactVector> basis;  // the vectors that extended the span
};

struct ClosureBudget {
    int max_dim = 5000;
    int max_steps = 100000;
};

KrylovSubspace krylov_closure(const ExactOperator& H, const ExactVector& seed,
                              const ClosureBudget& budget = {});

// Closure under a list of generators (e.g. the individual projector terms);
// this is the dynamical module of the seed as used in the fusion analysis.
KrylovSubspace module_closure(const std::vector<ExactOperator>& generators, const ExactVector& seed,
                              const ClosureBudget& budget = {});

// Number of Krylov sectors visible through `basis` (which must span the
// space; rank-checked): the frozen elements contribute the dimension of
// their joint span (degenerate zero modes are one sector each), and the
// dynamical elements contribute their distinct minimal invariant closures.
// Non-minimal closures arise from basis elements that superpose several
// sectors of the non-orthogonal basis and are discarded; closures that
// still overlap without containment are merged. Closures grow under
// `generators` when given (the individual bond terms), else under H.
int sector_census(const ExactOperator& H, const std::vector<ExactVector>& basis,
                  const ClosureBudget& budget = {},
                  const std::vector<ExactOperator>& generators = {});

struct CensusRow {
    int sector_id = 0;
    std::int64_t dim = 0;
    std::string label;
    std::string representative;
};

// CSV report for the classical sectors of a model Hamiltonian; the labeler
// is model-specific (irreducible string, spin pattern, dipole data).
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace fragmenta
