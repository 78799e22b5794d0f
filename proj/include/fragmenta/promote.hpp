#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fragmenta/hilbert.hpp"

namespace fragmenta {

// Raised when a requested sign pattern cannot be realized because the
// relevant connectivity graph contains an odd cycle. Carries the cycle.
struct FrustrationError : Error {
    std::vector<std::int64_t> odd_cycle;
    FrustrationError(const std::string& msg, std::vector<std::int64_t> cycle)
        : Error(msg), odd_cycle(std::move(cycle)) {}
};

// Connected component of the (k+1)-site connectivity graph. The
// representative is the lexicographically smallest configuration and BFS
// distances are measured from it.
struct LocalComponent {
    std::vector<std::int64_t> configs;  // sorted ascending; configs[0] = representative
    std::vector<int> dist;              // BFS distance from the representative, per config
    bool bipartite = true;
    std::vector<std::int64_t> odd_cycle;  // witness when non-bipartite

    std::size_t size() const { return configs.size(); }
};

struct LocalSectorDecomposition {
    int num_colors = 2;
    int range = 1;
    std::vector<LocalComponent> components;  // ordered by representative; singletons included

    std::size_t num_nontrivial() const;
    // component index containing a given configuration
    int component_of(std::int64_t config) const;
};

LocalSectorDecomposition decompose_local(const LocalRule& rule);

// theta = 0: all member amplitudes +1.
// theta = pi: amplitude (-1)^d with d the BFS distance from the representative.
struct PhasePolicy {
    enum class Theta { zero, pi };
    Theta theta = Theta::zero;
    std::map<int, Theta> component_override;  // by component index

    Theta theta_for(int component) const {
        auto it = component_override.find(component);
        return it == component_override.end() ? theta : it->second;
    }
    static PhasePolicy zero() { return {Theta::zero, {}}; }
    static PhasePolicy pi_() { return {Theta::pi, {}}; }
};

// The projector target |psi^alpha> = sum_i e^{i theta_i} |w_i^alpha> on the
// local window, for every component with |H_alpha| > 1.
std::vector<ExactVector> local_projector_states(const LocalSectorDecomposition& dec,
                                                const PhasePolicy& policy);

// H^QF = sum_x J_x sum_{|H_alpha|>1} |psi^alpha><psi^alpha|_{x,x+k}.
//
// theta = pi demands a bipartite local component (the alternating sign
// pattern); a non-bipartite one raises FrustrationError with the odd cycle.
// theta = 0 is always locally well-defined, but for rules whose nontrivial
// local components are all two-dimensional the entangled frozen states carry
// the alternating signs globally; in that case the global connectivity graph
// is checked for odd cycles (the tJz chain with odd L under PBC is the
// canonical offender) and frustration is reported instead of building a
// Hamiltonian without zero modes in the affected sectors.
ExactOperator promote(const LocalRule& rule, const PhasePolicy& policy, const ChainGeometry& geom,
                      const std::vector<Rational>& couplings = {},
                      std::int64_t global_check_budget = 1 << 20);

struct BipartiteReport {
    bool bipartite = true;
    std::vector<std::int64_t> component;  // BFS closure of the seed
    std::vector<std::int64_t> odd_cycle;  // witness when non-bipartite
};

// Bipartiteness of the global connectivity component containing `seed`.
BipartiteReport detect_frustration(const ExactOperator& H_cf, std::int64_t seed);

// Graphviz exports; nodes are labeled by digit strings.
std::string local_connectivity_dot(const LocalRule& rule);
std::string global_connectivity_dot(const ExactOperator& H, const ChainGeometry& geom);

}  // namespace fragmenta
