#pragma once

#include <complex>
#include <vector>

#include "fragmenta/hilbert.hpp"
#include "fragmenta/promote.hpp"

namespace fragmenta {

// Reduced density matrix on a site region; kept exact, with a float view
// for spectral diagnostics. Normalization happens here, not upstream.
struct DensityMatrix {
    std::vector<int> region;  // site indices, ascending
    std::int64_t dim = 0;     // N^{|region|}
    std::vector<std::vector<ExactScalar>> rho;

    ExactScalar trace() const;
    std::vector<std::vector<std::complex<double>>> to_complex() const;
};

DensityMatrix reduced_density(const ExactVector& v, const std::vector<int>& region,
                              const ChainGeometry& geom);

struct SchmidtData {
    int cut = 0;                 // sites [0, cut) vs [cut, L)
    int rank = 0;                // exact, from the integer amplitude matrix
    std::vector<double> mu;      // Schmidt coefficients, descending
    double entropy = 0.0;        // nats
    // largest floating singular value beyond the exact rank; the exact rank
    // is authoritative when they disagree
    double float_residual = 0.0;
};

SchmidtData schmidt(const ExactVector& v, int cut, const ChainGeometry& geom);

// Exact verification that the nonzero spectrum of the reduced density matrix
// at `cut` is exactly the claimed multiset of rationals (with multiplicity).
bool verify_schmidt_squares(const ExactVector& v, int cut, const ChainGeometry& geom,
                            const std::vector<Rational>& claimed);

struct BellnessReport {
    std::vector<double> eigenvalues;          // descending
    std::vector<std::vector<double>> bell_overlaps;  // top-2 eigenvectors x 4 Bell states
    bool is_half_bell_mixture = false;        // rho == (P_phi0 + P_phi1)/2 within tol
};

// Two-qubit diagnostic against the (|00>-|11>)/sqrt2, (|01>+|10>)/sqrt2 pair.
BellnessReport bellness(const DensityMatrix& rho, double tol = 1e-9);

struct WindowReport {
    int window = 0;        // left edge x of the (k+1)-site window
    Rational c_entangled;  // weight on the local entangled-frozen subspace
    Rational c_product;    // weight on the locally frozen product configurations
    std::vector<Rational> c_alpha;  // per-component overlap with the canonical entangled vector
};

// Reduced density matrices of a frozen state over every (k+1)-site window,
// decomposed into the local entangled-frozen component and the frozen-product
// remainder. Requires H^QF v = 0 for the promoted model of `rule`/`policy`.
std::vector<WindowReport> window_tomography(const ExactVector& v, const LocalRule& rule,
                                            const PhasePolicy& policy, const ChainGeometry& geom);

std::string window_tomography_csv(const std::vector<WindowReport>& reports);

}  // namespace fragmenta
