#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fragmenta/exact.hpp"

namespace fragmenta {

enum class Boundary { open, periodic };

// One-dimensional chain of L sites with local dimension N.
struct ChainGeometry {
    int L = 1;
    int N = 2;
    Boundary boundary = Boundary::open;

    ChainGeometry() = default;
    ChainGeometry(int L_, int N_, Boundary b = Boundary::open);

    std::int64_t hilbert_dim() const;
    int num_bonds(int range) const;  // number of local-term placements for range k
};

// Base-N digit string of length L, packed MSB-first so that the integer
// encoding orders states lexicographically.
struct ProductState {
    std::vector<int> digits;

    ProductState() = default;
    explicit ProductState(std::vector<int> d) : digits(std::move(d)) {}
    static ProductState from_string(const std::string& s);

    int size() const { return static_cast<int>(digits.size()); }
    std::string str() const;
};

std::int64_t encode(const ProductState& s, const ChainGeometry& geom);
ProductState decode(std::int64_t index, const ChainGeometry& geom);

// digit of packed state `index` at `site`, for a chain of length L over N colors
int digit_at(std::int64_t index, int site, int L, int N);
std::int64_t with_digit(std::int64_t index, int site, int value, int L, int N);

// A translation-invariant local term acting on k+1 consecutive sites,
// given by its nonzero matrix elements on (k+1)-site configurations.
struct LocalRule {
    int num_colors = 2;  // N
    int range = 1;       // k: the term spans sites [x, x+k]

    struct Entry {
        std::int64_t in;   // ket configuration, base-N packed over k+1 sites
        std::int64_t out;  // bra configuration
        ExactScalar amp;
    };
    std::vector<Entry> entries;

    std::int64_t window_dim() const;
    void add(std::int64_t out, std::int64_t in, const ExactScalar& amp);

    LocalRule hermitian_closed() const;
    bool is_hermitian() const;

    // The local term as a dense window operator.
    ExactOperator window_operator() const;
};

// H = sum_x J_x (local term embedded at offset x); wraps cyclically under PBC.
ExactOperator assemble_hamiltonian(const LocalRule& rule, const ChainGeometry& geom,
                                   const std::vector<Rational>& couplings = {});

// the individual embedded terms J_x H_{x,x+k}, one per placement
std::vector<ExactOperator> assemble_bond_terms(const LocalRule& rule, const ChainGeometry& geom,
                                               const std::vector<Rational>& couplings = {});

// Embeds an operator supported on sites [x, x+k] into the full chain.
ExactOperator embed_window_operator(const ExactOperator& window, int x, int k,
                                    const ChainGeometry& geom);

// Embeds a window vector (support on sites [x, x+k]) tensored with a basis
// configuration on the remaining sites.
std::int64_t splice_window(std::int64_t window_config, std::int64_t rest_config, int x, int k,
                           const ChainGeometry& geom);

ExactVector basis_vector(const ChainGeometry& geom, std::int64_t index);
ExactVector basis_vector(const ChainGeometry& geom, const std::string& digits);

// Parse amplitudes like "1", "-1", "i", "-i" applied to digit strings:
// "|100> - |010>" style helpers for tests and the CLI.
ExactVector state_sum(const ChainGeometry& geom,
                      const std::vector<std::pair<ExactScalar, std::string>>& terms);

}  // namespace fragmenta
