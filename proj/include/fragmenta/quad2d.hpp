#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fragmenta/exact.hpp"
#include "fragmenta/krylov.hpp"

namespace fragmenta {

// Edge-colored square lattice patch. Vertices live on a (W+1) x (H+1) grid;
// horizontal edges h(x,y) join (x,y)-(x+1,y), vertical edges v(x,y) join
// (x,y)-(x,y+1). Rough vertical boundaries are modeled by dangling
// horizontal stubs on selected rows, so strings can terminate only there.
// Operators are never materialized at this scale; everything acts on
// sparse vectors directly.
struct EdgeLattice {
    enum class EdgeKind { horizontal, vertical, dangling_left, dangling_right };
    struct Edge {
        EdgeKind kind;
        int x, y;
    };

    int N = 3;
    int W = 0, H = 0;
    std::vector<Edge> edges;

    static EdgeLattice rectangular(int W, int H, int N, const std::vector<int>& dangling_rows = {});
    // the cross-shaped 16-edge patch hosting the loop fixtures
    static EdgeLattice plus_shape(int N);

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::int64_t state_count() const;
    int edge_index(EdgeKind kind, int x, int y) const;  // -1 when absent

    // edges incident to the grid vertex (x, y), dangling stubs included
    std::vector<int> incident(int x, int y) const;
    std::vector<std::pair<int, int>> four_valent_vertices() const;
    // unit faces with all four boundary edges present
    std::vector<std::array<int, 4>> faces() const;
    // ordered horizontal path across row y (left stub, h(0,y).., right stub)
    std::vector<int> row_path(int y) const;

    std::int64_t pack(const std::vector<int>& colors) const;
    std::vector<int> unpack(std::int64_t index) const;

    std::string ascii_render(const std::vector<int>& colors) const;
};

struct EdgeState {
    std::vector<int> colors;  // one per edge, in lattice edge order
};

// 1-form charge sum_j (-1)^j [color(e_j) = alpha] along an edge path.
long charge(const EdgeLattice& lat, const EdgeState& state, const std::vector<int>& path,
            int alpha);

// every face carries an even number of each color
bool source_free(const EdgeLattice& lat, const EdgeState& state);

using XiMatrix = std::vector<std::vector<Rational>>;
XiMatrix isotropic_xi(int N);
XiMatrix generic_xi(int N);  // symmetric, pairwise distinct couplings

// sum_{alpha,beta} xi^{alpha beta} A^{alpha beta}_v applied to a sparse vector
ExactVector apply_vertex_term(const EdgeLattice& lat, const ExactVector& v, int vx, int vy,
                              const XiMatrix& xi);
ExactVector apply_hamiltonian(const EdgeLattice& lat, const ExactVector& v, const XiMatrix& xi);

// exhaustive checks over the full state space (budgeted)
bool source_free_preserved_exhaustive(const EdgeLattice& lat, std::int64_t budget = 1 << 21);
bool row_charges_commute_exhaustive(const EdgeLattice& lat, std::int64_t budget = 1 << 21);

// the common irreducible string of the row path across all constituents;
// throws with the offending configurations when they disagree
IrreducibleString horizontal_cut_label(const EdgeLattice& lat, const ExactVector& v, int row);
// induced amplitude per row-path configuration (summed over the rest)
std::map<std::int64_t, ExactScalar> horizontal_cut_amplitudes(const EdgeLattice& lat,
                                                              const ExactVector& v, int row);

ExactVector color_swapped(const EdgeLattice& lat, const ExactVector& v, int c1, int c2);

struct GhzStepResult {
    ExactVector result;
    bool zero = false;
    bool color_symmetric = false;  // invariant under swapping the GHZ color pair
};

// one isotropic vertex application plus the coherence diagnostic
GhzStepResult ghz_loop_step(const EdgeLattice& lat, const ExactVector& v, int vx, int vy,
                            std::pair<int, int> ghz_colors = {0, 1});

// --- fixtures reconstructing the pictorial examples (see docs/fixtures.md) ---

struct QuadFixture {
    std::string name;
    EdgeLattice lattice;
    ExactVector state;
};

// two-term frozen plaquette superposition on the 2x2 patch with dangling rows
QuadFixture fixture_two_term();
// three-term frozen domino superposition on the 3x2 patch
QuadFixture fixture_three_term();
// product of four two-color frozen loops around the center of the plus patch
QuadFixture fixture_four_frozen_loops();
// expected outcome of the center step on the four-loop fixture:
// all-color center dimer loop x GHZ superposition of the outer loop
ExactVector plus_dimer_ghz_state(const EdgeLattice& lat);
// GHZ outer loop over a single-colored (blue) center background
ExactVector plus_ghz_blue_background(const EdgeLattice& lat);

}  // namespace fragmenta
