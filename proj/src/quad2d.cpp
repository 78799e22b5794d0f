#include "fragmenta/quad2d.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fragmenta {

EdgeLattice EdgeLattice::rectangular(int W, int H, int N, const std::vector<int>& dangling_rows) {
    if (W < 1 || H < 1 || N < 2) throw Error("lattice needs W, H >= 1 and N >= 2");
    EdgeLattice lat;
    lat.N = N;
    lat.W = W;
    lat.H = H;
    for (int y = 0; y <= H; ++y)
        for (int x = 0; x < W; ++x) lat.edges.push_back({EdgeKind::horizontal, x, y});
    for (int y = 0; y < H; ++y)
        for (int x = 0; x <= W; ++x) lat.edges.push_back({EdgeKind::vertical, x, y});
    for (int y : dangling_rows) {
        if (y < 0 || y > H) throw Error("dangling row out of range");
        lat.edges.push_back({EdgeKind::dangling_left, 0, y});
        lat.edges.push_back({EdgeKind::dangling_right, W, y});
    }
    if (lat.edge_count() > 38) throw Error("edge count exceeds the packing width");
    return lat;
}

EdgeLattice EdgeLattice::plus_shape(int N) {
    EdgeLattice lat;
    lat.N = N;
    lat.W = 4;
    lat.H = 4;
    auto add_h = [&](int x, int y) { lat.edges.push_back({EdgeKind::horizontal, x, y}); };
    auto add_v = [&](int x, int y) { lat.edges.push_back({EdgeKind::vertical, x, y}); };
    // center star
    add_h(1, 2);
    add_h(2, 2);
    add_v(2, 1);
    add_v(2, 2);
    // loop around north vertex (2,3)
    add_h(1, 3);
    add_h(2, 3);
    add_v(2, 3);
    // south (2,1)
    add_h(1, 1);
    add_h(2, 1);
    add_v(2, 0);
    // east (3,2)
    add_v(3, 1);
    add_v(3, 2);
    add_h(3, 2);
    // west (1,2)
    add_v(1, 1);
    add_v(1, 2);
    add_h(0, 2);
    return lat;
}

std::int64_t EdgeLattice::state_count() const {
    std::int64_t d = 1;
    for (int i = 0; i < edge_count(); ++i) d *= N;
    return d;
}

int EdgeLattice::edge_index(EdgeKind kind, int x, int y) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges[i].kind == kind && edges[i].x == x && edges[i].y == y) return i;
    return -1;
}

std::vector<int> EdgeLattice::incident(int x, int y) const {
    std::vector<int> out;
    int e;
    if ((e = edge_index(EdgeKind::horizontal, x - 1, y)) >= 0) out.push_back(e);
    if ((e = edge_index(EdgeKind::horizontal, x, y)) >= 0) out.push_back(e);
    if ((e = edge_index(EdgeKind::vertical, x, y - 1)) >= 0) out.push_back(e);
    if ((e = edge_index(EdgeKind::vertical, x, y)) >= 0) out.push_back(e);
    if (x == 0 && (e = edge_index(EdgeKind::dangling_left, 0, y)) >= 0) out.push_back(e);
    if (x == W && (e = edge_index(EdgeKind::dangling_right, W, y)) >= 0) out.push_back(e);
    return out;
}

std::vector<std::pair<int, int>> EdgeLattice::four_valent_vertices() const {
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y <= H; ++y)
        for (int x = 0; x <= W; ++x)
            if (incident(x, y).size() == 4) out.emplace_back(x, y);
    return out;
}

std::vector<std::array<int, 4>> EdgeLattice::faces() const {
    std::vector<std::array<int, 4>> out;
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            int b = edge_index(EdgeKind::horizontal, x, y);
            int t = edge_index(EdgeKind::horizontal, x, y + 1);
            int l = edge_index(EdgeKind::vertical, x, y);
            int r = edge_index(EdgeKind::vertical, x + 1, y);
            if (b >= 0 && t >= 0 && l >= 0 && r >= 0) out.push_back({b, t, l, r});
        }
    }
    return out;
}

std::vector<int> EdgeLattice::row_path(int y) const {
    std::vector<int> path;
    int e;
    if ((e = edge_index(EdgeKind::dangling_left, 0, y)) >= 0) path.push_back(e);
    for (int x = 0; x < W; ++x)
        if ((e = edge_index(EdgeKind::horizontal, x, y)) >= 0) path.push_back(e);
    if ((e = edge_index(EdgeKind::dangling_right, W, y)) >= 0) path.push_back(e);
    if (path.empty()) throw Error("row carries no horizontal edges");
    return path;
}

std::int64_t EdgeLattice::pack(const std::vector<int>& colors) const {
    if (static_cast<int>(colors.size()) != edge_count()) throw Error("color count mismatch");
    std::int64_t idx = 0;
    for (int c : colors) {
        if (c < 0 || c >= N) throw Error("edge color out of range");
        idx = idx * N + c;
    }
    return idx;
}

std::vector<int> EdgeLattice::unpack(std::int64_t index) const {
    std::vector<int> colors(edge_count());
    for (int i = edge_count() - 1; i >= 0; --i) {
        colors[i] = static_cast<int>(index % N);
        index /= N;
    }
    return colors;
}

std::string EdgeLattice::ascii_render(const std::vector<int>& colors) const {
    // vertices as '+', horizontal edges as -c-, vertical edges as the color digit
    std::ostringstream os;
    for (int y = H; y >= 0; --y) {
        std::ostringstream hrow;
        int e = edge_index(EdgeKind::dangling_left, 0, y);
        hrow << (e >= 0 ? "-" + std::to_string(colors[e]) + "-" : "   ");
        for (int x = 0; x <= W; ++x) {
            hrow << "+";
            if (x < W) {
                int h = edge_index(EdgeKind::horizontal, x, y);
                hrow << (h >= 0 ? "-" + std::to_string(colors[h]) + "-" : "   ");
            }
        }
        e = edge_index(EdgeKind::dangling_right, W, y);
        hrow << (e >= 0 ? "-" + std::to_string(colors[e]) + "-" : "");
        os << hrow.str() << "\n";
        if (y > 0) {
            os << "   ";
            for (int x = 0; x <= W; ++x) {
                int v = edge_index(EdgeKind::vertical, x, y - 1);
                os << (v >= 0 ? std::to_string(colors[v]) : " ");
                if (x < W) os << "   ";
            }
            os << "\n";
        }
    }
    return os.str();
}

long charge(const EdgeLattice& lat, const EdgeState& state, const std::vector<int>& path,
            int alpha) {
    if (static_cast<int>(state.colors.size()) != lat.edge_count())
        throw Error("state does not match lattice");
    long q = 0;
    for (std::size_t j = 0; j < path.size(); ++j) {
        int e = path[j];
        if (e < 0 || e >= lat.edge_count()) throw Error("invalid path edge");
        if (state.colors[e] == alpha) q += (j % 2 == 0) ? 1 : -1;
    }
    return q;
}

bool source_free(const EdgeLattice& lat, const EdgeState& state) {
    for (const auto& face : lat.faces()) {
        std::vector<int> counts(lat.N, 0);
        for (int e : face) counts[state.colors[e]] += 1;
        for (int c : counts)
            if (c % 2 != 0) return false;
    }
    return true;
}

XiMatrix isotropic_xi(int N) { return XiMatrix(N, std::vector<Rational>(N, Rational(1))); }

XiMatrix generic_xi(int N) {
    XiMatrix xi(N, std::vector<Rational>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            int lo = std::min(a, b), hi = std::max(a, b);
            xi[a][b] = make_rational(1 + lo + hi * (hi + 1) / 2, 1 + hi);
        }
    return xi;
}

ExactVector apply_vertex_term(const EdgeLattice& lat, const ExactVector& v, int vx, int vy,
                              const XiMatrix& xi) {
    std::vector<int> star = lat.incident(vx, vy);
    if (star.size() != 4) throw Error("quad flips act on four-valent vertices");
    ExactVector out(v.dim);
    for (const auto& [idx, amp] : v.entries) {
        std::vector<int> colors = lat.unpack(idx);
        int beta = colors[star[0]];
        bool uniform = true;
        for (int e : star) uniform = uniform && colors[e] == beta;
        if (!uniform) continue;
        for (int alpha = 0; alpha < lat.N; ++alpha) {
            if (xi[alpha][beta] == 0) continue;
            for (int e : star) colors[e] = alpha;
            out.add(lat.pack(colors), amp * ExactScalar(xi[alpha][beta]));
        }
        for (int e : star) colors[e] = beta;
    }
    return out;
}

ExactVector apply_hamiltonian(const EdgeLattice& lat, const ExactVector& v, const XiMatrix& xi) {
    ExactVector out(v.dim);
    for (const auto& [vx, vy] : lat.four_valent_vertices()) {
        ExactVector term = apply_vertex_term(lat, v, vx, vy, xi);
        for (const auto& [i, a] : term.entries) out.add(i, a);
    }
    return out;
}

bool source_free_preserved_exhaustive(const EdgeLattice& lat, std::int64_t budget) {
    if (lat.state_count() > budget) throw BudgetExceeded("exhaustive sweep exceeds budget");
    auto verts = lat.four_valent_vertices();
    std::vector<std::vector<int>> stars;
    for (const auto& [vx, vy] : verts) stars.push_back(lat.incident(vx, vy));
    for (std::int64_t s = 0; s < lat.state_count(); ++s) {
        EdgeState st{lat.unpack(s)};
        bool sf = source_free(lat, st);
        for (const auto& star : stars) {
            int beta = st.colors[star[0]];
            bool uniform = true;
            for (int e : star) uniform = uniform && st.colors[e] == beta;
            if (!uniform) continue;
            for (int alpha = 0; alpha < lat.N; ++alpha) {
                EdgeState flipped = st;
                for (int e : star) flipped.colors[e] = alpha;
                if (source_free(lat, flipped) != sf) return false;
            }
        }
    }
    return true;
}

bool row_charges_commute_exhaustive(const EdgeLattice& lat, std::int64_t budget) {
    if (lat.state_count() > budget) throw BudgetExceeded("exhaustive sweep exceeds budget");
    auto verts = lat.four_valent_vertices();
    std::vector<std::vector<int>> stars;
    for (const auto& [vx, vy] : verts) stars.push_back(lat.incident(vx, vy));
    std::vector<std::vector<int>> paths;
    for (int y = 0; y <= lat.H; ++y) {
        try {
            paths.push_back(lat.row_path(y));
        } catch (const Error&) {
        }
    }
    // [Q, H] = 0 for diagonal Q iff every nonzero matrix element of H
    // preserves every row charge
    for (std::int64_t s = 0; s < lat.state_count(); ++s) {
        EdgeState st{lat.unpack(s)};
        for (const auto& star : stars) {
            int beta = st.colors[star[0]];
            bool uniform = true;
            for (int e : star) uniform = uniform && st.colors[e] == beta;
            if (!uniform) continue;
            for (int alpha = 0; alpha < lat.N; ++alpha) {
                EdgeState flipped = st;
                for (int e : star) flipped.colors[e] = alpha;
                for (const auto& path : paths)
                    for (int color = 0; color < lat.N; ++color)
                        if (charge(lat, st, path, color) != charge(lat, flipped, path, color))
                            return false;
            }
        }
    }
    return true;
}

IrreducibleString horizontal_cut_label(const EdgeLattice& lat, const ExactVector& v, int row) {
    auto path = lat.row_path(row);
    bool first = true;
    IrreducibleString label;
    for (const auto& [idx, amp] : v.entries) {
        std::vector<int> colors = lat.unpack(idx);
        std::vector<int> cut;
        for (int e : path) cut.push_back(colors[e]);
        IrreducibleString l = pair_reduce(cut);
        if (first) {
            label = l;
            first = false;
        } else if (!(l == label)) {
            throw Error("cut label differs across constituents: " + label.str() + " vs " + l.str());
        }
    }
    if (first) throw Error("cannot label the zero vector");
    return label;
}

std::map<std::int64_t, ExactScalar> horizontal_cut_amplitudes(const EdgeLattice& lat,
                                                              const ExactVector& v, int row) {
    auto path = lat.row_path(row);
    std::map<std::int64_t, ExactScalar> out;
    for (const auto& [idx, amp] : v.entries) {
        std::vector<int> colors = lat.unpack(idx);
        std::int64_t key = 0;
        for (int e : path) key = key * lat.N + colors[e];
        out[key] += amp;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

ExactVector color_swapped(const EdgeLattice& lat, const ExactVector& v, int c1, int c2) {
    ExactVector out(v.dim);
    for (const auto& [idx, amp] : v.entries) {
        std::vector<int> colors = lat.unpack(idx);
        for (int& c : colors) {
            if (c == c1)
                c = c2;
            else if (c == c2)
                c = c1;
        }
        out.add(lat.pack(colors), amp);
    }
    return out;
}

GhzStepResult ghz_loop_step(const EdgeLattice& lat, const ExactVector& v, int vx, int vy,
                            std::pair<int, int> ghz_colors) {
    GhzStepResult res;
    res.result = apply_vertex_term(lat, v, vx, vy, isotropic_xi(lat.N));
    res.zero = res.result.is_zero();
    if (!res.zero) {
        ExactVector swapped = color_swapped(lat, res.result, ghz_colors.first, ghz_colors.second);
        res.color_symmetric = swapped == res.result;
    }
    return res;
}

// ---------------------------------------------------------------------------
// fixtures

namespace {

void set_all(std::vector<int>& colors, const std::vector<int>& edges, int color) {
    for (int e : edges) colors[e] = color;
}

}  // namespace

QuadFixture fixture_two_term() {
    QuadFixture fx;
    fx.name = "two_term_frozen";
    fx.lattice = EdgeLattice::rectangular(2, 2, 3, {0, 2});
    const auto& lat = fx.lattice;
    using EK = EdgeLattice::EdgeKind;

    std::vector<int> center = lat.incident(1, 1);
    std::vector<int> green_edges;
    for (int e = 0; e < lat.edge_count(); ++e)
        if (std::find(center.begin(), center.end(), e) == center.end()) green_edges.push_back(e);

    std::vector<int> base(lat.edge_count(), 2);
    // red strings terminating on the left rough boundary
    base[lat.edge_index(EK::dangling_left, 0, 0)] = 1;
    base[lat.edge_index(EK::dangling_left, 0, 2)] = 1;

    std::vector<int> red = base, blue = base;
    set_all(red, center, 1);
    set_all(blue, center, 0);

    ExactVector state(lat.state_count());
    state.set(lat.pack(red), ExactScalar(1));
    state.set(lat.pack(blue), ExactScalar(-1));
    fx.state = std::move(state);
    return fx;
}

QuadFixture fixture_three_term() {
    QuadFixture fx;
    fx.name = "three_term_frozen";
    fx.lattice = EdgeLattice::rectangular(3, 2, 3);
    const auto& lat = fx.lattice;
    using EK = EdgeLattice::EdgeKind;

    std::vector<int> base(lat.edge_count(), 2);
    // blue caps above and below the shared face keep every face even
    base[lat.edge_index(EK::horizontal, 1, 0)] = 0;
    base[lat.edge_index(EK::horizontal, 1, 2)] = 0;

    auto h = [&](int x) { return lat.edge_index(EK::horizontal, x, 1); };
    auto vleft = std::vector<int>{lat.edge_index(EK::vertical, 1, 0), lat.edge_index(EK::vertical, 1, 1)};
    auto vright = std::vector<int>{lat.edge_index(EK::vertical, 2, 0), lat.edge_index(EK::vertical, 2, 1)};

    std::vector<int> t0 = base, t1 = base, t2 = base;
    set_all(t0, {h(0), h(1), h(2)}, 0);
    set_all(t0, vleft, 0);
    set_all(t0, vright, 0);
    t1 = t0;
    set_all(t1, {h(0), h(1)}, 1);
    set_all(t1, vleft, 1);
    t2 = t0;
    set_all(t2, {h(1), h(2)}, 1);
    set_all(t2, vright, 1);

    ExactVector state(lat.state_count());
    state.set(lat.pack(t0), ExactScalar(1));
    state.set(lat.pack(t1), ExactScalar(-1));
    state.set(lat.pack(t2), ExactScalar(-1));
    fx.state = std::move(state);
    return fx;
}

namespace {

// the four vertex loops around the center of the plus patch and the outer
// 12-edge loop left over when the center star is removed
struct PlusLoops {
    std::vector<int> center;               // incident(2,2)
    std::vector<std::vector<int>> loops;   // incident(N/S/E/W)
    std::vector<int> outer;                // union of loops minus center edges
};

PlusLoops plus_loops(const EdgeLattice& lat) {
    PlusLoops pl;
    pl.center = lat.incident(2, 2);
    for (auto [x, y] : std::vector<std::pair<int, int>>{{2, 3}, {2, 1}, {3, 2}, {1, 2}})
        pl.loops.push_back(lat.incident(x, y));
    std::set<int> center_set(pl.center.begin(), pl.center.end());
    for (const auto& loop : pl.loops)
        for (int e : loop)
            if (!center_set.count(e)) pl.outer.push_back(e);
    return pl;
}

}  // namespace

QuadFixture fixture_four_frozen_loops() {
    QuadFixture fx;
    fx.name = "four_frozen_loops";
    fx.lattice = EdgeLattice::plus_shape(3);
    const auto& lat = fx.lattice;
    PlusLoops pl = plus_loops(lat);

    ExactVector state(lat.state_count());
    // product of (|red loop> - |blue loop>) over the four vertex loops
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> colors(lat.edge_count(), 0);
        int blues = 0;
        for (int k = 0; k < 4; ++k) {
            int c = (mask >> k) & 1 ? 1 : 0;
            if (c == 0) ++blues;
            set_all(colors, pl.loops[k], c);
        }
        state.add(lat.pack(colors), ExactScalar(blues % 2 == 0 ? 1 : -1));
    }
    fx.state = std::move(state);
    return fx;
}

ExactVector plus_dimer_ghz_state(const EdgeLattice& lat) {
    PlusLoops pl = plus_loops(lat);
    ExactVector state(lat.state_count());
    for (int alpha = 0; alpha < lat.N; ++alpha) {
        for (int c : {1, 0}) {
            std::vector<int> colors(lat.edge_count(), 0);
            set_all(colors, pl.outer, c);
            set_all(colors, pl.center, alpha);
            state.add(lat.pack(colors), ExactScalar(1));
        }
    }
    return state;
}

ExactVector plus_ghz_blue_background(const EdgeLattice& lat) {
    PlusLoops pl = plus_loops(lat);
    ExactVector state(lat.state_count());
    for (int c : {1, 0}) {
        std::vector<int> colors(lat.edge_count(), 0);
        set_all(colors, pl.outer, c);
        set_all(colors, pl.center, 0);
        state.add(lat.pack(colors), ExactScalar(1));
    }
    return state;
}

}  // namespace fragmenta
