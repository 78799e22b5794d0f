#include "fragmenta/promote.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace fragmenta {

namespace {

// adjacency of the local window graph: edges where the (hermitian-closed)
// rule has a nonzero off-diagonal matrix element
std::map<std::int64_t, std::set<std::int64_t>> local_adjacency(const LocalRule& rule) {
    std::map<std::int64_t, std::set<std::int64_t>> adj;
    LocalRule closed = rule.hermitian_closed();
    for (const auto& e : closed.entries) {
        if (e.in == e.out || e.amp.is_zero()) continue;
        adj[e.in].insert(e.out);
        adj[e.out].insert(e.in);
    }
    return adj;
}

// BFS from the smallest config of each component; returns distances and an
// odd-cycle witness when the component is not bipartite.
LocalComponent explore_component(std::int64_t root,
                                 const std::map<std::int64_t, std::set<std::int64_t>>& adj,
                                 std::map<std::int64_t, int>& color) {
    // first pass: gather members, then re-root at the lexicographic minimum
    std::vector<std::int64_t> members;
    std::deque<std::int64_t> q{root};
    std::set<std::int64_t> seen{root};
    while (!q.empty()) {
        std::int64_t u = q.front();
        q.pop_front();
        members.push_back(u);
        auto it = adj.find(u);
        if (it == adj.end()) continue;
        for (std::int64_t v : it->second)
            if (seen.insert(v).second) q.push_back(v);
    }
    std::sort(members.begin(), members.end());
    std::int64_t rep = members.front();

    LocalComponent comp;
    comp.configs = members;
    comp.dist.assign(members.size(), -1);
    std::map<std::int64_t, int> dist;
    std::map<std::int64_t, std::int64_t> parent;
    dist[rep] = 0;
    parent[rep] = -1;
    q.push_back(rep);
    while (!q.empty()) {
        std::int64_t u = q.front();
        q.pop_front();
        auto it = adj.find(u);
        if (it == adj.end()) continue;
        for (std::int64_t v : it->second) {
            if (!dist.count(v)) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                q.push_back(v);
            } else if (comp.bipartite && (dist[v] + dist[u]) % 2 == 0) {
                // odd cycle through edge (u, v): climb both BFS paths
                comp.bipartite = false;
                std::vector<std::int64_t> pu, pv;
                for (std::int64_t w = u; w != -1; w = parent[w]) pu.push_back(w);
                for (std::int64_t w = v; w != -1; w = parent[w]) pv.push_back(w);
                std::set<std::int64_t> on_u(pu.begin(), pu.end());
                std::int64_t meet = -1;
                for (std::int64_t w : pv)
                    if (on_u.count(w)) {
                        meet = w;
                        break;
                    }
                std::vector<std::int64_t> cycle;
                for (std::int64_t w : pu) {
                    cycle.push_back(w);
                    if (w == meet) break;
                }
                std::vector<std::int64_t> tail;
                for (std::int64_t w : pv) {
                    if (w == meet) break;
                    tail.push_back(w);
                }
                std::reverse(tail.begin(), tail.end());
                cycle.insert(cycle.end(), tail.begin(), tail.end());
                comp.odd_cycle = cycle;
            }
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        comp.dist[i] = dist[members[i]];
        color[members[i]] = 1;
    }
    return comp;
}

}  // namespace

std::size_t LocalSectorDecomposition::num_nontrivial() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.size() > 1 ? 1 : 0;
    return n;
}

int LocalSectorDecomposition::component_of(std::int64_t config) const {
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& cfgs = components[i].configs;
        if (std::binary_search(cfgs.begin(), cfgs.end(), config)) return static_cast<int>(i);
    }
    throw Error("configuration not covered by decomposition");
}

LocalSectorDecomposition decompose_local(const LocalRule& rule) {
    LocalSectorDecomposition dec;
    dec.num_colors = rule.num_colors;
    dec.range = rule.range;
    auto adj = local_adjacency(rule);
    std::map<std::int64_t, int> visited;
    const std::int64_t wdim = rule.window_dim();
    for (std::int64_t c = 0; c < wdim; ++c) {
        if (visited.count(c)) continue;
        if (!adj.count(c)) {
            LocalComponent singleton;
            singleton.configs = {c};
            singleton.dist = {0};
            dec.components.push_back(std::move(singleton));
            visited[c] = 1;
            continue;
        }
        dec.components.push_back(explore_component(c, adj, visited));
    }
    return dec;
}

std::vector<ExactVector> local_projector_states(const LocalSectorDecomposition& dec,
                                                const PhasePolicy& policy) {
    std::int64_t wdim = 1;
    for (int i = 0; i <= dec.range; ++i) wdim *= dec.num_colors;
    std::vector<ExactVector> states;
    for (std::size_t ci = 0; ci < dec.components.size(); ++ci) {
        const auto& comp = dec.components[ci];
        if (comp.size() <= 1) continue;
        PhasePolicy::Theta th = policy.theta_for(static_cast<int>(ci));
        if (th == PhasePolicy::Theta::pi && !comp.bipartite) {
            std::ostringstream msg;
            msg << "theta=pi alternating signs requested on a non-bipartite local component "
                << "(representative " << comp.configs.front() << ")";
            throw FrustrationError(msg.str(), comp.odd_cycle);
        }
        ExactVector psi(wdim);
        for (std::size_t i = 0; i < comp.configs.size(); ++i) {
            int sign = (th == PhasePolicy::Theta::pi && comp.dist[i] % 2 == 1) ? -1 : 1;
            psi.set(comp.configs[i], ExactScalar(sign));
        }
        states.push_back(std::move(psi));
    }
    return states;
}

namespace {

// Global bipartiteness over every component of the full connectivity graph;
// used by the theta=0 pairwise-dynamics check in promote().
std::optional<FrustrationError> global_odd_cycle(const ExactOperator& H) {
    std::vector<int> color(H.dim, -1);
    std::vector<std::int64_t> parent(H.dim, -1);
    for (std::int64_t root = 0; root < H.dim; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<std::int64_t> q{root};
        while (!q.empty()) {
            std::int64_t u = q.front();
            q.pop_front();
            for (const auto& [v, amp] : H.rows[u]) {
                if (v == u || amp.is_zero()) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    q.push_back(v);
                } else if (color[v] == color[u]) {
                    std::vector<std::int64_t> pu, pv;
                    for (std::int64_t w = u; w != -1; w = parent[w]) pu.push_back(w);
                    for (std::int64_t w = v; w != -1; w = parent[w]) pv.push_back(w);
                    std::set<std::int64_t> on_u(pu.begin(), pu.end());
                    std::int64_t meet = -1;
                    for (std::int64_t w : pv)
                        if (on_u.count(w)) {
                            meet = w;
                            break;
                        }
                    std::vector<std::int64_t> cycle;
                    for (std::int64_t w : pu) {
                        cycle.push_back(w);
                        if (w == meet) break;
                    }
                    std::vector<std::int64_t> tail;
                    for (std::int64_t w : pv) {
                        if (w == meet) break;
                        tail.push_back(w);
                    }
                    std::reverse(tail.begin(), tail.end());
                    cycle.insert(cycle.end(), tail.begin(), tail.end());
                    return FrustrationError("global connectivity graph has an odd cycle", cycle);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

ExactOperator promote(const LocalRule& rule, const PhasePolicy& policy, const ChainGeometry& geom,
                      const std::vector<Rational>& couplings, std::int64_t global_check_budget) {
    LocalSectorDecomposition dec = decompose_local(rule);
    std::vector<ExactVector> psis = local_projector_states(dec, policy);

    bool pairwise = true;
    for (const auto& c : dec.components)
        if (c.size() > 2) pairwise = false;
    bool any_theta_zero = policy.theta == PhasePolicy::Theta::zero;
    for (const auto& [ci, th] : policy.component_override)
        if (th == PhasePolicy::Theta::zero) any_theta_zero = true;
    if (pairwise && any_theta_zero && geom.hilbert_dim() <= global_check_budget) {
        ExactOperator H_cf = assemble_hamiltonian(rule.hermitian_closed(), geom);
        if (auto err = global_odd_cycle(H_cf)) throw *err;
    }

    const int k = rule.range;
    const int bonds = geom.num_bonds(k);
    std::vector<Rational> J = couplings;
    if (J.empty()) J.assign(bonds, Rational(1));
    if (static_cast<int>(J.size()) != bonds) throw Error("coupling count does not match bond count");

    ExactOperator local(rule.window_dim());
    for (const auto& psi : psis) {
        ExactOperator proj = outer_projector(psi);
        local = local + proj;
    }
    ExactOperator H(geom.hilbert_dim());
    for (int x = 0; x < bonds; ++x) {
        ExactOperator term = embed_window_operator(local, x, k, geom);
        for (std::int64_t i = 0; i < H.dim; ++i)
            for (const auto& [j, v] : term.rows[i]) H.add(i, j, v * ExactScalar(J[x]));
    }
    return H;
}

BipartiteReport detect_frustration(const ExactOperator& H_cf, std::int64_t seed) {
    BipartiteReport rep;
    std::map<std::int64_t, int> color;
    std::map<std::int64_t, std::int64_t> parent;
    color[seed] = 0;
    parent[seed] = -1;
    std::deque<std::int64_t> q{seed};
    while (!q.empty()) {
        std::int64_t u = q.front();
        q.pop_front();
        rep.component.push_back(u);
        for (const auto& [v, amp] : H_cf.rows[u]) {
            if (v == u || amp.is_zero()) continue;
            auto it = color.find(v);
            if (it == color.end()) {
                color[v] = 1 - color[u];
                parent[v] = u;
                q.push_back(v);
            } else if (rep.bipartite && it->second == color[u]) {
                rep.bipartite = false;
                std::vector<std::int64_t> pu, pv;
                for (std::int64_t w = u; w != -1; w = parent[w]) pu.push_back(w);
                for (std::int64_t w = v; w != -1; w = parent[w]) pv.push_back(w);
                std::set<std::int64_t> on_u(pu.begin(), pu.end());
                std::int64_t meet = -1;
                for (std::int64_t w : pv)
                    if (on_u.count(w)) {
                        meet = w;
                        break;
                    }
                for (std::int64_t w : pu) {
                    rep.odd_cycle.push_back(w);
                    if (w == meet) break;
                }
                std::vector<std::int64_t> tail;
                for (std::int64_t w : pv) {
                    if (w == meet) break;
                    tail.push_back(w);
                }
                std::reverse(tail.begin(), tail.end());
                rep.odd_cycle.insert(rep.odd_cycle.end(), tail.begin(), tail.end());
            }
        }
    }
    std::sort(rep.component.begin(), rep.component.end());
    return rep;
}

namespace {

std::string digits_of(std::int64_t config, int sites, int N) {
    std::string s(sites, '0');
    for (int i = sites - 1; i >= 0; --i) {
        s[i] = static_cast<char>('0' + config % N);
        config /= N;
    }
    return s;
}

}  // namespace

std::string local_connectivity_dot(const LocalRule& rule) {
    LocalSectorDecomposition dec = decompose_local(rule);
    std::ostringstream os;
    os << "graph local_connectivity {\n";
    static const char* palette[] = {"lightblue", "salmon",     "palegreen", "gold",
                                    "plum",      "lightcyan",  "orange",    "gray80"};
    for (std::size_t ci = 0; ci < dec.components.size(); ++ci) {
        const auto& comp = dec.components[ci];
        for (std::int64_t c : comp.configs)
            os << "  \"" << digits_of(c, dec.range + 1, dec.num_colors) << "\" [style=filled,fillcolor="
               << palette[ci % 8] << "];\n";
    }
    auto closed = rule.hermitian_closed();
    std::set<std::pair<std::int64_t, std::int64_t>> drawn;
    for (const auto& e : closed.entries) {
        if (e.in == e.out || e.amp.is_zero()) continue;
        auto key = std::minmax(e.in, e.out);
        if (!drawn.insert(key).second) continue;
        os << "  \"" << digits_of(key.first, dec.range + 1, dec.num_colors) << "\" -- \""
           << digits_of(key.second, dec.range + 1, dec.num_colors) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

std::string global_connectivity_dot(const ExactOperator& H, const ChainGeometry& geom) {
    std::ostringstream os;
    os << "graph global_connectivity {\n";
    std::set<std::pair<std::int64_t, std::int64_t>> drawn;
    for (std::int64_t i = 0; i < H.dim; ++i) {
        for (const auto& [j, v] : H.rows[i]) {
            if (i == j || v.is_zero()) continue;
            auto key = std::minmax(i, j);
            if (!drawn.insert(key).second) continue;
            os << "  \"" << decode(key.first, geom).str() << "\" -- \"" << decode(key.second, geom).str()
               << "\";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace fragmenta
