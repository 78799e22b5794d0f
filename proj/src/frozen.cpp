#include "fragmenta/frozen.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "fragmenta/models.hpp"

namespace fragmenta {

void FrozenSegment::validate() const {
    if (length < 1) throw ConstraintViolation("segment length must be positive");
    for (std::size_t i = 0; i + 1 < label.colors.size(); ++i)
        if (label.colors[i] == label.colors[i + 1])
            throw ConstraintViolation("segment label is not irreducible");
    if (entangled()) {
        if (colors.size() != 2)
            throw ConstraintViolation("entangled segment needs exactly two colors");
        if ((length - label.length()) % 2 != 0)
            throw ConstraintViolation("segment length and label length differ in parity");
        for (int c : label.colors)
            if (c != colors[0] && c != colors[1])
                throw ConstraintViolation("label uses colors outside the segment color set");
    } else {
        std::set<int> distinct(label.colors.begin(), label.colors.end());
        if (std::vector<int>(distinct.begin(), distinct.end()) != colors)
            throw ConstraintViolation("product segment color set must match its label");
    }
}

FrozenSegment FrozenSegment::reversed() const {
    FrozenSegment r = *this;
    std::reverse(r.label.colors.begin(), r.label.colors.end());
    return r;
}

std::string FrozenSegment::str() const {
    std::ostringstream os;
    if (entangled()) {
        os << "psi(s=" << (label.empty() ? "-" : label.str()) << ",colors={" << colors[0] << ","
           << colors[1] << "},l=" << length << ")";
    } else {
        os << "|" << label.str() << ">";
    }
    return os.str();
}

FrozenSegment product_segment(const std::string& digits) {
    FrozenSegment seg;
    seg.label = pair_reduce(ProductState::from_string(digits));
    if (seg.label.str() != digits) throw ConstraintViolation("product segment must be irreducible");
    std::set<int> distinct(seg.label.colors.begin(), seg.label.colors.end());
    seg.colors.assign(distinct.begin(), distinct.end());
    seg.length = seg.label.length();
    seg.validate();
    return seg;
}

FrozenSegment entangled_segment(const std::string& label, std::pair<int, int> colorset, int length) {
    FrozenSegment seg;
    for (char c : label) seg.label.colors.push_back(c - '0');
    seg.colors = {std::min(colorset.first, colorset.second),
                  std::max(colorset.first, colorset.second)};
    seg.length = length;
    if (!seg.entangled()) throw ConstraintViolation("length must exceed the label length");
    seg.validate();
    return seg;
}

std::string SectorLabel::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : segments) {
        os << (first ? "" : " x ") << s.str();
        first = false;
    }
    if (dimer_count > 0) os << (first ? "" : " x ") << "D^" << dimer_count;
    if (first && dimer_count == 0) os << "(empty)";
    return os.str();
}

namespace {

// BFS over the rows of H restricted to the component of `seed`; returns the
// sorted members together with distances from the lexicographic minimum and
// an odd-cycle witness if the component graph is not bipartite.
struct SectorGraph {
    std::vector<std::int64_t> members;
    std::map<std::int64_t, int> dist;
    bool bipartite = true;
    std::vector<std::int64_t> odd_cycle;
};

SectorGraph explore_sector(const ExactOperator& H, std::int64_t seed) {
    SectorGraph g;
    std::set<std::int64_t> seen{seed};
    std::deque<std::int64_t> q{seed};
    while (!q.empty()) {
        std::int64_t u = q.front();
        q.pop_front();
        g.members.push_back(u);
        for (const auto& [v, amp] : H.rows[u]) {
            if (v == u || amp.is_zero()) continue;
            if (seen.insert(v).second) q.push_back(v);
        }
    }
    std::sort(g.members.begin(), g.members.end());
    std::int64_t rep = g.members.front();
    std::map<std::int64_t, std::int64_t> parent;
    g.dist[rep] = 0;
    parent[rep] = -1;
    q.push_back(rep);
    while (!q.empty()) {
        std::int64_t u = q.front();
        q.pop_front();
        for (const auto& [v, amp] : H.rows[u]) {
            if (v == u || amp.is_zero()) continue;
            if (!g.dist.count(v)) {
                g.dist[v] = g.dist[u] + 1;
                parent[v] = u;
                q.push_back(v);
            } else if (g.bipartite && (g.dist[v] + g.dist[u]) % 2 == 0) {
                g.bipartite = false;
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
                    g.odd_cycle.push_back(w);
                    if (w == meet) break;
                }
                std::vector<std::int64_t> tail;
                for (std::int64_t w : pv) {
                    if (w == meet) break;
                    tail.push_back(w);
                }
                std::reverse(tail.begin(), tail.end());
                g.odd_cycle.insert(g.odd_cycle.end(), tail.begin(), tail.end());
            }
        }
    }
    return g;
}

}  // namespace

ExactVector build_frozen(const ExactOperator& H_cf, const ExactOperator& H_qf, std::int64_t seed,
                         PhasePolicy::Theta theta) {
    SectorGraph g = explore_sector(H_cf, seed);
    if (theta == PhasePolicy::Theta::zero && !g.bipartite)
        throw FrustrationError("alternating frozen signs are frustrated on a non-bipartite sector",
                               g.odd_cycle);
    ExactVector v(H_cf.dim);
    for (std::int64_t m : g.members) {
        int sign = (theta == PhasePolicy::Theta::zero && g.dist[m] % 2 == 1) ? -1 : 1;
        v.set(m, ExactScalar(sign));
    }
    ExactVector residual = H_qf.apply(v);
    if (!residual.is_zero())
        throw Error("internal consistency: constructed frozen state is not annihilated");
    return v;
}

ExactVector tl_segment(const IrreducibleString& s, std::pair<int, int> colorset, int length, int N) {
    int b = std::min(colorset.first, colorset.second);
    int c = std::max(colorset.first, colorset.second);
    if (b < 0 || c >= N || b == c) throw ConstraintViolation("invalid color set");
    for (int col : s.colors)
        if (col != b && col != c) throw ConstraintViolation("label uses colors outside the color set");
    for (std::size_t i = 0; i + 1 < s.colors.size(); ++i)
        if (s.colors[i] == s.colors[i + 1]) throw ConstraintViolation("label is not irreducible");
    if (length < s.length() || (length - s.length()) % 2 != 0)
        throw ConstraintViolation("segment length must exceed the label length by an even amount");

    ChainGeometry geom(length, N);
    if (length == s.length()) {
        return basis_vector(geom, encode(ProductState(s.colors), geom));
    }
    // seed |s b...b>, filled with the label's last color (or the smaller
    // color for an empty label) so the irreducible string is preserved
    std::vector<int> digits = s.colors;
    int fill = s.colors.empty() ? b : s.colors.back();
    digits.resize(length, fill);
    std::int64_t seed = encode(ProductState(digits), geom);

    // restricted dynamics: adjacent equal pairs within {b,c} flip to the
    // other color; this graph is always bipartite (each flip moves the
    // color-b count by two)
    std::set<std::int64_t> seen{seed};
    std::deque<std::int64_t> q{seed};
    std::vector<std::int64_t> members;
    auto neighbors = [&](std::int64_t u) {
        std::vector<std::int64_t> out;
        for (int site = 0; site + 1 < length; ++site) {
            int d1 = digit_at(u, site, length, N);
            int d2 = digit_at(u, site + 1, length, N);
            if (d1 != d2 || (d1 != b && d1 != c)) continue;
            int other = d1 == b ? c : b;
            out.push_back(with_digit(with_digit(u, site, other, length, N), site + 1, other, length, N));
        }
        return out;
    };
    while (!q.empty()) {
        std::int64_t u = q.front();
        q.pop_front();
        members.push_back(u);
        for (std::int64_t v : neighbors(u))
            if (seen.insert(v).second) q.push_back(v);
    }
    std::sort(members.begin(), members.end());
    std::int64_t rep = members.front();
    std::map<std::int64_t, int> dist;
    dist[rep] = 0;
    q.push_back(rep);
    while (!q.empty()) {
        std::int64_t u = q.front();
        q.pop_front();
        for (std::int64_t v : neighbors(u))
            if (!dist.count(v)) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    ExactVector out(geom.hilbert_dim());
    for (std::int64_t m : members) out.set(m, ExactScalar(dist[m] % 2 == 1 ? -1 : 1));
    return out;
}

ExactVector segment_vector(const FrozenSegment& seg, int N) {
    seg.validate();
    if (!seg.entangled()) {
        ChainGeometry geom(seg.length, N);
        return basis_vector(geom, encode(ProductState(seg.label.colors), geom));
    }
    return tl_segment(seg.label, {seg.colors[0], seg.colors[1]}, seg.length, N);
}

ExactVector dimer_vector(int N) {
    ExactVector d(static_cast<std::int64_t>(N) * N);
    for (int a = 0; a < N; ++a) d.set(a * N + a, ExactScalar(1));
    return d;
}

namespace {

void check_adjacency(const FrozenSegment& left, const FrozenSegment& right) {
    if (left.entangled() && right.entangled()) {
        for (int c : left.colors)
            for (int d : right.colors)
                if (c == d)
                    throw ConstraintViolation(
                        "adjacent entangled segments must involve disjoint colors (shared color " +
                        std::to_string(c) + ")");
    } else if (!left.entangled() && right.entangled()) {
        int boundary = left.label.colors.back();
        for (int d : right.colors)
            if (d == boundary)
                throw ConstraintViolation("product boundary color " + std::to_string(boundary) +
                                          " appears in the entangled neighbor");
    } else if (left.entangled() && !right.entangled()) {
        int boundary = right.label.colors.front();
        for (int d : left.colors)
            if (d == boundary)
                throw ConstraintViolation("product boundary color " + std::to_string(boundary) +
                                          " appears in the entangled neighbor");
    } else {
        if (left.label.colors.back() == right.label.colors.front())
            throw ConstraintViolation("adjacent product segments collide on color " +
                                      std::to_string(left.label.colors.back()));
    }
}

}  // namespace

ExactVector compose(const std::vector<FrozenSegment>& segments, int N) {
    if (segments.empty()) throw ConstraintViolation("composition needs at least one segment");
    for (const auto& s : segments) s.validate();
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) check_adjacency(segments[i], segments[i + 1]);
    int total = 0;
    ExactVector v = segment_vector(segments[0], N);
    total += segments[0].length;
    for (std::size_t i = 1; i < segments.size(); ++i) {
        v = tensor(v, segment_vector(segments[i], N));
        total += segments[i].length;
    }
    if (total >= 2) {
        ChainGeometry geom(total, N);
        ExactOperator H = assemble_hamiltonian(tl_rule(N), geom);
        if (!H.apply(v).is_zero())
            throw Error("internal consistency: composed state is not annihilated by the TL model");
    }
    return v;
}

namespace {

// frozen fillings of a maximal gap of length d: every admissible segment
// composition under the color-compatibility rules
void enumerate_fillings(int d, int N, int prev_kind /*0 none, 1 entangled, 2 product*/,
                        const std::vector<int>& prev_colors, int prev_boundary,
                        std::vector<FrozenSegment>& current,
                        std::vector<std::vector<FrozenSegment>>& out) {
    if (d == 0) {
        if (!current.empty()) out.push_back(current);
        return;
    }
    // product run (maximal: never followed by another product)
    if (prev_kind != 2) {
        std::vector<std::vector<int>> runs;
        std::vector<int> run;
        auto extend = [&](auto&& self, int remaining) -> void {
            if (!run.empty()) runs.push_back(run);
            if (remaining == 0) return;
            for (int c = 0; c < N; ++c) {
                if (!run.empty() && run.back() == c) continue;
                if (run.empty() && prev_kind == 1 &&
                    std::find(prev_colors.begin(), prev_colors.end(), c) != prev_colors.end())
                    continue;
                run.push_back(c);
                self(self, remaining - 1);
                run.pop_back();
            }
        };
        extend(extend, d);
        for (const auto& r : runs) {
            int p = static_cast<int>(r.size());
            FrozenSegment seg;
            seg.label.colors = r;
            std::set<int> distinct(r.begin(), r.end());
            seg.colors.assign(distinct.begin(), distinct.end());
            seg.length = p;
            current.push_back(seg);
            enumerate_fillings(d - p, N, 2, {}, r.back(), current, out);
            current.pop_back();
        }
    }
    // entangled segment
    for (int e = 2; e <= d; ++e) {
        for (int b = 0; b < N; ++b) {
            for (int c = b + 1; c < N; ++c) {
                if (prev_kind == 1 && (std::find(prev_colors.begin(), prev_colors.end(), b) !=
                                           prev_colors.end() ||
                                       std::find(prev_colors.begin(), prev_colors.end(), c) !=
                                           prev_colors.end()))
                    continue;
                if (prev_kind == 2 && (prev_boundary == b || prev_boundary == c)) continue;
                // labels: alternating strings over {b,c} with |s| < e, same parity
                std::vector<std::vector<int>> labels;
                if (e % 2 == 0) labels.push_back({});
                for (int k = e % 2 == 0 ? 2 : 1; k < e; k += 2) {
                    std::vector<int> s0, s1;
                    for (int i = 0; i < k; ++i) {
                        s0.push_back(i % 2 == 0 ? b : c);
                        s1.push_back(i % 2 == 0 ? c : b);
                    }
                    labels.push_back(s0);
                    labels.push_back(s1);
                }
                for (const auto& lab : labels) {
                    FrozenSegment seg;
                    seg.label.colors = lab;
                    seg.colors = {b, c};
                    seg.length = e;
                    current.push_back(seg);
                    enumerate_fillings(d - e, N, 1, {b, c}, -1, current, out);
                    current.pop_back();
                }
            }
        }
    }
}

std::vector<std::vector<FrozenSegment>> gap_fillings(int d, int N) {
    std::vector<std::vector<FrozenSegment>> out;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    std::vector<FrozenSegment> current;
    enumerate_fillings(d, N, 0, {}, -1, current, out);
    return out;
}

// blocks of a layout in site order
struct LayoutBlock {
    bool dimer = false;
    int gap_len = 0;  // when not a dimer
};

void enumerate_layouts(int remaining, std::vector<LayoutBlock>& current,
                       std::vector<std::vector<LayoutBlock>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    // extend / open a gap of every length  (gaps are maximal: a gap block is
    // never followed by another gap block)
    bool prev_gap = !current.empty() && !current.back().dimer;
    if (!prev_gap) {
        for (int d = 1; d <= remaining; ++d) {
            current.push_back({false, d});
            enumerate_layouts(remaining - d, current, out);
            current.pop_back();
        }
    }
    if (remaining >= 2) {
        current.push_back({true, 0});
        enumerate_layouts(remaining - 2, current, out);
        current.pop_back();
    }
}

}  // namespace

namespace {

// frozen fillings of a gap as vectors: the labeled segment compositions,
// completed (for N >= 3) to a full basis of the region's frozen space.
// From length 4 on, three colors admit region-frozen states outside every
// color-compatible composition, e.g. (|00>-|11>)(|00>-|22>) - |0110>.
std::vector<ExactVector> gap_filling_vectors(int d, int N) {
    std::vector<ExactVector> out;
    for (const auto& filling : gap_fillings(d, N)) {
        ExactVector fv(1);
        fv.set(0, ExactScalar(1));
        for (const auto& seg : filling) fv = tensor(fv, segment_vector(seg, N));
        out.push_back(std::move(fv));
    }
    if (N >= 3 && d >= 4) {
        ChainGeometry region(d, N);
        ExactEchelon span(region.hilbert_dim());
        for (const auto& v : out) span.insert(v);
        for (const auto& k : kernel_basis(assemble_hamiltonian(tl_rule(N), region))) {
            if (span.insert(k)) out.push_back(k);
        }
    }
    return out;
}

}  // namespace

std::vector<ExactVector> omega_basis(const ChainGeometry& geom) {
    if (geom.boundary != Boundary::open) throw Error("the entangled basis is defined on open chains");
    const int N = geom.N;
    std::vector<std::vector<LayoutBlock>> layouts;
    std::vector<LayoutBlock> cur;
    enumerate_layouts(geom.L, cur, layouts);

    // fillings per gap length, cached
    std::map<int, std::vector<ExactVector>> fillings;
    for (const auto& layout : layouts)
        for (const auto& blk : layout)
            if (!blk.dimer && !fillings.count(blk.gap_len))
                fillings[blk.gap_len] = gap_filling_vectors(blk.gap_len, N);

    ExactVector unit(1);
    unit.set(0, ExactScalar(1));

    std::vector<ExactVector> basis;
    ExactVector dim_vec = dimer_vector(N);
    for (const auto& layout : layouts) {
        std::vector<ExactVector> partials{unit};
        for (const auto& blk : layout) {
            std::vector<ExactVector> next;
            if (blk.dimer) {
                for (const auto& p : partials) next.push_back(tensor(p, dim_vec));
            } else {
                for (const auto& fv : fillings[blk.gap_len])
                    for (const auto& p : partials) next.push_back(tensor(p, fv));
            }
            partials = std::move(next);
        }
        for (auto& p : partials) basis.push_back(std::move(p));
    }
    return basis;
}

namespace {

SectorLabel reversed_label(const SectorLabel& lab) {
    SectorLabel r;
    r.dimer_count = lab.dimer_count;
    for (auto it = lab.segments.rbegin(); it != lab.segments.rend(); ++it)
        r.segments.push_back(it->reversed());
    return r;
}

void push_segment(SectorLabel& lab, const FrozenSegment& seg) {
    if (seg.length <= 0) return;
    lab.segments.push_back(seg);
}

FrozenSegment make_entangled_or_product(const IrreducibleString& s, const std::vector<int>& colors,
                                        int length) {
    FrozenSegment seg;
    seg.label = s;
    seg.length = length;
    if (length == s.length()) {
        std::set<int> distinct(s.colors.begin(), s.colors.end());
        seg.colors.assign(distinct.begin(), distinct.end());
    } else {
        seg.colors = colors;
    }
    seg.validate();
    return seg;
}

}  // namespace

SectorLabel fuse(const FrozenSegment& a, const FrozenSegment& b) {
    a.validate();
    b.validate();
    if (a.length < b.length) return reversed_label(fuse(b.reversed(), a.reversed()));

    std::set<int> ca(a.colors.begin(), a.colors.end());
    std::set<int> cb(b.colors.begin(), b.colors.end());
    std::vector<int> shared;
    for (int c : cb)
        if (ca.count(c)) shared.push_back(c);

    SectorLabel out;
    if (shared.empty()) {
        // frozen as-is
        push_segment(out, a);
        push_segment(out, b);
        return out;
    }

    const int l = a.length, lp = b.length;
    const int Ls = a.label.length(), Lsp = b.label.length();

    // both products: the combined product state lies in the sector of the
    // reduced concatenation with the balance turned into dimers
    if (!a.entangled() && !b.entangled()) {
        IrreducibleString irr = concat_reduce(a.label, b.label);
        int dimers = (l + lp - irr.length()) / 2;
        if (irr.length() > 0) push_segment(out, make_entangled_or_product(irr, {}, irr.length()));
        out.dimer_count = dimers;
        return out;
    }

    // identical color sets (for products: all colors inside the partner's set)
    bool same_colors = std::includes(ca.begin(), ca.end(), cb.begin(), cb.end()) &&
                       (b.entangled() ? cb == ca : true);
    if (!a.entangled()) {
        // a product against an entangled b of equal or shorter length
        same_colors = cb == ca || std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
    }
    if (same_colors) {
        IrreducibleString irr = concat_reduce(a.label, b.label);
        std::vector<int> colors = a.entangled() ? a.colors : b.colors;
        if (irr.length() < l - lp) {
            push_segment(out, make_entangled_or_product(irr, colors, l - lp));
            out.dimer_count = lp;
        } else {
            if (irr.length() > 0) push_segment(out, make_entangled_or_product(irr, {}, irr.length()));
            out.dimer_count = (l + lp - irr.length()) / 2;
        }
        return out;
    }

    if (!a.entangled())
        throw ConstraintViolation("fusion of a longer product against an entangled segment with "
                                  "partial color overlap is outside the classified cases");
    if (b.label.empty())
        throw ConstraintViolation("fusion with an empty-label segment sharing one color is outside "
                                  "the classified cases");
    if (!b.entangled() && cb.size() > 2)
        throw ConstraintViolation("fusion against a product with three or more colors is outside "
                                  "the classified cases");

    const int leading = b.label.colors.front();
    if (ca.count(leading)) {
        // partial fusion: the leading color participates in the reduction
        IrreducibleString sa1 = a.label;
        if (!sa1.colors.empty() && sa1.colors.back() == leading)
            sa1.colors.pop_back();
        else
            sa1.colors.push_back(leading);
        if (sa1.length() < l - lp + Lsp) {
            push_segment(out, make_entangled_or_product(sa1, a.colors, l - lp + Lsp - 1));
            IrreducibleString tail;
            tail.colors.assign(b.label.colors.begin() + 1, b.label.colors.end());
            if (tail.length() > 0) push_segment(out, make_entangled_or_product(tail, {}, tail.length()));
            out.dimer_count = lp - Lsp + 1;
        } else {
            if (a.label.empty())
                throw ConstraintViolation("partial fusion dominated by an empty-label segment is "
                                          "outside the classified cases");
            IrreducibleString head;
            head.colors.assign(a.label.colors.begin(), a.label.colors.end() - 1);
            if (head.length() > 0) push_segment(out, make_entangled_or_product(head, {}, head.length()));
            IrreducibleString als_sp = b.label;
            if (!als_sp.colors.empty() && als_sp.colors.front() == a.label.colors.back()) {
                als_sp.colors.erase(als_sp.colors.begin());
            } else {
                als_sp.colors.insert(als_sp.colors.begin(), a.label.colors.back());
            }
            push_segment(out, make_entangled_or_product(als_sp, b.colors, lp - l + Ls - 1));
            out.dimer_count = l - Ls + 1;
        }
        return out;
    }

    // fusion blocking: the leading color of b lies outside a's colors
    if (Ls - Lsp < l - lp) {
        push_segment(out, make_entangled_or_product(a.label, a.colors, l - lp + Lsp));
        if (Lsp > 0) push_segment(out, make_entangled_or_product(b.label, {}, Lsp));
        out.dimer_count = lp - Lsp;
    } else {
        if (Ls > 0) push_segment(out, make_entangled_or_product(a.label, {}, Ls));
        push_segment(out, make_entangled_or_product(b.label, b.colors, lp - l + Ls));
        out.dimer_count = l - Ls;
    }
    return out;
}

bool fuse_verify(const FrozenSegment& a, const FrozenSegment& b, int N,
                 const ClosureBudget& budget) {
    SectorLabel predicted = fuse(a, b);
    const int total = a.length + b.length;
    ChainGeometry geom(total, N);
    ExactVector v = tensor(segment_vector(a, N), segment_vector(b, N));

    // dynamical closure under the individual projector terms
    ExactOperator window(static_cast<std::int64_t>(N) * N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) window.add(x * N + x, y * N + y, ExactScalar(1));
    std::vector<ExactOperator> generators;
    for (int bond = 0; bond + 1 < total; ++bond)
        generators.push_back(embed_window_operator(window, bond, 1, geom));

    // predicted representative: segments in order, dimers at either end
    ExactVector rep(1);
    rep.set(0, ExactScalar(1));
    for (const auto& seg : predicted.segments) rep = tensor(rep, segment_vector(seg, N));
    ExactVector dim_vec = dimer_vector(N);
    ExactVector rep_right = rep;
    for (int i = 0; i < predicted.dimer_count; ++i) rep_right = tensor(rep_right, dim_vec);
    ExactVector rep_left(1);
    rep_left.set(0, ExactScalar(1));
    for (int i = 0; i < predicted.dimer_count; ++i) rep_left = tensor(rep_left, dim_vec);
    for (const auto& seg : predicted.segments) rep_left = tensor(rep_left, segment_vector(seg, N));

    if (rep_right.dim != v.dim) throw Error("fusion outcome does not preserve the site count");

    // grow the closure with early exit once the representative is contained
    ExactEchelon ech(v.dim);
    std::deque<ExactVector> work{v};
    int steps = 0;
    while (!work.empty()) {
        ExactVector w = std::move(work.front());
        work.pop_front();
        if (++steps > budget.max_steps) throw BudgetExceeded("fusion closure step budget exceeded");
        if (!ech.insert(w)) continue;
        if (ech.rank() > budget.max_dim) throw BudgetExceeded("fusion closure dimension budget");
        if (ech.contains(rep_right) || ech.contains(rep_left)) return true;
        for (const auto& g : generators) work.push_back(g.apply(w));
    }
    return ech.contains(rep_right) || ech.contains(rep_left);
}

ExactVector ghz_frozen(int L, int parity) {
    if (L % 2 == 0) throw Error("GHZ frozen states need odd L");
    if (parity != 1 && parity != -1) throw Error("parity must be +1 or -1");
    ChainGeometry geom(L, 2, Boundary::periodic);
    ExactVector v(geom.hilbert_dim());
    for (std::int64_t s = 0; s < geom.hilbert_dim(); ++s) {
        int w = 0;
        for (std::int64_t t = s; t; t >>= 1) w += static_cast<int>(t & 1);
        if (parity == 1 && w % 2 == 0) v.set(s, quarter_phase(w));
        if (parity == -1 && w % 2 == 1) v.set(s, quarter_phase(w));
    }
    return v;
}

}  // namespace fragmenta
