#include "fragmenta/krylov.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace fragmenta {

std::string IrreducibleString::str() const {
    std::string s;
    for (int c : colors) s.push_back(static_cast<char>('0' + c));
    return s;
}

IrreducibleString pair_reduce(const std::vector<int>& digits) {
    IrreducibleString r;
    for (int d : digits) {
        if (!r.colors.empty() && r.colors.back() == d)
            r.colors.pop_back();
        else
            r.colors.push_back(d);
    }
    return r;
}

IrreducibleString pair_reduce(const ProductState& s) { return pair_reduce(s.digits); }

IrreducibleString concat_reduce(const IrreducibleString& a, const IrreducibleString& b) {
    std::vector<int> all = a.colors;
    all.insert(all.end(), b.colors.begin(), b.colors.end());
    return pair_reduce(all);
}

std::vector<CfSector> cf_sectors(const ExactOperator& H, const ChainGeometry& geom,
                                 std::int64_t budget) {
    if (H.dim != geom.hilbert_dim()) throw DimensionMismatch("operator does not match geometry");
    if (H.dim > budget) throw BudgetExceeded("state space exceeds the census budget");
    std::vector<char> visited(H.dim, 0);
    std::vector<CfSector> sectors;
    for (std::int64_t root = 0; root < H.dim; ++root) {
        if (visited[root]) continue;
        CfSector sec;
        std::deque<std::int64_t> q{root};
        visited[root] = 1;
        while (!q.empty()) {
            std::int64_t u = q.front();
            q.pop_front();
            sec.members.push_back(u);
            for (const auto& [v, amp] : H.rows[u]) {
                if (v == u || amp.is_zero() || visited[v]) continue;
                visited[v] = 1;
                q.push_back(v);
            }
        }
        std::sort(sec.members.begin(), sec.members.end());
        sec.representative = sec.members.front();
        sectors.push_back(std::move(sec));
    }
    return sectors;
}

std::string tjz_spin_pattern(const ProductState& s) {
    std::string pattern;
    for (int d : s.digits) {
        if (d == 1) pattern.push_back('u');
        if (d == 2) pattern.push_back('d');
    }
    return pattern;
}

DipoleLabel dipole_label(const ProductState& s) {
    DipoleLabel label;
    auto spin = [](int d) { return d - 1; };  // digits 0/1/2 = -/0/+
    std::vector<int> defect_positions;
    int prev_occupied_spin = 0;
    bool have_prev = false;
    for (int i = 0; i < s.size(); ++i) {
        int sp = spin(s.digits[i]);
        label.charge += sp;
        if (sp == 0) continue;
        if (have_prev && sp == prev_occupied_spin) {
            label.defect_spins.push_back(sp);
            defect_positions.push_back(i);
        }
        prev_occupied_spin = sp;
        have_prev = true;
    }
    // dipole moment per inter-defect interval; each interval carries its
    // left defect (the defect transports its region when it hops), the
    // chain ends close the outer intervals; positions indexed from 1
    std::vector<int> starts{0};
    for (int p : defect_positions) starts.push_back(p);
    starts.push_back(s.size());
    for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
        long p = 0;
        for (int i = starts[k]; i < starts[k + 1]; ++i) p += static_cast<long>(i + 1) * spin(s.digits[i]);
        label.interval_dipoles.push_back(p);
    }
    return label;
}

std::string DipoleLabel::str() const {
    std::ostringstream os;
    os << "Q=" << charge << ";defects=";
    for (int d : defect_spins) os << (d > 0 ? '+' : '-');
    os << ";P=";
    for (std::size_t i = 0; i < interval_dipoles.size(); ++i)
        os << (i ? "," : "") << interval_dipoles[i];
    return os.str();
}

KrylovSubspace krylov_closure(const ExactOperator& H, const ExactVector& seed,
                              const ClosureBudget& budget) {
    KrylovSubspace sub;
    if (seed.is_zero()) return sub;
    ExactEchelon ech(H.dim);
    std::deque<ExactVector> work{seed};
    int steps = 0;
    while (!work.empty()) {
        ExactVector v = std::move(work.front());
        work.pop_front();
        if (++steps > budget.max_steps) throw BudgetExceeded("closure step budget exceeded");
        if (!ech.insert(v)) continue;
        sub.basis.push_back(v);
        if (ech.rank() > budget.max_dim) throw BudgetExceeded("closure dimension budget exceeded");
        work.push_back(H.apply(v));
    }
    sub.dimension = ech.rank();
    return sub;
}

KrylovSubspace module_closure(const std::vector<ExactOperator>& generators, const ExactVector& seed,
                              const ClosureBudget& budget) {
    KrylovSubspace sub;
    if (seed.is_zero()) return sub;
    ExactEchelon ech(seed.dim);
    std::deque<ExactVector> work{seed};
    int steps = 0;
    while (!work.empty()) {
        ExactVector v = std::move(work.front());
        work.pop_front();
        if (++steps > budget.max_steps) throw BudgetExceeded("closure step budget exceeded");
        if (!ech.insert(v)) continue;
        sub.basis.push_back(v);
        if (ech.rank() > budget.max_dim) throw BudgetExceeded("closure dimension budget exceeded");
        for (const auto& g : generators) work.push_back(g.apply(v));
    }
    sub.dimension = ech.rank();
    return sub;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int sector_census(const ExactOperator& H, const std::vector<ExactVector>& basis,
                  const ClosureBudget& budget, const std::vector<ExactOperator>& generators) {
    if (basis.empty()) throw Error("census needs a basis");
    // spanning check: modular certificate first, exact echelon as fallback
    if (modular_rank(basis) < H.dim) {
        if (exact_rank(basis) < H.dim) throw Error("census basis does not span the space");
    }
    std::vector<ExactOperator> gens = generators.empty() ? std::vector<ExactOperator>{H} : generators;

    ExactEchelon frozen_span(H.dim);
    std::vector<KrylovSubspace> closures;
    for (const auto& v : basis) {
        if (H.apply(v).is_zero()) {
            frozen_span.insert(v);
            continue;
        }
        closures.push_back(module_closure(gens, v, budget));
    }

    // echelons for containment tests
    std::vector<ExactEchelon> echelons;
    echelons.reserve(closures.size());
    for (const auto& c : closures) {
        ExactEchelon ech(H.dim);
        for (const auto& r : c.basis) ech.insert(r);
        echelons.push_back(std::move(ech));
    }
    auto contained_in = [&](std::size_t small, std::size_t big) {
        if (closures[small].dimension > closures[big].dimension) return false;
        for (const auto& r : closures[small].basis)
            if (!echelons[big].contains(r)) return false;
        return true;
    };

    // keep one representative per distinct minimal closure; basis elements
    // superposing several sectors produce strictly larger closures
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < closures.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < closures.size() && !drop; ++j) {
            if (i == j) continue;
            bool j_in_i = contained_in(j, i);
            bool i_in_j = contained_in(i, j);
            if (j_in_i && !i_in_j) drop = true;            // i strictly contains j
            if (j_in_i && i_in_j && j < i) drop = true;    // duplicate span, keep the first
        }
        if (!drop) kept.push_back(i);
    }

    // merge any remaining nontrivial overlaps among the minimal closures
    UnionFind uf(static_cast<int>(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a) {
        for (std::size_t b = a + 1; b < kept.size(); ++b) {
            if (uf.find(static_cast<int>(a)) == uf.find(static_cast<int>(b))) continue;
            ExactEchelon ech(H.dim);
            for (const auto& v : closures[kept[a]].basis) ech.insert(v);
            bool disjoint = true;
            for (const auto& v : closures[kept[b]].basis)
                if (!ech.insert(v)) disjoint = false;
            if (!disjoint) uf.unite(static_cast<int>(a), static_cast<int>(b));
        }
    }
    std::vector<int> roots;
    for (std::size_t i = 0; i < kept.size(); ++i) roots.push_back(uf.find(static_cast<int>(i)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return frozen_span.rank() + static_cast<int>(roots.size());
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "sector_id,dim,label,representative\n";
    for (const auto& r : rows)
        os << r.sector_id << "," << r.dim << "," << r.label << "," << r.representative << "\n";
    return os.str();
}

}  // namespace fragmenta
