#include "fragmenta/models.hpp"

#include <algorithm>
#include <map>

namespace fragmenta {

ModelKind model_kind_from_string(const std::string& name) {
    static const std::map<std::string, ModelKind> table = {
        {"PF", ModelKind::PF},           {"TL", ModelKind::TL},
        {"TJZ", ModelKind::TJZ},         {"TJZ_QF", ModelKind::TJZ_QF},
        {"DIPOLE3", ModelKind::DIPOLE3}, {"DIPOLE3_QF", ModelKind::DIPOLE3_QF},
        {"TFIM", ModelKind::TFIM},       {"TFIM_QF", ModelKind::TFIM_QF}};
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown model: " + name);
    return it->second;
}

std::string model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::PF: return "PF";
        case ModelKind::TL: return "TL";
        case ModelKind::TJZ: return "TJZ";
        case ModelKind::TJZ_QF: return "TJZ_QF";
        case ModelKind::DIPOLE3: return "DIPOLE3";
        case ModelKind::DIPOLE3_QF: return "DIPOLE3_QF";
        case ModelKind::TFIM: return "TFIM";
        case ModelKind::TFIM_QF: return "TFIM_QF";
    }
    throw Error("unreachable model kind");
}

ChainGeometry ModelId::geometry() const { return ChainGeometry(L, N, boundary); }

void ModelId::validate() const {
    switch (kind) {
        case ModelKind::TJZ:
        case ModelKind::TJZ_QF:
        case ModelKind::DIPOLE3:
        case ModelKind::DIPOLE3_QF:
            if (N != 3) throw Error(model_kind_name(kind) + " requires N = 3");
            break;
        case ModelKind::TFIM:
        case ModelKind::TFIM_QF:
            if (N > 4) throw Error("generalized Pauli phases are irrational for N > 4");
            break;
        default: break;
    }
    int range = (kind == ModelKind::DIPOLE3 || kind == ModelKind::DIPOLE3_QF) ? 2 : 1;
    ChainGeometry geom = geometry();
    int bonds = geom.num_bonds(range);
    if (!J.empty() && static_cast<int>(J.size()) != bonds)
        throw Error("J count does not match bond count");
    if (kind == ModelKind::TFIM && !h.empty() && static_cast<int>(h.size()) != L)
        throw Error("h count does not match site count");
    if (!g.empty()) {
        if (static_cast<int>(g.size()) != N) throw Error("g must be an NxN matrix");
        for (const auto& row : g)
            if (static_cast<int>(row.size()) != N) throw Error("g must be an NxN matrix");
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (g[a][b] != g[b][a]) throw Error("g must be symmetric for a Hermitian PF model");
    }
}

LocalRule pf_rule(int N, const std::vector<std::vector<Rational>>& g) {
    LocalRule rule;
    rule.num_colors = N;
    rule.range = 1;
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            Rational amp = g.empty() ? Rational(1) : g[a][b];
            if (amp == 0) continue;
            rule.add(a * N + a, b * N + b, ExactScalar(amp));
        }
    }
    return rule;
}

LocalRule tl_rule(int N) { return pf_rule(N); }

LocalRule tjz_rule() {
    LocalRule rule;
    rule.num_colors = 3;
    rule.range = 1;
    for (int sigma : {1, 2}) {
        rule.add(3 * sigma + 0, 0 * 3 + sigma, ExactScalar(1));  // |sigma 0><0 sigma|
        rule.add(0 * 3 + sigma, 3 * sigma + 0, ExactScalar(1));
    }
    return rule;
}

LocalRule dipole3_rule() {
    LocalRule rule;
    rule.num_colors = 3;
    rule.range = 2;
    // S+ (S-)^2 S+ matrix elements carry the factor 4 for spin 1;
    // digits 0/1/2 = -/0/+
    auto cfg = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
    const ExactScalar four(4);
    std::vector<std::pair<std::int64_t, std::int64_t>> moves = {
        {cfg(1, 0, 1), cfg(0, 2, 0)},  // |0-0><-+-|
        {cfg(2, 0, 2), cfg(1, 2, 1)},  // |+-+><0+0|
        {cfg(1, 0, 2), cfg(0, 2, 1)},  // |0-+><-+0|
        {cfg(2, 0, 1), cfg(1, 2, 0)},  // |+-0><0+-|
    };
    for (const auto& [out, in] : moves) {
        rule.add(out, in, four);
        rule.add(in, out, four);
    }
    return rule;
}

LocalRule tfim_xx_rule(int N) {
    LocalRule rule;
    rule.num_colors = N;
    rule.range = 1;
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m)
            rule.add(((n + 1) % N) * N + (m + 1) % N, n * N + m, ExactScalar(-1));
    return rule.hermitian_closed();
}

ExactOperator generalized_x(int N) {
    ExactOperator x(N);
    for (int n = 0; n < N; ++n) x.add((n + 1) % N, n, ExactScalar(1));
    return x;
}

ExactOperator hermitian_z(int N) {
    // Z = diag(omega^n); for N <= 4 the Hermitian combination Z + Z^dag has
    // Gaussian-rational entries (2, 2cos(2 pi n / N), ...)
    ExactOperator z(N);
    switch (N) {
        case 2:
            z.add(0, 0, ExactScalar(1));
            z.add(1, 1, ExactScalar(-1));
            break;
        case 3:
            z.add(0, 0, ExactScalar(2));
            z.add(1, 1, ExactScalar(-1));
            z.add(2, 2, ExactScalar(-1));
            break;
        case 4:
            z.add(0, 0, ExactScalar(2));
            z.add(2, 2, ExactScalar(-2));
            break;
        default: throw Error("hermitian_z is only exact for N <= 4");
    }
    return z;
}

std::vector<ExactVector> qf_projector_states(ModelKind kind, int N) {
    std::vector<ExactVector> states;
    switch (kind) {
        case ModelKind::TJZ_QF: {
            ExactVector up(9), down(9);
            up.set(0 * 3 + 1, ExactScalar(1));   // |0 up>
            up.set(1 * 3 + 0, ExactScalar(-1));  // -|up 0>
            down.set(0 * 3 + 2, ExactScalar(1));
            down.set(2 * 3 + 0, ExactScalar(-1));
            states = {up, down};
            break;
        }
        case ModelKind::DIPOLE3_QF: {
            auto cfg = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
            auto pair_state = [&](std::int64_t w1, std::int64_t w2) {
                ExactVector v(27);
                v.set(w1, ExactScalar(1));
                v.set(w2, ExactScalar(1));
                return v;
            };
            states = {pair_state(cfg(2, 0, 2), cfg(1, 2, 1)),   // |+-+> + |0+0>
                      pair_state(cfg(1, 0, 1), cfg(0, 2, 0)),   // |-+-> + |0-0>
                      pair_state(cfg(2, 0, 1), cfg(1, 2, 0)),   // |+-0> + |0+->
                      pair_state(cfg(1, 0, 2), cfg(0, 2, 1))};  // |-+0> + |0-+>
            break;
        }
        case ModelKind::TFIM_QF: {
            for (int a = 0; a < N; ++a) {
                ExactVector psi(static_cast<std::int64_t>(N) * N);
                for (int n = 0; n < N; ++n) psi.set(n * N + (n + a) % N, ExactScalar(1));
                states.push_back(std::move(psi));
            }
            break;
        }
        default: throw Error("not a QF projector model: " + model_kind_name(kind));
    }
    return states;
}

namespace {

ExactOperator assemble_projector_model(const std::vector<ExactVector>& psis, int range,
                                       const ChainGeometry& geom, const std::vector<Rational>& J) {
    ExactOperator local(psis.front().dim);
    for (const auto& psi : psis) local = local + outer_projector(psi);
    int bonds = geom.num_bonds(range);
    std::vector<Rational> couplings = J;
    if (couplings.empty()) couplings.assign(bonds, Rational(1));
    if (static_cast<int>(couplings.size()) != bonds) throw Error("J count does not match bond count");
    ExactOperator H(geom.hilbert_dim());
    for (int x = 0; x < bonds; ++x) {
        ExactOperator term = embed_window_operator(local, x, range, geom);
        for (std::int64_t i = 0; i < H.dim; ++i)
            for (const auto& [j, v] : term.rows[i]) H.add(i, j, v * ExactScalar(couplings[x]));
    }
    return H;
}

ExactOperator build_tfim(const ModelId& id) {
    ChainGeometry geom = id.geometry();
    int bonds = geom.num_bonds(1);
    std::vector<Rational> J = id.J.empty() ? std::vector<Rational>(bonds, Rational(1)) : id.J;
    std::vector<Rational> h = id.h.empty() ? std::vector<Rational>(id.L, Rational(1)) : id.h;

    ExactOperator x = generalized_x(id.N);
    ExactOperator xx = ExactOperator(static_cast<std::int64_t>(id.N) * id.N);
    for (int n = 0; n < id.N; ++n)
        for (int m = 0; m < id.N; ++m)
            xx.add(((n + 1) % id.N) * id.N + (m + 1) % id.N, n * id.N + m, ExactScalar(1));
    if (!xx.is_hermitian()) xx = xx + xx.dagger();

    ExactOperator H(geom.hilbert_dim());
    for (int b = 0; b < bonds; ++b) {
        ExactOperator term = embed_window_operator(xx, b, 1, geom);
        for (std::int64_t i = 0; i < H.dim; ++i)
            for (const auto& [j, v] : term.rows[i]) H.add(i, j, v * ExactScalar(-J[b]));
    }
    ExactOperator z = hermitian_z(id.N);
    for (int site = 0; site < id.L; ++site) {
        for (std::int64_t s = 0; s < H.dim; ++s) {
            int d = digit_at(s, site, id.L, id.N);
            ExactScalar zv = z.get(d, d);
            if (!zv.is_zero()) H.add(s, s, zv * ExactScalar(-h[site]));
        }
    }
    return H;
}

}  // namespace

ExactOperator build_model(const ModelId& id) {
    id.validate();
    ChainGeometry geom = id.geometry();
    switch (id.kind) {
        case ModelKind::PF: return assemble_hamiltonian(pf_rule(id.N, id.g), geom, id.J);
        case ModelKind::TL: return assemble_hamiltonian(tl_rule(id.N), geom, id.J);
        case ModelKind::TJZ: return assemble_hamiltonian(tjz_rule(), geom, id.J);
        case ModelKind::DIPOLE3: return assemble_hamiltonian(dipole3_rule(), geom, id.J);
        case ModelKind::TFIM: return build_tfim(id);
        case ModelKind::TJZ_QF:
            return assemble_projector_model(qf_projector_states(ModelKind::TJZ_QF, 3), 1, geom, id.J);
        case ModelKind::DIPOLE3_QF:
            return assemble_projector_model(qf_projector_states(ModelKind::DIPOLE3_QF, 3), 2, geom,
                                            id.J);
        case ModelKind::TFIM_QF:
            return assemble_projector_model(qf_projector_states(ModelKind::TFIM_QF, id.N), 1, geom,
                                            id.J);
    }
    throw Error("unreachable model kind");
}

std::vector<std::int64_t> controlled_subtraction_permutation(int N, int L) {
    if (N < 2 || L < 2) throw Error("controlled subtraction needs N >= 2, L >= 2");
    ChainGeometry geom(L, N);
    std::vector<std::int64_t> image(geom.hilbert_dim());
    for (std::int64_t s = 0; s < geom.hilbert_dim(); ++s) {
        ProductState p = decode(s, geom);
        for (int t = 1; t < L; ++t) p.digits[t] = ((p.digits[t] - p.digits[t - 1]) % N + N) % N;
        image[s] = encode(p, geom);
    }
    return image;
}

ExactOperator controlled_subtraction_circuit(int N, int L) {
    auto image = controlled_subtraction_permutation(N, L);
    ExactOperator c(static_cast<std::int64_t>(image.size()));
    for (std::int64_t s = 0; s < c.dim; ++s) c.add(image[s], s, ExactScalar(1));
    return c;
}

ExactOperator plus_projector_sum(int N, int L, const std::vector<Rational>& J) {
    ChainGeometry geom(L, N);
    std::vector<Rational> couplings = J;
    if (couplings.empty()) couplings.assign(L - 1, Rational(1));
    if (static_cast<int>(couplings.size()) != L - 1) throw Error("J count does not match site count");
    ExactOperator plus(N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) plus.add(a, b, ExactScalar(1));
    ExactOperator H(geom.hilbert_dim());
    for (int site = 0; site < L - 1; ++site) {
        // |+><+| on `site`, identity elsewhere; <+|d> = 1 for every digit
        for (std::int64_t s = 0; s < H.dim; ++s) {
            for (int a = 0; a < N; ++a) {
                std::int64_t t = with_digit(s, site, a, L, N);
                H.add(t, s, ExactScalar(couplings[site]));
            }
        }
    }
    return H;
}

ExactOperator tjz_iom(const std::vector<int>& alphas, const std::vector<int>& betas,
                      const ChainGeometry& geom) {
    if (geom.N != 3) throw Error("tJz IOMs live on the N = 3 chain");
    if (alphas.size() != betas.size()) throw Error("alpha/beta length mismatch");
    const int k = static_cast<int>(alphas.size());
    if (k > geom.L) throw Error("IOM order exceeds chain length");
    for (int a : alphas)
        if (a != 1 && a != 2) throw Error("alpha labels must be spin values (1 = up, 2 = down)");
    for (int b : betas)
        if (b != 1 && b != 2) throw Error("beta labels must be spin values (1 = up, 2 = down)");

    ExactOperator M(geom.hilbert_dim());
    // iterate ordered site tuples j_1 < ... < j_k
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        for (std::int64_t s = 0; s < M.dim; ++s) {
            bool match = true;
            for (int l = 0; l < k && match; ++l)
                match = digit_at(s, idx[l], geom.L, geom.N) == alphas[l];
            if (!match) continue;
            std::int64_t t = s;
            for (int l = 0; l < k; ++l) t = with_digit(t, idx[l], betas[l], geom.L, geom.N);
            M.add(t, s, ExactScalar(1));
        }
        // next combination
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == geom.L - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return M;
}

}  // namespace fragmenta
