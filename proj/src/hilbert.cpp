#include "fragmenta/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace fragmenta {

ChainGeometry::ChainGeometry(int L_, int N_, Boundary b) : L(L_), N(N_), boundary(b) {
    if (N < 2) throw Error("local dimension must be >= 2");
    if (L < 1) throw Error("chain length must be >= 1");
    // N^L must stay representable in the 63-bit index space
    long double size = 1;
    for (int i = 0; i < L; ++i) size *= N;
    if (size > 4.0e18L) throw Error("N^L exceeds the representable index width");
}

std::int64_t ChainGeometry::hilbert_dim() const {
    std::int64_t d = 1;
    for (int i = 0; i < L; ++i) d *= N;
    return d;
}

int ChainGeometry::num_bonds(int range) const {
    if (boundary == Boundary::open) {
        if (range + 1 > L) throw Error("local term range exceeds open chain");
        return L - range;
    }
    return L;
}

ProductState ProductState::from_string(const std::string& s) {
    ProductState p;
    for (char c : s) {
        if (c < '0' || c > '9') throw Error("product state digits must be 0-9");
        p.digits.push_back(c - '0');
    }
    return p;
}

std::string ProductState::str() const {
    std::string s;
    for (int d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::int64_t encode(const ProductState& s, const ChainGeometry& geom) {
    if (s.size() != geom.L) throw Error("digit count does not match chain length");
    std::int64_t idx = 0;
    for (int d : s.digits) {
        if (d < 0 || d >= geom.N) throw Error("digit out of range for local dimension");
        idx = idx * geom.N + d;
    }
    return idx;
}

ProductState decode(std::int64_t index, const ChainGeometry& geom) {
    ProductState s;
    s.digits.assign(geom.L, 0);
    for (int i = geom.L - 1; i >= 0; --i) {
        s.digits[i] = static_cast<int>(index % geom.N);
        index /= geom.N;
    }
    return s;
}

int digit_at(std::int64_t index, int site, int L, int N) {
    for (int i = L - 1; i > site; --i) index /= N;
    return static_cast<int>(index % N);
}

std::int64_t with_digit(std::int64_t index, int site, int value, int L, int N) {
    std::int64_t place = 1;
    for (int i = L - 1; i > site; --i) place *= N;
    int old = digit_at(index, site, L, N);
    return index + (static_cast<std::int64_t>(value) - old) * place;
}

std::int64_t LocalRule::window_dim() const {
    std::int64_t d = 1;
    for (int i = 0; i <= range; ++i) d *= num_colors;
    return d;
}

void LocalRule::add(std::int64_t out, std::int64_t in, const ExactScalar& amp) {
    if (in < 0 || in >= window_dim() || out < 0 || out >= window_dim())
        throw Error("local rule configuration out of range");
    entries.push_back({in, out, amp});
}

LocalRule LocalRule::hermitian_closed() const {
    LocalRule r = *this;
    ExactOperator w = window_operator();
    for (std::int64_t i = 0; i < w.dim; ++i) {
        for (const auto& [j, v] : w.rows[i]) {
            ExactScalar tr = w.get(j, i);
            if (tr != v.conj()) {
                // add the missing conjugate part
                r.entries.push_back({i, j, v.conj() - tr});
            }
        }
    }
    return r;
}

bool LocalRule::is_hermitian() const { return window_operator().is_hermitian(); }

ExactOperator LocalRule::window_operator() const {
    ExactOperator w(window_dim());
    for (const auto& e : entries) w.add(e.out, e.in, e.amp);
    return w;
}

ExactOperator assemble_hamiltonian(const LocalRule& rule, const ChainGeometry& geom,
                                   const std::vector<Rational>& couplings) {
    if (rule.num_colors != geom.N) throw Error("rule and geometry disagree on N");
    const int k = rule.range;
    const int bonds = geom.num_bonds(k);
    std::vector<Rational> J = couplings;
    if (J.empty()) J.assign(bonds, Rational(1));
    if (static_cast<int>(J.size()) != bonds) throw Error("coupling count does not match bond count");

    ExactOperator H(geom.hilbert_dim());
    for (const auto& term : assemble_bond_terms(rule, geom, J)) {
        for (std::int64_t i = 0; i < H.dim; ++i)
            for (const auto& [j, v] : term.rows[i]) H.add(i, j, v);
    }
    return H;
}

std::vector<ExactOperator> assemble_bond_terms(const LocalRule& rule, const ChainGeometry& geom,
                                               const std::vector<Rational>& couplings) {
    if (rule.num_colors != geom.N) throw Error("rule and geometry disagree on N");
    const int k = rule.range;
    const int bonds = geom.num_bonds(k);
    std::vector<Rational> J = couplings;
    if (J.empty()) J.assign(bonds, Rational(1));
    if (static_cast<int>(J.size()) != bonds) throw Error("coupling count does not match bond count");
    ExactOperator w = rule.window_operator();
    std::vector<ExactOperator> terms;
    terms.reserve(bonds);
    for (int x = 0; x < bonds; ++x)
        terms.push_back(embed_window_operator(w, x, k, geom).scaled(ExactScalar(J[x])));
    return terms;
}

namespace {

// window site positions for a placement at offset x
std::vector<int> window_sites(int x, int k, const ChainGeometry& geom) {
    std::vector<int> sites(k + 1);
    for (int i = 0; i <= k; ++i) sites[i] = (x + i) % geom.L;
    return sites;
}

}  // namespace

std::int64_t splice_window(std::int64_t window_config, std::int64_t rest_config, int x, int k,
                           const ChainGeometry& geom) {
    auto sites = window_sites(x, k, geom);
    std::int64_t idx = rest_config;
    for (int i = 0; i <= k; ++i) {
        int d = digit_at(window_config, i, k + 1, geom.N);
        idx = with_digit(idx, sites[i], d, geom.L, geom.N);
    }
    return idx;
}

ExactOperator embed_window_operator(const ExactOperator& window, int x, int k,
                                    const ChainGeometry& geom) {
    auto sites = window_sites(x, k, geom);
    if (geom.boundary == Boundary::open && x + k >= geom.L)
        throw Error("window placement exceeds open chain");
    std::int64_t dim = geom.hilbert_dim();
    // column-major view of the window term
    std::vector<std::vector<std::pair<std::int64_t, ExactScalar>>> cols(window.dim);
    for (std::int64_t out = 0; out < window.dim; ++out)
        for (const auto& [in, v] : window.rows[out]) cols[in].emplace_back(out, v);
    ExactOperator H(dim);
    for (std::int64_t s = 0; s < dim; ++s) {
        std::int64_t win = 0;
        for (int i = 0; i <= k; ++i) win = win * geom.N + digit_at(s, sites[i], geom.L, geom.N);
        for (const auto& [out, v] : cols[win]) {
            std::int64_t t = s;
            for (int i = 0; i <= k; ++i)
                t = with_digit(t, sites[i], digit_at(out, i, k + 1, geom.N), geom.L, geom.N);
            H.add(t, s, v);
        }
    }
    return H;
}

ExactVector basis_vector(const ChainGeometry& geom, std::int64_t index) {
    ExactVector v(geom.hilbert_dim());
    v.set(index, ExactScalar(1));
    return v;
}

ExactVector basis_vector(const ChainGeometry& geom, const std::string& digits) {
    return basis_vector(geom, encode(ProductState::from_string(digits), geom));
}

ExactVector state_sum(const ChainGeometry& geom,
                      const std::vector<std::pair<ExactScalar, std::string>>& terms) {
    ExactVector v(geom.hilbert_dim());
    for (const auto& [amp, s] : terms) v.add(encode(ProductState::from_string(s), geom), amp);
    return v;
}

}  // namespace fragmenta
