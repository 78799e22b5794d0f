#include "fragmenta/exact.hpp"

#include <algorithm>
#include <sstream>

namespace fragmenta {

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.is_zero()) throw Error("division by zero scalar");
    Rational n2 = o.norm2();
    ExactScalar num = *this * o.conj();
    return ExactScalar(num.re / n2, num.im / n2);
}

ExactScalar quarter_phase(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return ExactScalar(1);
        case 1: return ExactScalar::unit_i();
        case 2: return ExactScalar(-1);
        default: return -ExactScalar::unit_i();
    }
}

std::string ExactScalar::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re.get_str();
    } else if (re == 0) {
        os << im.get_str() << "i";
    } else {
        os << re.get_str() << (im > 0 ? "+" : "") << im.get_str() << "i";
    }
    return os.str();
}

void ExactVector::set(std::int64_t i, const ExactScalar& v) {
    if (i < 0 || i >= dim) throw DimensionMismatch("vector index out of range");
    if (v.is_zero())
        entries.erase(i);
    else
        entries[i] = v;
}

void ExactVector::add(std::int64_t i, const ExactScalar& v) {
    if (i < 0 || i >= dim) throw DimensionMismatch("vector index out of range");
    auto it = entries.find(i);
    if (it == entries.end()) {
        if (!v.is_zero()) entries.emplace(i, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries.erase(it);
}

ExactScalar ExactVector::get(std::int64_t i) const {
    auto it = entries.find(i);
    return it == entries.end() ? ExactScalar() : it->second;
}

ExactVector ExactVector::operator+(const ExactVector& o) const {
    if (dim != o.dim) throw DimensionMismatch("vector dims differ");
    ExactVector r = *this;
    for (const auto& [i, v] : o.entries) r.add(i, v);
    return r;
}

ExactVector ExactVector::operator-(const ExactVector& o) const {
    if (dim != o.dim) throw DimensionMismatch("vector dims differ");
    ExactVector r = *this;
    for (const auto& [i, v] : o.entries) r.add(i, -v);
    return r;
}

ExactVector ExactVector::scaled(const ExactScalar& c) const {
    ExactVector r(dim);
    if (c.is_zero()) return r;
    for (const auto& [i, v] : entries) r.entries.emplace(i, v * c);
    return r;
}

ExactScalar ExactVector::inner(const ExactVector& o) const {
    if (dim != o.dim) throw DimensionMismatch("vector dims differ");
    ExactScalar acc;
    const auto& small = entries.size() <= o.entries.size() ? entries : o.entries;
    const bool left_small = entries.size() <= o.entries.size();
    for (const auto& [i, v] : small) {
        const auto& other = left_small ? o.entries : entries;
        auto it = other.find(i);
        if (it == other.end()) continue;
        acc += left_small ? v.conj() * it->second : it->second.conj() * v;
    }
    return acc;
}

Rational ExactVector::norm2() const {
    Rational acc(0);
    for (const auto& [i, v] : entries) acc += v.norm2();
    return acc;
}

std::string ExactVector::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : entries) {
        os << (first ? "" : " + ") << "(" << v.str() << ")|" << i << ">";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ExactVector tensor(const ExactVector& a, const ExactVector& b) {
    ExactVector r(a.dim * b.dim);
    for (const auto& [i, va] : a.entries)
        for (const auto& [j, vb] : b.entries) r.entries.emplace(i * b.dim + j, va * vb);
    return r;
}

ExactOperator ExactOperator::identity(std::int64_t d) {
    ExactOperator op(d);
    for (std::int64_t i = 0; i < d; ++i) op.rows[i].emplace(i, ExactScalar(1));
    return op;
}

void ExactOperator::add(std::int64_t r, std::int64_t c, const ExactScalar& v) {
    if (r < 0 || r >= dim || c < 0 || c >= dim) throw DimensionMismatch("operator index out of range");
    auto& row = rows[r];
    auto it = row.find(c);
    if (it == row.end()) {
        if (!v.is_zero()) row.emplace(c, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
}

ExactScalar ExactOperator::get(std::int64_t r, std::int64_t c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? ExactScalar() : it->second;
}

std::size_t ExactOperator::nnz() const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.size();
    return n;
}

ExactVector ExactOperator::apply(const ExactVector& v) const {
    if (v.dim != dim) throw DimensionMismatch("operator/vector dims differ");
    ExactVector r(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        const auto& row = rows[i];
        if (row.empty()) continue;
        ExactScalar acc;
        if (row.size() < v.entries.size()) {
            for (const auto& [j, a] : row) {
                auto it = v.entries.find(j);
                if (it != v.entries.end()) acc += a * it->second;
            }
        } else {
            for (const auto& [j, x] : v.entries) {
                auto it = row.find(j);
                if (it != row.end()) acc += it->second * x;
            }
        }
        if (!acc.is_zero()) r.entries.emplace(i, acc);
    }
    return r;
}

ExactOperator ExactOperator::dagger() const {
    ExactOperator r(dim);
    for (std::int64_t i = 0; i < dim; ++i)
        for (const auto& [j, v] : rows[i]) r.add(j, i, v.conj());
    return r;
}

ExactOperator ExactOperator::operator+(const ExactOperator& o) const {
    if (dim != o.dim) throw DimensionMismatch("operator dims differ");
    ExactOperator r = *this;
    for (std::int64_t i = 0; i < dim; ++i)
        for (const auto& [j, v] : o.rows[i]) r.add(i, j, v);
    return r;
}

ExactOperator ExactOperator::operator-(const ExactOperator& o) const {
    if (dim != o.dim) throw DimensionMismatch("operator dims differ");
    ExactOperator r = *this;
    for (std::int64_t i = 0; i < dim; ++i)
        for (const auto& [j, v] : o.rows[i]) r.add(i, j, -v);
    return r;
}

ExactOperator ExactOperator::operator*(const ExactOperator& o) const {
    if (dim != o.dim) throw DimensionMismatch("operator dims differ");
    ExactOperator r(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        for (const auto& [k, a] : rows[i]) {
            if (a.is_zero()) continue;
            for (const auto& [j, b] : o.rows[k]) r.add(i, j, a * b);
        }
    }
    return r;
}

ExactOperator ExactOperator::scaled(const ExactScalar& c) const {
    ExactOperator r(dim);
    if (c.is_zero()) return r;
    for (std::int64_t i = 0; i < dim; ++i)
        for (const auto& [j, v] : rows[i]) r.rows[i].emplace(j, v * c);
    return r;
}

bool ExactOperator::is_hermitian() const {
    for (std::int64_t i = 0; i < dim; ++i)
        for (const auto& [j, v] : rows[i])
            if (get(j, i) != v.conj()) return false;
    return true;
}

bool ExactOperator::is_zero() const {
    for (const auto& row : rows)
        if (!row.empty()) return false;
    return true;
}

ExactOperator ExactOperator::conjugate_by_permutation(const std::vector<std::int64_t>& image) const {
    if (static_cast<std::int64_t>(image.size()) != dim) throw DimensionMismatch("permutation size");
    ExactOperator r(dim);
    for (std::int64_t i = 0; i < dim; ++i)
        for (const auto& [j, v] : rows[i]) r.add(image[i], image[j], v);
    return r;
}

bool operator_equal(const ExactOperator& a, const ExactOperator& b) {
    if (a.dim != b.dim) throw DimensionMismatch("operator dims differ");
    for (std::int64_t i = 0; i < a.dim; ++i)
        if (a.rows[i] != b.rows[i]) return false;
    return true;
}

ExactOperator commutator(const ExactOperator& a, const ExactOperator& b) { return a * b - b * a; }

ExactOperator outer_projector(const ExactVector& v) {
    ExactOperator r(v.dim);
    for (const auto& [i, vi] : v.entries)
        for (const auto& [j, vj] : v.entries) r.rows[i].emplace(j, vi * vj.conj());
    return r;
}

// ---------------------------------------------------------------------------
// echelon / rank

namespace {

// Gaussian-integer helpers for fraction-free row reduction.
using GInt = std::pair<BigInt, BigInt>;

inline bool gzero(const GInt& a) { return a.first == 0 && a.second == 0; }
inline GInt gmul(const GInt& a, const GInt& b) {
    return {a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
}
inline GInt gsub(const GInt& a, const GInt& b) { return {a.first - b.first, a.second - b.second}; }

}  // namespace

ExactEchelon::GaussRow ExactEchelon::reduce(const ExactVector& v) const {
    if (v.dim != dim_) throw DimensionMismatch("echelon/vector dims differ");
    GaussRow r;
    if (v.entries.empty()) return r;
    // clear denominators
    BigInt lcm(1);
    for (const auto& [i, s] : v.entries) {
        lcm = ::lcm(lcm, s.re.get_den());
        lcm = ::lcm(lcm, s.im.get_den());
    }
    for (const auto& [i, s] : v.entries) {
        Rational re = s.re * lcm, im = s.im * lcm;
        r.e[i] = {re.get_num(), im.get_num()};
    }
    // eliminate against existing pivots, fraction-free
    for (auto it = r.e.begin(); it != r.e.end();) {
        auto piv = rows_.find(it->first);
        if (piv == rows_.end()) break;  // leading entry is a fresh pivot
        const GaussRow& p = piv->second;
        GInt a = p.e.at(it->first);  // pivot value
        GInt b = it->second;         // row value at pivot column
        // row <- a*row - b*pivot_row
        GaussRow nr;
        auto ri = r.e.begin();
        auto pi = p.e.begin();
        while (ri != r.e.end() || pi != p.e.end()) {
            if (pi == p.e.end() || (ri != r.e.end() && ri->first < pi->first)) {
                GInt nv = gmul(a, ri->second);
                if (!gzero(nv)) nr.e.emplace_hint(nr.e.end(), ri->first, nv);
                ++ri;
            } else if (ri == r.e.end() || pi->first < ri->first) {
                GInt nv = gsub(GInt{0, 0}, gmul(b, pi->second));
                if (!gzero(nv)) nr.e.emplace_hint(nr.e.end(), pi->first, nv);
                ++pi;
            } else {
                GInt nv = gsub(gmul(a, ri->second), gmul(b, pi->second));
                if (!gzero(nv)) nr.e.emplace_hint(nr.e.end(), ri->first, nv);
                ++ri;
                ++pi;
            }
        }
        r = std::move(nr);
        if (r.e.empty()) return r;
        // keep growth in check: divide by integer content
        BigInt g(0);
        for (const auto& [col, val] : r.e) {
            g = gcd(g, val.first);
            g = gcd(g, val.second);
        }
        if (g > 1) {
            for (auto& [col, val] : r.e) {
                val.first /= g;
                val.second /= g;
            }
        }
        it = r.e.begin();
    }
    return r;
}

bool ExactEchelon::insert(const ExactVector& v) {
    GaussRow r = reduce(v);
    if (r.e.empty()) return false;
    std::int64_t pivot = r.e.begin()->first;
    rows_.emplace(pivot, std::move(r));
    return true;
}

bool ExactEchelon::contains(const ExactVector& v) const { return reduce(v).e.empty(); }

int exact_rank(const std::vector<ExactVector>& rows) {
    if (rows.empty()) return 0;
    ExactEchelon ech(rows.front().dim);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

int exact_rank(const ExactOperator& op) {
    ExactEchelon ech(op.dim);
    for (std::int64_t i = 0; i < op.dim; ++i) {
        if (op.rows[i].empty()) continue;
        ExactVector v(op.dim);
        v.entries = op.rows[i];
        ech.insert(v);
    }
    return ech.rank();
}

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1, = 3 mod 4

inline std::uint64_t addm(std::uint64_t a, std::uint64_t b) { return (a + b) % kPrime; }
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }
inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }

std::uint64_t powm(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulm(r, a);
        a = mulm(a, a);
        e >>= 1;
    }
    return r;
}

struct GMod {
    std::uint64_t re = 0, im = 0;
    bool zero() const { return re == 0 && im == 0; }
};

GMod gmodmul(const GMod& a, const GMod& b) {
    return {subm(mulm(a.re, b.re), mulm(a.im, b.im)), addm(mulm(a.re, b.im), mulm(a.im, b.re))};
}
GMod gmodsub(const GMod& a, const GMod& b) { return {subm(a.re, b.re), subm(a.im, b.im)}; }
GMod gmodinv(const GMod& a) {
    // (re - im*i) / (re^2 + im^2); the norm is invertible since p = 3 mod 4
    std::uint64_t n = addm(mulm(a.re, a.re), mulm(a.im, a.im));
    std::uint64_t ninv = powm(n, kPrime - 2);
    return {mulm(a.re, ninv), mulm(subm(0, a.im), ninv)};
}

std::uint64_t rational_mod(const Rational& q) {
    BigInt num = q.get_num() % BigInt(kPrime);
    if (num < 0) num += BigInt(kPrime);
    BigInt den = q.get_den() % BigInt(kPrime);
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    if (d == 0) throw Error("denominator divisible by modulus");
    return mulm(n, powm(d, kPrime - 2));
}

}  // namespace

int modular_rank(const std::vector<ExactVector>& rows) {
    if (rows.empty()) return 0;
    std::map<std::int64_t, std::map<std::int64_t, GMod>> ech;  // pivot -> row
    int rank = 0;
    for (const auto& vr : rows) {
        std::map<std::int64_t, GMod> r;
        for (const auto& [i, s] : vr.entries) {
            GMod g{rational_mod(s.re), rational_mod(s.im)};
            if (!g.zero()) r.emplace(i, g);
        }
        while (!r.empty()) {
            auto piv = ech.find(r.begin()->first);
            if (piv == ech.end()) break;
            GMod factor = gmodmul(r.begin()->second, gmodinv(piv->second.at(piv->first)));
            for (const auto& [col, val] : piv->second) {
                auto it = r.find(col);
                GMod cur = it == r.end() ? GMod{} : it->second;
                GMod nv = gmodsub(cur, gmodmul(factor, val));
                if (nv.zero())
                    r.erase(col);
                else
                    r[col] = nv;
            }
        }
        if (!r.empty()) {
            ech.emplace(r.begin()->first, std::move(r));
            ++rank;
        }
    }
    return rank;
}

std::int64_t kernel_dimension(const ExactOperator& op) {
    return op.dim - exact_rank(op);
}

std::vector<ExactVector> kernel_basis(const ExactOperator& op) {
    const std::int64_t n = op.dim;
    // sparse reduced row echelon form over Q(i)
    std::vector<std::map<std::int64_t, ExactScalar>> rows;
    for (std::int64_t i = 0; i < n; ++i)
        if (!op.rows[i].empty()) rows.push_back(op.rows[i]);
    std::map<std::int64_t, std::map<std::int64_t, ExactScalar>> echelon;  // pivot -> row
    for (auto& row : rows) {
        while (!row.empty()) {
            auto piv = echelon.find(row.begin()->first);
            if (piv == echelon.end()) break;
            ExactScalar factor = row.begin()->second;  // pivot rows are normalized
            for (const auto& [c, v] : piv->second) {
                auto it = row.find(c);
                ExactScalar nv = (it == row.end() ? ExactScalar() : it->second) - factor * v;
                if (nv.is_zero())
                    row.erase(c);
                else
                    row[c] = nv;
            }
        }
        if (row.empty()) continue;
        ExactScalar inv = ExactScalar(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        echelon.emplace(row.begin()->first, std::move(row));
    }
    // back-substitute to full reduction
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        for (auto& [p, row] : echelon) {
            if (p >= it->first) continue;
            auto hit = row.find(it->first);
            if (hit == row.end()) continue;
            ExactScalar factor = hit->second;
            for (const auto& [c, v] : it->second) {
                auto jt = row.find(c);
                ExactScalar nv = (jt == row.end() ? ExactScalar() : jt->second) - factor * v;
                if (nv.is_zero())
                    row.erase(c);
                else
                    row[c] = nv;
            }
        }
    }
    std::vector<ExactVector> basis;
    for (std::int64_t c = 0; c < n; ++c) {
        if (echelon.count(c)) continue;
        ExactVector v(n);
        v.set(c, ExactScalar(1));
        for (const auto& [p, row] : echelon) {
            auto it = row.find(c);
            if (it != row.end()) v.set(p, -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace fragmenta
