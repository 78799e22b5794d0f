#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fragmenta {

using Rational = mpq_class;
using BigInt = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Gaussian rational a + b*i. Phases are restricted to the 4th roots of
// unity, which is all the constructions here ever need; general e^{i theta}
// is rejected at the parsing layer.
struct ExactScalar {
    Rational re, im;

    ExactScalar() : re(0), im(0) {}
    ExactScalar(long r) : re(r), im(0) {}
    ExactScalar(const Rational& r) : re(r), im(0) {}
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static ExactScalar unit_i() { return ExactScalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ExactScalar conj() const { return ExactScalar(re, -im); }

    ExactScalar operator-() const { return ExactScalar(-re, -im); }
    ExactScalar operator+(const ExactScalar& o) const { return ExactScalar(re + o.re, im + o.im); }
    ExactScalar operator-(const ExactScalar& o) const { return ExactScalar(re - o.re, im - o.im); }
    ExactScalar operator*(const ExactScalar& o) const {
        return ExactScalar(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    ExactScalar& operator+=(const ExactScalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar operator/(const ExactScalar& o) const;

    bool operator==(const ExactScalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // |z|^2, exact.
    Rational norm2() const { return re * re + im * im; }

    double to_double_re() const { return re.get_d(); }
    double to_double_im() const { return im.get_d(); }

    std::string str() const;
};

// Multiplication by i^k, k in {0,1,2,3}.
ExactScalar quarter_phase(int k);

// Sparse exact vector over Gaussian rationals. No stored zeros.
struct ExactVector {
    std::int64_t dim = 0;
    std::map<std::int64_t, ExactScalar> entries;

    ExactVector() = default;
    explicit ExactVector(std::int64_t d) : dim(d) {}

    void set(std::int64_t i, const ExactScalar& v);
    void add(std::int64_t i, const ExactScalar& v);
    ExactScalar get(std::int64_t i) const;
    bool is_zero() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }

    ExactVector operator+(const ExactVector& o) const;
    ExactVector operator-(const ExactVector& o) const;
    ExactVector scaled(const ExactScalar& c) const;

    // <this|other> with conjugation on this.
    ExactScalar inner(const ExactVector& o) const;
    Rational norm2() const;

    bool operator==(const ExactVector& o) const { return dim == o.dim && entries == o.entries; }

    std::string str() const;
};

ExactVector tensor(const ExactVector& a, const ExactVector& b);

// Sparse exact operator, row-major. Dimensions stay at desk scale
// (N^L <= ~10^6); anything larger is handled on the fly by quad2d.
struct ExactOperator {
    std::int64_t dim = 0;
    std::vector<std::map<std::int64_t, ExactScalar>> rows;

    ExactOperator() = default;
    explicit ExactOperator(std::int64_t d) : dim(d), rows(static_cast<std::size_t>(d)) {}

    static ExactOperator identity(std::int64_t d);

    void add(std::int64_t r, std::int64_t c, const ExactScalar& v);
    ExactScalar get(std::int64_t r, std::int64_t c) const;
    std::size_t nnz() const;

    ExactVector apply(const ExactVector& v) const;
    ExactOperator dagger() const;
    ExactOperator operator+(const ExactOperator& o) const;
    ExactOperator operator-(const ExactOperator& o) const;
    ExactOperator operator*(const ExactOperator& o) const;
    ExactOperator scaled(const ExactScalar& c) const;

    bool is_hermitian() const;
    bool is_zero() const;

    // Conjugation P H P^dagger by a permutation operator given as the image
    // map p(i); cheaper than two sparse products.
    ExactOperator conjugate_by_permutation(const std::vector<std::int64_t>& image) const;
};

bool operator_equal(const ExactOperator& a, const ExactOperator& b);
ExactOperator commutator(const ExactOperator& a, const ExactOperator& b);

// |v><v| as an operator.
ExactOperator outer_projector(const ExactVector& v);

// Incremental row echelon over Q(i) with fraction-free integer rows.
// Serves rank, nullity, Krylov closure growth and span-membership tests.
class ExactEchelon {
  public:
    explicit ExactEchelon(std::int64_t dim) : dim_(dim) {}

    // Reduces v against the current basis; returns true when v added a
    // new pivot (i.e. was independent).
    bool insert(const ExactVector& v);

    // True iff v lies in the current span. Does not modify the basis.
    bool contains(const ExactVector& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    std::int64_t dim() const { return dim_; }

  private:
    struct GaussRow {
        // pivot-sorted sparse row with Gaussian-integer entries
        std::map<std::int64_t, std::pair<BigInt, BigInt>> e;
    };
    std::int64_t dim_;
    std::map<std::int64_t, GaussRow> rows_;  // pivot column -> row

    // Returns the fully reduced row (empty iff dependent).
    GaussRow reduce(const ExactVector& v) const;
    friend struct EchelonTestAccess;
};

// Exact rank of a list of vectors (rows of a matrix).
int exact_rank(const std::vector<ExactVector>& rows);
int exact_rank(const ExactOperator& op);

// Rank modulo the prime 2^31-1 (= 3 mod 4, so Gaussian integers mod p form
// a field). A lower bound on the true rank; equality with min(#rows, dim)
// certifies full rank exactly.
int modular_rank(const std::vector<ExactVector>& rows);

// dim - exact_rank; exact arithmetic cannot fail numerically.
std::int64_t kernel_dimension(const ExactOperator& op);

// Deterministic exact basis of ker(op) via reduced row echelon form.
std::vector<ExactVector> kernel_basis(const ExactOperator& op);

}  // namespace fragmenta
