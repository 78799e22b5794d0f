#pragma once

#include <optional>
#include <string>

#include "fragmenta/exact.hpp"

namespace fragmenta {

// dim ker H_TL on an open chain: L+1 for N = 2; for N > 2 the closed form
// with q = (N + sqrt(N^2-4))/2 equals the integer recurrence
// a_{m+1} = N a_m - a_{m-1}, a_0 = 1, a_1 = N, evaluated at m = L.
BigInt tl_kernel_dim(int N, int L);

// dim ker H^QF_TFIM = N (N-1)^{L-1}.
BigInt tfim_qf_kernel_dim(int N, int L);

// Total number of TL Krylov sectors: ((L+2)^2 - sigma)/4 for N = 2 with
// sigma = L mod 2; for N > 2 the sum of tl_kernel_dim(N, L - 2 N_d) over
// dimer counts, asserted equal to the q-expression closed form evaluated
// exactly in Q(sqrt(N^2-4)).
BigInt count_tl_sectors(int N, int L);

// Total number of PF Krylov sectors: L+1 for N = 2,
// ((N-1)^{L+1} - 1)/(N-2) for N > 2.
BigInt count_pf_sectors(int N, int L);

// Elements of Q(sqrt(D)) with exact rational coordinates; used to evaluate
// the irrational closed forms without floating point.
struct QuadExt {
    Rational a, b;  // a + b sqrt(D)
    long D = 0;

    QuadExt(Rational a_, Rational b_, long D_) : a(std::move(a_)), b(std::move(b_)), D(D_) {}
    static QuadExt integer(long v, long D) { return QuadExt(Rational(v), Rational(0), D); }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt pow(int e) const;
    bool is_rational() const { return b == 0; }
};

struct CountReport {
    std::string model;
    int N = 0;
    int L = 0;
    BigInt formula_value;
    std::optional<BigInt> census_value;
    bool match = true;
};

}  // namespace fragmenta
