#include <doctest.h>

#include <cmath>

#include "fragmenta/counting.hpp"

using namespace fragmenta;

TEST_CASE("TL kernel dimensions") {
    CHECK(tl_kernel_dim(2, 7) == 8);  // L+1 at N=2
    CHECK(tl_kernel_dim(3, 2) == 8);
    CHECK(tl_kernel_dim(3, 3) == 21);  // recurrence 1, 3, 8, 21
    CHECK(tl_kernel_dim(3, 4) == 55);
    CHECK(tl_kernel_dim(3, 5) == 144);
}

TEST_CASE("recurrence equals the closed form within rounding, N <= 6, L <= 30") {
    for (int N = 2; N <= 6; ++N) {
        double sq = std::sqrt(static_cast<double>(N) * N - 4.0);
        for (int L = 0; L <= 30; ++L) {
            double value;
            if (N == 2) {
                value = L + 1;
            } else {
                value = (std::pow(N + sq, L + 1) - std::pow(N - sq, L + 1)) /
                        (std::pow(2.0, L + 1) * sq);
            }
            double exact = tl_kernel_dim(N, L).get_d();
            // rounds to the exact integer until accumulated floating error
            // exceeds half a unit; afterwards the relative error stays tiny
            CHECK(std::abs(value - exact) <= 0.5 + 1e-12 * exact);
            if (exact < 1e14) CHECK(std::llround(value) == tl_kernel_dim(N, L).get_si());
        }
    }
}

TEST_CASE("QF-TFIM kernel dimensions") {
    CHECK(tfim_qf_kernel_dim(3, 2) == 6);  // 3(3-1)^1
    CHECK(tfim_qf_kernel_dim(2, 5) == 2);
    CHECK(tfim_qf_kernel_dim(3, 5) == 48);
}

TEST_CASE("TL sector counts") {
    CHECK(count_tl_sectors(2, 2) == 4);
    CHECK(count_tl_sectors(2, 3) == 6);  // (25 - 1)/4
    CHECK(count_tl_sectors(3, 2) == 9);  // 8 + 1
    // the closed form in Q(sqrt(N^2-4)) is asserted against the dimer sum
    for (int N = 3; N <= 5; ++N)
        for (int L = 1; L <= 12; ++L) CHECK(count_tl_sectors(N, L) > 0);
}

TEST_CASE("PF sector counts") {
    CHECK(count_pf_sectors(3, 2) == 7);
    CHECK(count_pf_sectors(2, 6) == 7);  // L+1
    CHECK(count_pf_sectors(4, 3) == 40);  // (3^4 - 1)/2
}

TEST_CASE("PF count equals direct irreducible-string enumeration") {
    // strings of length k <= L over N colors with adjacent entries distinct
    // and k = L mod 2
    for (int N : {2, 3, 4}) {
        for (int L = 1; L <= 6; ++L) {
            BigInt direct(0);
            for (int k = L % 2; k <= L; k += 2) {
                if (k == 0) {
                    direct += 1;
                    continue;
                }
                BigInt strings(N);
                for (int i = 1; i < k; ++i) strings *= N - 1;
                direct += strings;
            }
            CHECK(direct == count_pf_sectors(N, L));
        }
    }
}

TEST_CASE("TL dominates PF sector counts for N >= 3") {
    for (int N : {3, 4}) {
        for (int L = 1; L <= 10; ++L) CHECK(count_tl_sectors(N, L) >= count_pf_sectors(N, L));
    }
}

TEST_CASE("quadratic field arithmetic") {
    // q = (3 + sqrt(5))/2 satisfies q^2 = 3q - 1
    QuadExt q(make_rational(3, 2), make_rational(1, 2), 5);
    QuadExt lhs = q * q;
    QuadExt rhs = QuadExt::integer(3, 5) * q - QuadExt::integer(1, 5);
    CHECK(lhs.a == rhs.a);
    CHECK(lhs.b == rhs.b);
    QuadExt inv = QuadExt::integer(1, 5) / q;
    QuadExt unit = q * inv;
    CHECK(unit.a == 1);
    CHECK(unit.b == 0);
    CHECK(q.pow(-2).a == (QuadExt::integer(1, 5) / (q * q)).a);
}
