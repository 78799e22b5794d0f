#include "fragmenta/counting.hpp"

namespace fragmenta {

QuadExt QuadExt::operator+(const QuadExt& o) const { return QuadExt(a + o.a, b + o.b, D); }
QuadExt QuadExt::operator-(const QuadExt& o) const { return QuadExt(a - o.a, b - o.b, D); }
QuadExt QuadExt::operator*(const QuadExt& o) const {
    return QuadExt(a * o.a + b * o.b * D, a * o.b + b * o.a, D);
}
QuadExt QuadExt::operator/(const QuadExt& o) const {
    Rational n = o.a * o.a - o.b * o.b * D;  // field norm of the conjugate pair
    if (n == 0) throw Error("division by zero in Q(sqrt(D))");
    QuadExt conj(o.a, -o.b, D);
    QuadExt num = *this * conj;
    return QuadExt(num.a / n, num.b / n, D);
}
QuadExt QuadExt::pow(int e) const {
    QuadExt r = QuadExt::integer(1, D);
    QuadExt base = *this;
    if (e < 0) {
        base = QuadExt::integer(1, D) / base;
        e = -e;
    }
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BigInt tl_kernel_dim(int N, int L) {
    if (N < 2 || L < 0) throw Error("tl_kernel_dim needs N >= 2, L >= 0");
    // u_{m+1} = N u_m - u_{m-1}; tl_kernel_dim(N, L) = u_{L+1}
    BigInt prev(0), cur(1);
    for (int m = 0; m < L; ++m) {
        BigInt next = BigInt(N) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

BigInt tfim_qf_kernel_dim(int N, int L) {
    if (N < 2 || L < 1) throw Error("tfim_qf_kernel_dim needs N >= 2, L >= 1");
    BigInt r(N);
    for (int i = 0; i < L - 1; ++i) r *= N - 1;
    return r;
}

namespace {

Rational quad_to_rational(const QuadExt& q) {
    if (!q.is_rational()) throw Error("expected a rational value in Q(sqrt(D))");
    return q.a;
}

}  // namespace

BigInt count_tl_sectors(int N, int L) {
    if (N < 2 || L < 1) throw Error("count_tl_sectors needs N >= 2, L >= 1");
    BigInt by_sum(0);
    for (int nd = 0; 2 * nd <= L; ++nd) by_sum += tl_kernel_dim(N, L - 2 * nd);
    if (N == 2) {
        int sigma = L % 2;
        BigInt closed = (BigInt(L + 2) * (L + 2) - sigma) / 4;
        if (closed != by_sum) throw Error("TL sector closed form disagrees with the dimer sum");
        return closed;
    }
    // closed form (q^{L+3} + q^{-L-1} - q^{1+sigma} - q^{1-sigma}) /
    // ((q^2-1)(2q-N)) with q = (N + sqrt(D))/2, D = N^2 - 4
    long D = static_cast<long>(N) * N - 4;
    QuadExt q(make_rational(N, 2), make_rational(1, 2), D);
    int sigma = L % 2;
    QuadExt num = q.pow(L + 3) + q.pow(-L - 1) - q.pow(1 + sigma) - q.pow(1 - sigma);
    QuadExt den = (q * q - QuadExt::integer(1, D)) *
                  (QuadExt::integer(2, D) * q - QuadExt::integer(N, D));
    Rational closed = quad_to_rational(num / den);
    if (closed.get_den() != 1) throw Error("TL sector closed form is not integral");
    if (BigInt(closed.get_num()) != by_sum)
        throw Error("TL sector closed form disagrees with the dimer sum");
    return by_sum;
}

BigInt count_pf_sectors(int N, int L) {
    if (N < 2 || L < 1) throw Error("count_pf_sectors needs N >= 2, L >= 1");
    if (N == 2) return BigInt(L + 1);
    BigInt pw(1);
    for (int i = 0; i < L + 1; ++i) pw *= N - 1;
    BigInt num = pw - 1;
    if (num % (N - 2) != 0) throw Error("PF sector count is not integral");
    return num / (N - 2);
}

}  // namespace fragmenta
