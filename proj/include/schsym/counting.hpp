#pragma once

#include <stdexcept>
#include <vector>

#include "schsym/rational.hpp"

namespace schsym {

namespace detail {
inline void require_nq(int n, int q) {
    if (n < 1) throw std::invalid_argument("counting: n must be >= 1");
    if (q < 0) throw std::invalid_argument("counting: q must be >= 0");
}
}  // namespace detail

/// N_hat(n, q) = (q+n)!(q+n+1)! / (q!(q+1)!n!(n+1)!), the dimension bound
/// for order-q symmetries with arbitrary potential, attained at V = 0.
inline BigInt count_Nhat(int n, int q) {
    detail::require_nq(n, q);
    BigInt num = factorial(static_cast<unsigned>(q + n)) * factorial(static_cast<unsigned>(q + n + 1));
    BigInt den = factorial(static_cast<unsigned>(q)) * factorial(static_cast<unsigned>(q + 1)) *
                 factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n + 1));
    return exact_div(num, den);
}

/// S(n, q, j) = (j+n-1)!(q+n)!(q-j+1) / (n!(n-1)!j!(q+1)!): the number of
/// free constants the rank-j, order-(q-j+1) generalized Killing equation
/// contributes to an order-q problem. Sums to N_hat over j = 0..q.
inline BigInt count_S(int n, int q, int j) {
    detail::require_nq(n, q);
    if (j < 0 || j > q) throw std::invalid_argument("count_S: need 0 <= j <= q");
    BigInt num = factorial(static_cast<unsigned>(j + n - 1)) *
                 factorial(static_cast<unsigned>(q + n)) * BigInt(q - j + 1);
    BigInt den = factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - 1)) *
                 factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(q + 1));
    return exact_div(num, den);
}

/// K(n, j) = (j+n-1)!(j+n)! / (j!(j+1)!(n-1)!n!), the dimension of rank-j
/// order-1 Killing tensors on flat n-space; equals S(n, j, j).
inline BigInt count_K(int n, int j) {
    detail::require_nq(n, j);
    BigInt num = factorial(static_cast<unsigned>(j + n - 1)) * factorial(static_cast<unsigned>(j + n));
    BigInt den = factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(j + 1)) *
                 factorial(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n));
    return exact_div(num, den);
}

/// N_tilde(n, q) = sum of K(n, j) over j = 0..q: the bound for
/// time-independent symmetries (operators commuting with H).
inline BigInt count_Ntilde(int n, int q) {
    detail::require_nq(n, q);
    BigInt s = 0;
    for (int j = 0; j <= q; ++j) s += count_K(n, j);
    return s;
}

/// Closed forms for N_tilde, only stated for n <= 4:
/// n=1: q+1; otherwise (q+n+1)!/(q!(2n-1)!) * P_n(q) with
/// P_2 = 1, P_3 = 2q+5, P_4 = 5q^2+30q+42.
inline BigInt count_Ntilde_closed(int n, int q) {
    detail::require_nq(n, q);
    if (n > 4) throw std::invalid_argument("count_Ntilde_closed: closed form known for n <= 4 only");
    if (n == 1) return BigInt(q + 1);
    BigInt pq = 1;
    if (n == 3) pq = BigInt(2 * q + 5);
    if (n == 4) pq = BigInt(5) * q * q + BigInt(30) * q + 42;
    return exact_div(factorial(static_cast<unsigned>(q + n + 1)) * pq,
                     factorial(static_cast<unsigned>(q)) *
                         factorial(static_cast<unsigned>(2 * n - 1)));
}

struct CountTable {
    int n = 1, q = 0;
    BigInt N_hat, N_tilde;
    std::vector<BigInt> S, K;  // indexed by j = 0..q
    bool outside_proven_range = false;
};

inline CountTable make_count_table(int n, int q) {
    CountTable t;
    t.n = n;
    t.q = q;
    t.N_hat = count_Nhat(n, q);
    t.N_tilde = count_Ntilde(n, q);
    for (int j = 0; j <= q; ++j) {
        t.S.push_back(count_S(n, q, j));
        t.K.push_back(count_K(n, j));
    }
    t.outside_proven_range = n > 4;
    return t;
}

}  // namespace schsym
