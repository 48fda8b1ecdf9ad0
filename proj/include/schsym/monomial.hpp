#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "schsym/rational.hpp"

namespace schsym {

/// Exponent vector for x_1..x_n plus a t exponent. Doubles as the
/// derivative multi-index of an operator term (the t slot then holds the
/// order of the time derivative).
///
/// Ordering is graded lexicographic with x1 > ... > xn > t; the total
/// degree counts the t exponent.
struct Monomial {
    std::vector<int> x;
    int t = 0;

    Monomial() = default;
    explicit Monomial(int n) : x(static_cast<size_t>(n), 0) {}
    Monomial(std::vector<int> xs, int te) : x(std::move(xs)), t(te) {}

    int n() const { return static_cast<int>(x.size()); }
    int x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }
    int degree() const { return x_degree() + t; }
    bool is_one() const { return t == 0 && x_degree() == 0; }
    bool is_t_free() const { return t == 0; }

    static Monomial var(int n, int a) {
        Monomial m(n);
        m.x.at(static_cast<size_t>(a)) = 1;
        return m;
    }
    static Monomial t_var(int n) {
        Monomial m(n);
        m.t = 1;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.x.size() != b.x.size()) throw std::invalid_argument("Monomial: mismatched variable count");
        Monomial r = a;
        for (size_t i = 0; i < r.x.size(); ++i) r.x[i] += b.x[i];
        r.t += b.t;
        return r;
    }

    /// Componentwise a <= b (a divides b when read as monomials).
    friend bool divides(const Monomial& a, const Monomial& b) {
        if (a.x.size() != b.x.size()) return false;
        for (size_t i = 0; i < a.x.size(); ++i)
            if (a.x[i] > b.x[i]) return false;
        return a.t <= b.t;
    }

    /// Componentwise difference; requires divides(b, a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        if (!divides(b, a)) throw std::invalid_argument("Monomial: inexact division");
        Monomial r = a;
        for (size_t i = 0; i < r.x.size(); ++i) r.x[i] -= b.x[i];
        r.t -= b.t;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.t <=> b.t;
    }
};

/// All monomials with total x-degree <= max_x and t-degree <= max_t,
/// sorted ascending (graded lex).
inline std::vector<Monomial> enumerate_monomials(int n, int max_x, int max_t) {
    std::vector<Monomial> out;
    Monomial m(n);
    auto rec = [&](auto&& self, int var, int budget) -> void {
        if (var == n) {
            for (int k = 0; k <= max_t; ++k) {
                m.t = k;
                out.push_back(m);
            }
            m.t = 0;
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            m.x[static_cast<size_t>(var)] = e;
            self(self, var + 1, budget - e);
        }
        m.x[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, max_x);
    std::sort(out.begin(), out.end());
    return out;
}

/// All t-free monomials of exact x-degree j, sorted ascending.
inline std::vector<Monomial> monomials_of_degree(int n, int j) {
    std::vector<Monomial> out;
    for (const auto& m : enumerate_monomials(n, j, 0))
        if (m.x_degree() == j) out.push_back(m);
    return out;
}

/// Multinomial j!/(m_1!...m_n!) for a t-free multi-index of degree j:
/// the number of ordered index tuples with the given multiset.
inline BigInt tuple_count(const Monomial& m) {
    BigInt c = factorial(static_cast<unsigned>(m.degree()));
    for (int e : m.x) c = exact_div(c, factorial(static_cast<unsigned>(e)));
    c = exact_div(c, factorial(static_cast<unsigned>(m.t)));
    return c;
}

/// Product of componentwise binomials C(a_i, b_i) (including the t slot);
/// the Leibniz coefficient for derivative multi-indices.
inline BigInt multi_binomial(const Monomial& a, const Monomial& b) {
    BigInt c = binomial(static_cast<unsigned>(a.t), static_cast<unsigned>(b.t));
    for (size_t i = 0; i < a.x.size() && c != 0; ++i)
        c *= binomial(static_cast<unsigned>(a.x[i]), static_cast<unsigned>(b.x[i]));
    return c;
}

/// All multi-indices g with g <= a componentwise (t slot included),
/// ascending grlex.
inline std::vector<Monomial> sub_indices(const Monomial& a) {
    std::vector<Monomial> out;
    Monomial g(a.n());
    auto rec = [&](auto&& self, int var) -> void {
        if (var == a.n()) {
            for (int k = 0; k <= a.t; ++k) {
                g.t = k;
                out.push_back(g);
            }
            g.t = 0;
            return;
        }
        for (int e = 0; e <= a.x[static_cast<size_t>(var)]; ++e) {
            g.x[static_cast<size_t>(var)] = e;
            self(self, var + 1);
        }
        g.x[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace schsym
