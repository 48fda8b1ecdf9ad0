#pragma once

#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "schsym/schsym.hpp"

namespace schsym::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, int maxabs = 9) {
    int num = rand_int(rng, -maxabs, maxabs);
    int den = rand_int(rng, 1, maxabs);
    return Rational(num, den);
}

inline GaussianRational random_scalar(Rng& rng, int maxabs = 9) {
    return GaussianRational(random_rational(rng, maxabs), random_rational(rng, maxabs));
}

inline GaussianRational random_nonzero_scalar(Rng& rng, int maxabs = 9) {
    while (true) {
        GaussianRational c = random_scalar(rng, maxabs);
        if (!c.is_zero()) return c;
    }
}

inline Monomial random_monomial(Rng& rng, int n, int max_x, int max_t) {
    Monomial m(n);
    int budget = rand_int(rng, 0, max_x);
    for (int a = 0; a < n && budget > 0; ++a) {
        int e = rand_int(rng, 0, budget);
        m.x[static_cast<size_t>(a)] = e;
        budget -= e;
    }
    m.t = rand_int(rng, 0, max_t);
    return m;
}

inline Poly random_poly(Rng& rng, int n, int max_x, int max_t, int terms) {
    Poly p(n);
    for (int k = 0; k < terms; ++k)
        p.add_term(random_monomial(rng, n, max_x, max_t), random_scalar(rng));
    return p;
}

inline Poly random_nonzero_poly(Rng& rng, int n, int max_x, int max_t, int terms) {
    while (true) {
        Poly p = random_poly(rng, n, max_x, max_t, terms);
        if (!p.is_zero()) return p;
    }
}

inline DiffOp random_diffop(Rng& rng, int n, int max_order, int max_deg, int terms,
                            int max_t = 0) {
    DiffOp op(n);
    for (int k = 0; k < terms; ++k) {
        Monomial alpha = random_monomial(rng, n, max_order, 0);
        op.add_term(alpha, random_poly(rng, n, max_deg, max_t, 2));
    }
    return op;
}

inline SymTensor random_symtensor(Rng& rng, int n, int q, int max_deg) {
    SymTensor f;
    for (int j = 0; j <= q; ++j)
        for (const Monomial& m : monomials_of_degree(n, j))
            if (rand_int(rng, 0, 2) != 0) {
                Poly p = random_poly(rng, n, max_deg, 1, 2);
                if (!p.is_zero()) f[m] = p;
            }
    for (auto it = f.begin(); it != f.end();)
        it = it->second.is_zero() ? f.erase(it) : std::next(it);
    return f;
}

/// Coordinates of exp-poly operators over the union of their
/// (lambda, derivative, monomial) keys; rows = operators.
inline Matrix operators_matrix(const std::vector<ExpPolyOp>& ops) {
    using Key = std::tuple<GaussianRational, Monomial, Monomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            int c = compare(std::get<0>(a), std::get<0>(b));
            if (c != 0) return c < 0;
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            return std::get<2>(a) < std::get<2>(b);
        }
    };
    std::map<Key, size_t, KeyLess> index;
    for (const auto& r : ops)
        for (const auto& [lambda, b] : r.branches())
            for (const auto& [alpha, f] : b.terms())
                for (const auto& [mu, c] : f.terms())
                    index.emplace(Key{lambda, alpha, mu}, index.size());
    Matrix m(ops.size(), index.size());
    for (size_t i = 0; i < ops.size(); ++i)
        for (const auto& [lambda, b] : ops[i].branches())
            for (const auto& [alpha, f] : b.terms())
                for (const auto& [mu, c] : f.terms())
                    m.at(i, index.at(Key{lambda, alpha, mu})) = c;
    return m;
}

/// Span equality via ranks over the shared coordinate system of the union.
inline bool same_span(const std::vector<ExpPolyOp>& a, const std::vector<ExpPolyOp>& b) {
    std::vector<ExpPolyOp> both = a;
    both.insert(both.end(), b.begin(), b.end());
    Matrix m = operators_matrix(both);  // rows: a then b, columns: union keys
    Matrix onlya(a.size(), m.cols()), onlyb(b.size(), m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
        for (size_t i = 0; i < a.size(); ++i) onlya.at(i, j) = m.at(i, j);
        for (size_t i = 0; i < b.size(); ++i) onlyb.at(i, j) = m.at(a.size() + i, j);
    }
    size_t ra = rank(onlya);
    return ra == rank(onlyb) && ra == rank(m);
}

inline std::vector<ExpPolyOp> as_exp(const std::vector<DiffOp>& ops) {
    std::vector<ExpPolyOp> out;
    for (const auto& q : ops) out.push_back(ExpPolyOp::from_diffop(q));
    return out;
}

inline ExpPolyOp exp_op(const GaussianRational& lambda, const DiffOp& b) {
    ExpPolyOp r(b.n());
    r.add_branch(lambda, b);
    return r;
}

}  // namespace schsym::testing
