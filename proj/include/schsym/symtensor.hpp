#pragma once

#include <map>
#include <stdexcept>

#include "schsym/diffop.hpp"
#include "schsym/monomial.hpp"
#include "schsym/poly.hpp"

namespace schsym {

/// Components of symmetric tensor fields F^{a_1...a_j}(x, t), one entry
/// per sorted index multiset, keyed by the t-free multi-index that counts
/// index repetitions. Mixed degrees may coexist in one map.
using SymTensor = std::map<Monomial, Poly>;

namespace detail {

/// Nested anticommutator [...[[f, p_{a_1}]_+, p_{a_2}]_+ ..., p_{a_j}]_+
/// for one ordered tuple realizing m; the p's commute, so any order
/// yields the same operator.
inline DiffOp nest_anticommutators(const Poly& f, const Monomial& m) {
    DiffOp op = DiffOp::from_poly(f);
    for (int a = 0; a < m.n(); ++a) {
        DiffOp pa = DiffOp::momentum(m.n(), a);
        for (int k = 0; k < m.x[static_cast<size_t>(a)]; ++k) op = anticommutator(op, pa);
    }
    return op;
}

}  // namespace detail

/// Q = sum over ordered index tuples of the nested anticommutator
/// [...[F^{a_1...a_j}, p_{a_1}]_+ ..., p_{a_j}]_+; equal tuples collapse
/// into a multinomial weight.
inline DiffOp from_symmetrized(int n, const SymTensor& f) {
    DiffOp q(n);
    for (const auto& [m, comp] : f) {
        if (m.n() != n || m.t != 0)
            throw std::invalid_argument("from_symmetrized: bad index multiset");
        if (comp.is_zero()) continue;
        q += GaussianRational(Rational(tuple_count(m), 1)) * detail::nest_anticommutators(comp, m);
    }
    return q;
}

/// Inverse of from_symmetrized for operators with x-derivatives only.
/// Works top order down: at order j the leading coefficient of the nested
/// anticommutator is (-2i)^j * multinomial * F, so
/// F_m = b_m * i^j / (2^j * multinomial(m)).
inline SymTensor to_symmetrized(const DiffOp& q) {
    if (q.has_t_derivatives())
        throw std::invalid_argument("to_symmetrized: operator contains t-derivatives");
    const int n = q.n();
    SymTensor f;
    DiffOp rest = q;
    for (int j = rest.x_order(); j >= 0; --j) {
        SymTensor level;
        for (const auto& [alpha, b] : rest.terms()) {
            if (alpha.x_degree() != j) continue;
            GaussianRational scale = pow_unit_i(j);  // i^j
            scale /= GaussianRational(Rational(BigInt(1) << j, 1) * Rational(tuple_count(alpha), 1));
            level[alpha] = b * scale;
        }
        for (const auto& [m, comp] : level) {
            if (comp.is_zero()) continue;
            f[m] = comp;
        }
        rest -= from_symmetrized(n, level);
    }
    if (!rest.is_zero()) throw internal_error("to_symmetrized: nonzero remainder");
    return f;
}

}  // namespace schsym
