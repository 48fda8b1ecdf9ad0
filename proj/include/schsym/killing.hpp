#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "schsym/matrix.hpp"
#include "schsym/monomial.hpp"
#include "schsym/poly.hpp"
#include "schsym/symtensor.hpp"

namespace schsym {

/// Left-hand sides of the rank-j order-p generalized Killing equation for
/// a symmetric tensor F: one polynomial per symmetric (j+p)-index sigma,
///   sum over beta <= sigma with |beta| = p of C(sigma, beta) d^beta F^(sigma-beta),
/// which is the fully symmetrized p-fold gradient up to an overall factor.
/// F is identically a solution iff every returned Poly is zero.
inline std::map<Monomial, Poly> killing_defect(int n, int j, int p, const SymTensor& f) {
    std::map<Monomial, Poly> out;
    for (const Monomial& sigma : monomials_of_degree(n, j + p)) {
        Poly lhs(n);
        for (const Monomial& beta : sub_indices(sigma)) {
            if (beta.x_degree() != p) continue;
            Monomial m = sigma / beta;
            auto it = f.find(m);
            if (it == f.end()) continue;
            lhs += it->second.diff(beta) * GaussianRational(Rational(multi_binomial(sigma, beta), 1));
        }
        out[sigma] = lhs;
    }
    return out;
}

/// Exact basis of polynomial solutions of the (j, p) generalized Killing
/// equation with component degree <= D, via a generic ansatz and an exact
/// nullspace. Components are t-free.
inline std::vector<SymTensor> killing_basis(int n, int j, int p, int D) {
    if (n < 1 || j < 0 || p < 1 || D < 0)
        throw std::invalid_argument("killing_basis: need n >= 1, j >= 0, p >= 1, D >= 0");
    const std::vector<Monomial> comps = monomials_of_degree(n, j);
    const std::vector<Monomial> monos = enumerate_monomials(n, D, 0);
    const size_t cols = comps.size() * monos.size();
    auto col = [&](size_t ci, size_t mi) { return ci * monos.size() + mi; };

    // rows keyed by (condition index, output monomial), built sparsely
    std::map<std::pair<size_t, Monomial>, Vec> rows;
    const std::vector<Monomial> sigmas = monomials_of_degree(n, j + p);
    for (size_t si = 0; si < sigmas.size(); ++si) {
        const Monomial& sigma = sigmas[si];
        for (const Monomial& beta : sub_indices(sigma)) {
            if (beta.x_degree() != p) continue;
            Monomial m = sigma / beta;
            auto cit = std::lower_bound(comps.begin(), comps.end(), m);
            if (cit == comps.end() || *cit != m) continue;
            size_t ci = static_cast<size_t>(cit - comps.begin());
            GaussianRational w(Rational(multi_binomial(sigma, beta), 1));
            for (size_t mi = 0; mi < monos.size(); ++mi) {
                Poly d = Poly::monomial(n, monos[mi], w).diff(beta);
                for (const auto& [nu, c] : d.terms()) {
                    Vec& row = rows[{si, nu}];
                    if (row.empty()) row.assign(cols, GaussianRational());
                    row[col(ci, mi)] += c;
                }
            }
        }
    }

    std::vector<Vec> rowvec;
    rowvec.reserve(rows.size());
    for (auto& [key, r] : rows) rowvec.push_back(std::move(r));
    std::vector<Vec> kernel =
        rowvec.empty() ? std::vector<Vec>() : nullspace(Matrix::from_rows(rowvec));
    if (rowvec.empty()) {
        // no conditions at all: every ansatz coefficient is free
        for (size_t c = 0; c < cols; ++c) {
            Vec v(cols);
            v[c] = GaussianRational(1);
            kernel.push_back(std::move(v));
        }
    }

    std::vector<SymTensor> basis;
    for (const Vec& v : kernel) {
        SymTensor f;
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            Poly comp(n);
            for (size_t mi = 0; mi < monos.size(); ++mi)
                comp.add_term(monos[mi], v[col(ci, mi)]);
            if (!comp.is_zero()) f[comps[ci]] = comp;
        }
        basis.push_back(std::move(f));
    }

    // every element must solve the equation exactly
    for (const auto& f : basis)
        for (const auto& [sigma, lhs] : killing_defect(n, j, p, f))
            if (!lhs.is_zero()) throw internal_error("killing_basis: defective element");
    return basis;
}

}  // namespace schsym
