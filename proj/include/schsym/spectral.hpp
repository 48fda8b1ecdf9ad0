#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schsym/diffop.hpp"
#include "schsym/exppoly.hpp"
#include "schsym/matrix.hpp"
#include "schsym/monomial.hpp"
#include "schsym/poly.hpp"
#include "schsym/upoly.hpp"

namespace schsym {

inline GaussianRational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    GaussianRational s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

/// Ordered basis {x^mu * d^alpha : |alpha| <= q, deg mu <= D} of
/// t-independent operators; alpha runs ascending in the outer loop,
/// mu ascending in the inner loop.
struct OperatorSpace {
    int n = 1, q = 0, D = 0;
    std::vector<std::pair<Monomial, Monomial>> items;  // (alpha, mu)
    std::map<std::pair<Monomial, Monomial>, size_t> index;

    static OperatorSpace build(int n, int q, int D) {
        OperatorSpace w;
        w.n = n;
        w.q = q;
        w.D = D;
        for (const Monomial& alpha : enumerate_monomials(n, q, 0))
            for (const Monomial& mu : enumerate_monomials(n, D, 0)) {
                w.index[{alpha, mu}] = w.items.size();
                w.items.emplace_back(alpha, mu);
            }
        return w;
    }

    size_t dim() const { return items.size(); }

    DiffOp element(size_t i) const {
        const auto& [alpha, mu] = items.at(i);
        DiffOp op(n);
        op.add_term(alpha, Poly::monomial(n, mu, GaussianRational(1)));
        return op;
    }

    DiffOp from_coords(const Vec& c) const {
        if (c.size() != items.size()) throw std::invalid_argument("from_coords: length mismatch");
        DiffOp op(n);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            op.add_term(items[i].first, Poly::monomial(n, items[i].second, c[i]));
        }
        return op;
    }

    /// Coordinates of an in-space operator; throws if op falls outside.
    Vec coords(const DiffOp& op) const {
        Vec c(items.size());
        for (const auto& [alpha, f] : op.terms())
            for (const auto& [mu, v] : f.terms()) {
                auto it = index.find({alpha, mu});
                if (it == index.end())
                    throw std::invalid_argument("coords: operator outside the space");
                c[it->second] = v;
            }
        return c;
    }
};

/// Result of restricting T = -i ad_H to the maximal T-invariant subspace
/// U of an OperatorSpace. U is held as reduced-row-echelon basis rows in
/// the coordinates of an enlarged ambient space that provably contains
/// every commutator image.
struct AdjointAnalysis {
    DiffOp H;
    OperatorSpace space;    // W, the requested space
    OperatorSpace ambient;  // order q+1, degree D + max coefficient degree of H
    std::vector<Vec> U;     // canonical basis rows, ambient coordinates
    std::vector<size_t> pivots;
    Matrix M;               // matrix of T on U: T(u_j) = sum_i M(i,j) u_i
    UPoly charpoly;
    std::vector<std::pair<GaussianRational, int>> eigenvalues;  // with multiplicities
    UPoly residual;  // factor of charpoly with no Gaussian-rational roots

    size_t dim_W() const { return space.dim(); }
    size_t dim_U() const { return U.size(); }

    DiffOp op_from_U(const Vec& c) const {
        if (c.size() != U.size()) throw std::invalid_argument("op_from_U: length mismatch");
        Vec amb(ambient.dim());
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; j < amb.size(); ++j)
                if (!U[i][j].is_zero()) amb[j] += c[i] * U[i][j];
        }
        return ambient.from_coords(amb);
    }
};

/// -i [H, .] as an operator-valued map.
inline DiffOp adjoint_map(const DiffOp& h, const DiffOp& v) {
    return -GaussianRational::unit_i() * commutator(h, v);
}

/// Largest subspace U of W with T(U) included in U, T = -i ad_H, computed
/// by shrinking: U_{k+1} = {v in U_k : T(v) in U_k}. Membership tests use
/// the right kernel of the current basis matrix (the row-span annihilator).
inline AdjointAnalysis invariant_subspace(const DiffOp& h, const OperatorSpace& w) {
    if (h.n() != w.n) throw std::invalid_argument("invariant_subspace: arity mismatch");
    if (h.has_t_derivatives() || h.has_t_coefficients())
        throw std::invalid_argument("invariant_subspace: H must be time-independent");

    AdjointAnalysis an;
    an.H = h;
    an.space = w;
    int extra = 0;
    for (const auto& [gamma, f] : h.terms()) extra = std::max(extra, f.x_degree());
    an.ambient = OperatorSpace::build(w.n, w.q + 1, w.D + extra);

    std::vector<Vec> rows;
    rows.reserve(w.dim());
    for (size_t i = 0; i < w.dim(); ++i) rows.push_back(an.ambient.coords(w.element(i)));

    while (!rows.empty()) {
        std::vector<Vec> img;
        img.reserve(rows.size());
        for (const Vec& r : rows)
            img.push_back(an.ambient.coords(adjoint_map(h, an.ambient.from_coords(r))));
        std::vector<Vec> ann = nullspace(Matrix::from_rows(rows));
        if (ann.empty()) break;  // rows span the whole ambient space
        Matrix g(ann.size(), rows.size());
        bool any = false;
        for (size_t i = 0; i < ann.size(); ++i)
            for (size_t j = 0; j < rows.size(); ++j) {
                g.at(i, j) = dot(ann[i], img[j]);
                any = any || !g.at(i, j).is_zero();
            }
        if (!any) break;  // every image already lies in the span
        std::vector<Vec> cs = nullspace(g);
        if (cs.size() == rows.size()) break;
        std::vector<Vec> next;
        next.reserve(cs.size());
        for (const Vec& c : cs) {
            Vec v(an.ambient.dim());
            for (size_t j = 0; j < rows.size(); ++j) {
                if (c[j].is_zero()) continue;
                for (size_t k = 0; k < v.size(); ++k)
                    if (!rows[j][k].is_zero()) v[k] += c[j] * rows[j][k];
            }
            next.push_back(std::move(v));
        }
        rows = std::move(next);
    }

    if (!rows.empty()) {
        Matrix r = Matrix::from_rows(rows);
        an.pivots = rref(r);
        if (an.pivots.size() != rows.size())
            throw internal_error("invariant_subspace: basis degenerated");
        an.U.clear();
        for (size_t i = 0; i < an.pivots.size(); ++i) an.U.push_back(r.row(i));
    }

    size_t u = an.U.size();
    an.M = Matrix(u, u);
    for (size_t j = 0; j < u; ++j) {
        Vec img = an.ambient.coords(adjoint_map(h, an.ambient.from_coords(an.U[j])));
        Vec c(u);
        for (size_t i = 0; i < u; ++i) c[i] = img[an.pivots[i]];
        // reconstruct and require exact membership
        Vec back(an.ambient.dim());
        for (size_t i = 0; i < u; ++i) {
            if (c[i].is_zero()) continue;
            for (size_t k = 0; k < back.size(); ++k)
                if (!an.U[i][k].is_zero()) back[k] += c[i] * an.U[i][k];
        }
        if (back != img) throw internal_error("invariant_subspace: image escaped the fixpoint");
        for (size_t i = 0; i < u; ++i) an.M.at(i, j) = c[i];
    }

    an.charpoly = char_poly(an.M);
    auto [roots, residual] = gaussian_roots(an.charpoly);
    an.eigenvalues = std::move(roots);
    an.residual = residual;
    return an;
}

namespace detail {

/// Incrementally extendable row span with exact rank tracking.
class SpanTracker {
public:
    bool contains(const Vec& v) const { return !would_grow(v); }
    bool add(const Vec& v) {
        if (!would_grow(v)) return false;
        rows_.push_back(v);
        Matrix m = Matrix::from_rows(rows_);
        rref(m);
        reduced_.clear();
        for (size_t i = 0; i < rows_.size(); ++i) reduced_.push_back(m.row(i));
        return true;
    }

private:
    bool would_grow(const Vec& v) const {
        if (rows_.empty()) {
            for (const auto& x : v)
                if (!x.is_zero()) return true;
            return false;
        }
        std::vector<Vec> trial = reduced_;
        trial.push_back(v);
        Matrix m = Matrix::from_rows(trial);
        return rref(m).size() > rows_.size();
    }

    std::vector<Vec> rows_;
    std::vector<Vec> reduced_;
};

inline Matrix matrix_power(const Matrix& m, int k) {
    Matrix r = Matrix::identity(m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

}  // namespace detail

/// A Jordan chain of T = -i ad_H at lambda: C_{l+1} = (T - lambda) C_l,
/// ending at an eigenvector, assembled into the symmetry
/// R = e^{lambda t} sum_k C_k t^k / k!.
struct SymmetryChain {
    GaussianRational lambda;
    std::vector<Vec> coords;   // chain members in U coordinates
    std::vector<DiffOp> C;
    ExpPolyOp R;
};

namespace detail {

inline ExpPolyOp assemble_chain_tail(const AdjointAnalysis& an, const GaussianRational& lambda,
                                     const std::vector<DiffOp>& c, size_t from) {
    const int n = an.space.n;
    DiffOp b(n);
    GaussianRational kfact(1);
    for (size_t k = from; k < c.size(); ++k) {
        size_t p = k - from;
        if (p > 0) kfact *= GaussianRational(static_cast<int>(p));
        Monomial tmono(n);
        tmono.t = static_cast<int>(p);
        Poly tp = Poly::monomial(n, tmono, GaussianRational(1) / kfact);
        DiffOp scaled(n);
        for (const auto& [alpha, f] : c[k].terms()) scaled.add_term(alpha, f * tp);
        b += scaled;
    }
    ExpPolyOp r(n);
    r.add_branch(lambda, b);
    return r;
}

}  // namespace detail

/// Maximal independent set of Jordan chains of M at the eigenvalue
/// lambda, longest first; total length equals the algebraic multiplicity.
/// Chains are scaled so the first nonzero U-coordinate of C_0 is 1, and
/// every assembled R is verified to satisfy i dR/dt = [H, R] exactly.
inline std::vector<SymmetryChain> jordan_chains(const AdjointAnalysis& an,
                                                const GaussianRational& lambda) {
    bool known = false;
    for (const auto& [l, m] : an.eigenvalues) known = known || l == lambda;
    if (!known) throw std::invalid_argument("jordan_chains: not a found eigenvalue");

    const size_t u = an.U.size();
    Matrix nmat = an.M + (-lambda) * Matrix::identity(u);

    std::vector<std::vector<Vec>> kernels;  // kernels[s-1] = basis of ker N^s
    kernels.push_back(nullspace(nmat));
    while (true) {
        Matrix pw = detail::matrix_power(nmat, static_cast<int>(kernels.size()) + 1);
        std::vector<Vec> k = nullspace(pw);
        if (k.size() == kernels.back().size()) break;
        kernels.push_back(std::move(k));
    }
    const size_t smax = kernels.size();

    std::vector<std::pair<Vec, size_t>> heads;  // (head vector, chain length)
    for (size_t s = smax; s >= 1; --s) {
        detail::SpanTracker blockers;
        if (s >= 2)
            for (const Vec& v : kernels[s - 2]) blockers.add(v);
        for (const auto& [h, len] : heads) {
            Vec v = h;
            for (size_t k = 0; k < len - s; ++k) v = nmat * v;
            blockers.add(v);
        }
        for (const Vec& cand : kernels[s - 1]) {
            if (!blockers.add(cand)) continue;
            heads.emplace_back(cand, s);
        }
    }

    std::vector<SymmetryChain> chains;
    for (const auto& [head, len] : heads) {
        SymmetryChain ch;
        ch.lambda = lambda;
        Vec v = head;
        // normalize on the head's first nonzero coordinate
        GaussianRational scale;
        for (const auto& x : head)
            if (!x.is_zero()) {
                scale = x.inverse();
                break;
            }
        v = Vec(head.size());
        for (size_t i = 0; i < head.size(); ++i) v[i] = head[i] * scale;
        for (size_t l = 0; l < len; ++l) {
            ch.coords.push_back(v);
            ch.C.push_back(an.op_from_U(v));
            v = nmat * v;
        }
        for (const auto& x : v)
            if (!x.is_zero()) throw internal_error("jordan_chains: chain does not terminate");
        ch.R = detail::assemble_chain_tail(an, lambda, ch.C, 0);
        if (!is_symmetry(an.H, ch.R)) throw internal_error("jordan_chains: R fails verification");
        chains.push_back(std::move(ch));
    }
    return chains;
}

inline std::vector<SymmetryChain> all_chains(const AdjointAnalysis& an) {
    std::vector<SymmetryChain> out;
    for (const auto& [lambda, mult] : an.eigenvalues)
        for (auto& ch : jordan_chains(an, lambda)) out.push_back(std::move(ch));
    return out;
}

/// Every tail of a chain is itself a symmetry:
/// R_l = e^{lambda t} sum_{k>=l} C_k t^{k-l}/(k-l)!. A chain of length
/// m+1 therefore spans m+1 independent symmetries.
inline std::vector<ExpPolyOp> chain_symmetries(const AdjointAnalysis& an,
                                               const SymmetryChain& ch) {
    std::vector<ExpPolyOp> out;
    for (size_t l = 0; l < ch.C.size(); ++l) {
        ExpPolyOp r = detail::assemble_chain_tail(an, ch.lambda, ch.C, l);
        if (!is_symmetry(an.H, r)) throw internal_error("chain_symmetries: tail fails verification");
        out.push_back(std::move(r));
    }
    return out;
}

/// The combined symmetry space over all found eigenvalues.
inline std::vector<ExpPolyOp> combined_symmetries(const AdjointAnalysis& an) {
    std::vector<ExpPolyOp> out;
    for (const auto& ch : all_chains(an))
        for (auto& r : chain_symmetries(an, ch)) out.push_back(std::move(r));
    return out;
}

/// Existence decision for time-dependent symmetries within the analyzed
/// space, together with explicit witnesses when they live over the
/// Gaussian rationals.
struct Theorem3Verdict {
    bool has_time_dependent = false;
    bool witnesses_unavailable = false;
    std::vector<std::pair<GaussianRational, DiffOp>> case1;  // e^{lambda t} K0, lambda != 0
    std::vector<std::pair<DiffOp, DiffOp>> case2;            // (K0, K1): R = K0 + t K1
    std::vector<DiffOp> mastersymmetries;                    // K0 with [H,[H,K0]] = 0, [H,K0] != 0
};

inline Theorem3Verdict theorem3_decide(const AdjointAnalysis& an) {
    Theorem3Verdict v;
    const size_t u = an.U.size();
    bool nilpotent = is_power_of_s(an.charpoly);
    std::vector<Vec> ker1 = nullspace(an.M);
    std::vector<Vec> ker2 = nullspace(an.M * an.M);
    bool case2 = ker2.size() > ker1.size();
    v.has_time_dependent = !nilpotent || case2;

    auto normalize = [](Vec c) {
        GaussianRational s;
        for (const auto& x : c)
            if (!x.is_zero()) {
                s = x.inverse();
                break;
            }
        for (auto& x : c) x *= s;
        return c;
    };

    for (const auto& [lambda, mult] : an.eigenvalues) {
        if (lambda.is_zero()) continue;
        Matrix nmat = an.M + (-lambda) * Matrix::identity(u);
        std::vector<Vec> eig = nullspace(nmat);
        if (eig.empty()) throw internal_error("theorem3_decide: eigenvalue without eigenvector");
        Vec c = normalize(eig.front());
        DiffOp k0 = an.op_from_U(c);
        // [H, K0] = i lambda K0
        DiffOp lhs = commutator(an.H, k0);
        DiffOp rhs = (GaussianRational::unit_i() * lambda) * k0;
        if (lhs != rhs) throw internal_error("theorem3_decide: case-1 witness fails");
        v.case1.emplace_back(lambda, std::move(k0));
    }

    if (case2) {
        detail::SpanTracker span;
        for (const Vec& k : ker1) span.add(k);
        for (const Vec& k : ker2) {
            Vec c = k;
            if (!span.add(c)) continue;
            c = normalize(c);
            DiffOp k0 = an.op_from_U(c);
            DiffOp k1 = an.op_from_U(an.M * c);
            if (k1.is_zero()) throw internal_error("theorem3_decide: case-2 K1 vanished");
            // [H, K0] = i K1 and [H, K1] = 0
            if (commutator(an.H, k0) != GaussianRational::unit_i() * k1 ||
                !commutator(an.H, k1).is_zero())
                throw internal_error("theorem3_decide: case-2 witness fails");
            v.mastersymmetries.push_back(k0);
            v.case2.emplace_back(std::move(k0), std::move(k1));
        }
    }

    v.witnesses_unavailable = v.has_time_dependent && v.case1.empty() && v.case2.empty();
    return v;
}

}  // namespace schsym
