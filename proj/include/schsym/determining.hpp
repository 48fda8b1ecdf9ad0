#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schsym/diffop.hpp"
#include "schsym/exppoly.hpp"
#include "schsym/format.hpp"
#include "schsym/matrix.hpp"
#include "schsym/monomial.hpp"
#include "schsym/poly.hpp"
#include "schsym/schrodinger.hpp"

namespace schsym {

/// One linear expression in the unknown coefficient functions b_alpha:
/// a sum of atoms c(x,t) * d^beta b_alpha, keyed by (alpha, beta). The
/// t slot of beta holds time derivatives; alpha is always t-free.
struct LinearDiffExpr {
    std::map<std::pair<Monomial, Monomial>, Poly> atoms;

    void add(const Monomial& unknown, const Monomial& deriv, const Poly& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(unknown, deriv);
        auto it = atoms.find(key);
        if (it == atoms.end()) {
            atoms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) atoms.erase(it);
        }
    }
    bool is_zero() const { return atoms.empty(); }
};

/// The coefficient of each derivative monomial of [L, Q] with symbolic
/// Q = sum b_alpha d^alpha, |alpha| <= q; Q is a symmetry iff every
/// expression vanishes for the concrete b's.
struct DeterminingSystem {
    int n = 1, q = 0;
    std::map<Monomial, LinearDiffExpr> equations;  // keyed by output derivative slot
};

/// Expand [L, Q] = [i*dt - H, Q] with unknown coefficient functions.
/// The i*dt part contributes i * (db_alpha/dt) at slot alpha; the -[H, .]
/// part is the Leibniz expansion of both composition orders.
inline DeterminingSystem generate_determining_system(const Schrodinger& s, int q) {
    if (q < 0) throw std::invalid_argument("generate_determining_system: q >= 0 required");
    const int n = s.n;
    DiffOp h = hamiltonian(s);
    DeterminingSystem sys;
    sys.n = n;
    sys.q = q;
    Poly iconst = Poly::constant(n, GaussianRational::unit_i());
    for (const Monomial& alpha : enumerate_monomials(n, q, 0)) {
        sys.equations[alpha].add(alpha, Monomial::t_var(n), iconst);
        for (const auto& [gamma, hg] : h.terms()) {
            // -(H o b d^alpha): slot gamma - delta + alpha, coefficient -h_gamma C(gamma, delta)
            for (const Monomial& delta : sub_indices(gamma)) {
                GaussianRational c(Rational(multi_binomial(gamma, delta), 1));
                sys.equations[(gamma / delta) * alpha].add(alpha, delta, -(hg * c));
            }
            // +(b d^alpha o H): slot alpha - delta + gamma, coefficient C(alpha, delta) d^delta h_gamma
            for (const Monomial& delta : sub_indices(alpha)) {
                Poly dh = hg.diff(delta);
                if (dh.is_zero()) continue;
                GaussianRational c(Rational(multi_binomial(alpha, delta), 1));
                sys.equations[(alpha / delta) * gamma].add(alpha, Monomial(n), dh * c);
            }
        }
    }
    for (auto it = sys.equations.begin(); it != sys.equations.end();)
        it = it->second.is_zero() ? sys.equations.erase(it) : std::next(it);
    return sys;
}

struct SymmetryBasis {
    int n = 1, q = 0, D = 0, M = 0;
    std::vector<DiffOp> elements;  // coefficients polynomial in x and t
};

/// Brute-force path: every unknown b_alpha becomes a generic polynomial of
/// x-degree <= D and t-degree <= M; the determining system turns into a
/// homogeneous linear system over the scalar ansatz coefficients, and the
/// exact nullspace is reassembled into operators. Every returned element
/// is re-verified via the plain commutator [L, Q] = 0.
inline SymmetryBasis solve_polynomial_ansatz(const Schrodinger& s, int q, int D, int M) {
    if (D < 0 || M < 0) throw std::invalid_argument("solve_polynomial_ansatz: D, M >= 0 required");
    const int n = s.n;
    DeterminingSystem sys = generate_determining_system(s, q);

    const std::vector<Monomial> alphas = enumerate_monomials(n, q, 0);
    const std::vector<Monomial> ansatz = enumerate_monomials(n, D, M);
    std::map<Monomial, size_t> alpha_index;
    for (size_t i = 0; i < alphas.size(); ++i) alpha_index[alphas[i]] = i;
    const size_t cols = alphas.size() * ansatz.size();
    auto col = [&](size_t ai, size_t mi) { return ai * ansatz.size() + mi; };

    std::map<std::pair<Monomial, Monomial>, Vec> rows;  // (slot, output monomial) -> row
    for (const auto& [slot, expr] : sys.equations) {
        for (const auto& [key, c] : expr.atoms) {
            const auto& [alpha, beta] = key;
            size_t ai = alpha_index.at(alpha);
            for (size_t mi = 0; mi < ansatz.size(); ++mi) {
                Poly contrib = Poly::monomial(n, ansatz[mi], GaussianRational(1)).diff(beta) * c;
                for (const auto& [nu, cc] : contrib.terms()) {
                    Vec& row = rows[{slot, nu}];
                    if (row.empty()) row.assign(cols, GaussianRational());
                    row[col(ai, mi)] += cc;
                }
            }
        }
    }

    std::vector<Vec> rowvec;
    rowvec.reserve(rows.size());
    for (auto& [k, r] : rows) rowvec.push_back(std::move(r));
    std::vector<Vec> kernel;
    if (rowvec.empty()) {
        for (size_t c = 0; c < cols; ++c) {
            Vec v(cols);
            v[c] = GaussianRational(1);
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = nullspace(Matrix::from_rows(rowvec));
    }

    SymmetryBasis out;
    out.n = n;
    out.q = q;
    out.D = D;
    out.M = M;
    DiffOp l = schrodinger_operator(s);
    for (const Vec& v : kernel) {
        DiffOp op(n);
        for (size_t ai = 0; ai < alphas.size(); ++ai) {
            Poly b(n);
            for (size_t mi = 0; mi < ansatz.size(); ++mi) b.add_term(ansatz[mi], v[col(ai, mi)]);
            op.add_term(alphas[ai], b);
        }
        if (!commutator(l, op).is_zero())
            throw internal_error("solve_polynomial_ansatz: candidate fails [L,Q] = 0");
        out.elements.push_back(std::move(op));
    }
    return out;
}

inline bool is_time_independent(const Schrodinger& s) {
    if (!s.V.is_t_free()) return false;
    for (const auto& a : s.A)
        if (!a.is_t_free()) return false;
    return true;
}

/// Time-independent restriction: the M = 0 ansatz, i.e. the operators
/// commuting with H.
inline SymmetryBasis restrict_time_independent(const Schrodinger& s, int q, int D) {
    if (!is_time_independent(s))
        throw std::invalid_argument(
            "restrict_time_independent: potential and gauge must be time-independent");
    return solve_polynomial_ansatz(s, q, D, 0);
}

/// Readable text form, one equation per line:
/// "d1^2: (i)*dt*b[1] + ... = 0"; unknown b_alpha prints as b[e1,...,en].
inline std::string format_determining_system(const DeterminingSystem& sys) {
    std::string out;
    auto unknown_str = [](const Monomial& a) {
        std::string s = "b[";
        for (int k = 0; k < a.n(); ++k) {
            if (k) s += ",";
            s += std::to_string(a.x[static_cast<size_t>(k)]);
        }
        return s + "]";
    };
    for (auto it = sys.equations.rbegin(); it != sys.equations.rend(); ++it) {
        const auto& [slot, expr] = *it;
        std::string d = format_deriv(slot);
        out += (d.empty() ? std::string("1") : d) + ": ";
        bool first = true;
        for (auto at = expr.atoms.rbegin(); at != expr.atoms.rend(); ++at) {
            const auto& [key, c] = *at;
            if (!first) out += " + ";
            first = false;
            out += "(" + format_poly(c) + ")*";
            std::string dv = format_deriv(key.second);
            if (!dv.empty()) out += dv + "*";
            out += unknown_str(key.first);
        }
        out += " = 0\n";
    }
    return out;
}

}  // namespace schsym
