#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "schsym/monomial.hpp"
#include "schsym/poly.hpp"

namespace schsym {

/// Linear differential operator in normal form: a sum of terms
/// f_alpha(x, t) * d^alpha with every coefficient written to the left of
/// the derivatives. The multi-index alpha reuses Monomial, its x part
/// counting x-derivatives and its t slot counting time derivatives.
class DiffOp {
public:
    using TermMap = std::map<Monomial, Poly>;

    DiffOp() = default;
    explicit DiffOp(int n) : n_(n) {}

    static DiffOp from_poly(const Poly& f) {
        DiffOp op(f.n());
        op.add_term(Monomial(f.n()), f);
        return op;
    }
    static DiffOp constant(int n, const GaussianRational& c) {
        return from_poly(Poly::constant(n, c));
    }
    /// d/dx_a (0-based).
    static DiffOp derivative(int n, int a) {
        DiffOp op(n);
        op.add_term(Monomial::var(n, a), Poly::constant(n, GaussianRational(1)));
        return op;
    }
    static DiffOp t_derivative(int n) {
        DiffOp op(n);
        op.add_term(Monomial::t_var(n), Poly::constant(n, GaussianRational(1)));
        return op;
    }
    /// Momentum p_a = -i d/dx_a.
    static DiffOp momentum(int n, int a) {
        DiffOp op(n);
        op.add_term(Monomial::var(n, a), Poly::constant(n, -GaussianRational::unit_i()));
        return op;
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly coeff(const Monomial& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Poly(n_) : it->second;
    }

    /// Highest total derivative order (t derivatives included).
    int order() const {
        int d = -1;
        for (const auto& [a, f] : terms_) d = std::max(d, a.degree());
        return d;
    }
    int x_order() const {
        int d = -1;
        for (const auto& [a, f] : terms_) d = std::max(d, a.x_degree());
        return d;
    }
    bool has_t_derivatives() const {
        for (const auto& [a, f] : terms_)
            if (a.t != 0) return true;
        return false;
    }
    bool has_t_coefficients() const {
        for (const auto& [a, f] : terms_)
            if (!f.is_t_free()) return true;
        return false;
    }

    void add_term(const Monomial& alpha, const Poly& f) {
        if (alpha.n() != n_ || f.n() != n_)
            throw std::invalid_argument("DiffOp: arity mismatch");
        if (f.is_zero()) return;
        auto it = terms_.find(alpha);
        if (it == terms_.end()) {
            terms_.emplace(alpha, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffOp& operator+=(const DiffOp& o) {
        check(o);
        for (const auto& [a, f] : o.terms_) add_term(a, f);
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) {
        check(o);
        for (const auto& [a, f] : o.terms_) add_term(a, -f);
        return *this;
    }
    DiffOp& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, f] : terms_) f *= s;
        return *this;
    }
    DiffOp operator-() const {
        DiffOp r = *this;
        for (auto& [a, f] : r.terms_) f = -f;
        return r;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const GaussianRational& s) { return a *= s; }
    friend DiffOp operator*(const GaussianRational& s, DiffOp a) { return a *= s; }

    /// Composition. Normal order is restored with the Leibniz rule:
    /// d^a (g .) = sum_{g' <= a} C(a, g') (d^g' g) d^(a - g').
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
        a.check(b);
        DiffOp r(a.n_);
        for (const auto& [al, f] : a.terms_) {
            for (const auto& [be, g] : b.terms_) {
                for (const Monomial& ga : sub_indices(al)) {
                    Poly dg = g.diff(ga);
                    if (dg.is_zero()) continue;
                    GaussianRational c(Rational(multi_binomial(al, ga), 1));
                    r.add_term((al / ga) * be, f * dg * c);
                }
            }
        }
        return r;
    }
    DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }

    /// Operator applied to a function.
    Poly apply(const Poly& g) const {
        if (g.n() != n_) throw std::invalid_argument("DiffOp: arity mismatch");
        Poly r(n_);
        for (const auto& [a, f] : terms_) r += f * g.diff(a);
        return r;
    }

    /// d/dt of every coefficient, derivative structure untouched.
    DiffOp diff_t_coeffs() const {
        DiffOp r(n_);
        for (const auto& [a, f] : terms_) r.add_term(a, f.diff_t());
        return r;
    }

    friend DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }
    friend DiffOp anticommutator(const DiffOp& a, const DiffOp& b) { return a * b + b * a; }

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

private:
    void check(const DiffOp& o) const {
        if (n_ != o.n_) throw std::invalid_argument("DiffOp: mixed variable counts");
    }

    int n_ = 0;
    TermMap terms_;
};

}  // namespace schsym
