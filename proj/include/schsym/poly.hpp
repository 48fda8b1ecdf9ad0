#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schsym/monomial.hpp"
#include "schsym/rational.hpp"

namespace schsym {

/// Polynomial in x_1..x_n and t over the Gaussian rationals. Stored term
/// by term with no explicit zero coefficients; the variable count is fixed
/// at construction and mixed-arity arithmetic throws.
class Poly {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Poly() = default;
    explicit Poly(int n) : n_(n) {}
    Poly(int n, const GaussianRational& c) : n_(n) {
        if (!c.is_zero()) terms_[Monomial(n)] = c;
    }

    static Poly constant(int n, const GaussianRational& c) { return Poly(n, c); }
    static Poly variable(int n, int a) {
        Poly p(n);
        p.terms_[Monomial::var(n, a)] = GaussianRational(1);
        return p;
    }
    static Poly t_variable(int n) {
        Poly p(n);
        p.terms_[Monomial::t_var(n)] = GaussianRational(1);
        return p;
    }
    static Poly monomial(int n, const Monomial& m, const GaussianRational& c) {
        Poly p(n);
        if (m.n() != n) throw std::invalid_argument("Poly: monomial arity mismatch");
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    bool is_t_free() const {
        for (const auto& [m, c] : terms_)
            if (m.t != 0) return false;
        return true;
    }

    GaussianRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    GaussianRational constant_term() const { return coeff(Monomial(n_)); }

    int x_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
        return d;  // -1 for the zero polynomial
    }
    int t_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.t);
        return d;
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (m.n() != n_) throw std::invalid_argument("Poly: term arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
    friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned k) const {
        Poly r(n_, GaussianRational(1));
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// Partial derivative with respect to x_a (0-based).
    Poly diff_x(int a) const {
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            int e = m.x.at(static_cast<size_t>(a));
            if (e == 0) continue;
            Monomial d = m;
            d.x[static_cast<size_t>(a)] = e - 1;
            r.add_term(d, c * GaussianRational(e));
        }
        return r;
    }
    Poly diff_t() const {
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m.t == 0) continue;
            Monomial d = m;
            d.t = m.t - 1;
            r.add_term(d, c * GaussianRational(m.t));
        }
        return r;
    }
    /// Iterated derivative d^beta, where beta.t counts d/dt applications.
    Poly diff(const Monomial& beta) const {
        Poly r = *this;
        for (int a = 0; a < n_; ++a)
            for (int k = 0; k < beta.x[static_cast<size_t>(a)]; ++k) r = r.diff_x(a);
        for (int k = 0; k < beta.t; ++k) r = r.diff_t();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void check(const Poly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Poly: mixed variable counts");
    }

    int n_ = 0;
    TermMap terms_;
};

}  // namespace schsym
