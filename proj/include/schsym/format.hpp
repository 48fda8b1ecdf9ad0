#pragma once

#include <string>

#include "schsym/diffop.hpp"
#include "schsym/exppoly.hpp"
#include "schsym/poly.hpp"
#include "schsym/rational.hpp"
#include "schsym/upoly.hpp"

namespace schsym {

inline std::string format_rational(const Rational& r) {
    BigInt num = numerator_of(r), den = denominator_of(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

/// Sign used for "+/-" joining: negative when re < 0, or re = 0 and im < 0.
inline bool print_negative(const GaussianRational& c) {
    if (c.re != 0) return c.re < 0;
    return c.im < 0;
}

/// Scalar with print_negative(c) == false.
inline std::string format_positive_scalar(const GaussianRational& c) {
    if (c.is_real()) return format_rational(c.re);
    if (c.re == 0) {
        if (c.im == 1) return "i";
        return format_rational(c.im) + "*i";
    }
    std::string s = "(" + format_rational(c.re);
    if (c.im < 0) {
        Rational a = -c.im;
        s += a == 1 ? "-i" : "-" + format_rational(a) + "*i";
    } else {
        s += c.im == 1 ? "+i" : "+" + format_rational(c.im) + "*i";
    }
    return s + ")";
}

}  // namespace detail

inline std::string format_scalar(const GaussianRational& c) {
    if (detail::print_negative(c)) return "-" + detail::format_positive_scalar(-c);
    return detail::format_positive_scalar(c);
}

/// "x1^2*x2*t^3"; empty string for the unit monomial.
inline std::string format_monomial(const Monomial& m) {
    std::string s;
    auto app = [&](const std::string& v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (int a = 0; a < m.n(); ++a) app("x" + std::to_string(a + 1), m.x[static_cast<size_t>(a)]);
    app("t", m.t);
    return s.empty() ? "1" : s;
}

/// Terms descending in the monomial order, joined with " + " / " - ";
/// parses back to the same Poly.
inline std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = detail::print_negative(c);
        GaussianRational a = neg ? -c : c;
        std::string mono = format_monomial(m);
        std::string body;
        if (m.is_one()) {
            body = detail::format_positive_scalar(a);
        } else if (a == GaussianRational(1)) {
            body = mono;
        } else {
            body = detail::format_positive_scalar(a) + "*" + mono;
        }
        if (first) {
            s = neg ? "-" + body : body;
            first = false;
        } else {
            s += (neg ? " - " : " + ") + body;
        }
    }
    return s;
}

/// "d1^2*d2*dt"; empty for the identity (no derivatives).
inline std::string format_deriv(const Monomial& a) {
    std::string s;
    auto app = [&](const std::string& v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (int k = 0; k < a.n(); ++k) app("d" + std::to_string(k + 1), a.x[static_cast<size_t>(k)]);
    app("dt", a.t);
    return s;
}

/// "(-2*i*x1)*d1 + (-i)": coefficients always parenthesized, terms in
/// descending derivative order.
inline std::string format_diffop(const DiffOp& q) {
    if (q.is_zero()) return "0";
    std::string s;
    const auto& terms = q.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [a, f] = *it;
        if (!s.empty()) s += " + ";
        s += "(" + format_poly(f) + ")";
        std::string d = format_deriv(a);
        if (!d.empty()) s += "*" + d;
    }
    return s;
}

/// Univariate polynomial in "s", highest power first: "s^2 + 1".
inline std::string format_upoly(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        GaussianRational c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = detail::print_negative(c);
        GaussianRational a = neg ? -c : c;
        std::string body;
        std::string var = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
        if (var.empty()) {
            body = detail::format_positive_scalar(a);
        } else if (a == GaussianRational(1)) {
            body = var;
        } else {
            body = detail::format_positive_scalar(a) + "*" + var;
        }
        if (s.empty()) {
            s = neg ? "-" + body : body;
        } else {
            s += (neg ? " - " : " + ") + body;
        }
    }
    return s;
}

/// Branches in scalar order; the lambda = 0 branch prints bare, others as
/// "exp(<lambda>*t)*( ... )".
inline std::string format_exppoly(const ExpPolyOp& r) {
    if (r.is_zero()) return "0";
    std::string s;
    for (const auto& [lambda, b] : r.branches()) {
        if (!s.empty()) s += " + ";
        if (lambda.is_zero()) {
            s += format_diffop(b);
        } else {
            s += "exp(" + format_scalar(lambda) + "*t)*( " + format_diffop(b) + " )";
        }
    }
    return s;
}

}  // namespace schsym
