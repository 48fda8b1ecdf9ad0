#pragma once

#include <utility>
#include <vector>

#include "schsym/rational.hpp"

namespace schsym {

/// Dense univariate polynomial over the Gaussian rationals (variable "s").
/// Coefficient k of the stored vector multiplies s^k; no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<GaussianRational> cs) : c_(std::move(cs)) { trim(); }
    UPoly(std::initializer_list<GaussianRational> cs) : c_(cs) { trim(); }
    static UPoly constant(const GaussianRational& a) { return UPoly({a}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    GaussianRational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)]
                                                           : GaussianRational();
    }
    GaussianRational leading() const { return c_.empty() ? GaussianRational() : c_.back(); }

    GaussianRational eval(const GaussianRational& s) const {
        GaussianRational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
        return acc;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const GaussianRational& s) {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const GaussianRational& s) { return a *= s; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Synthetic division by (s - r). Returns {quotient, remainder}.
    std::pair<UPoly, GaussianRational> deflate(const GaussianRational& r) const {
        if (c_.empty()) return {UPoly{}, GaussianRational()};
        std::vector<GaussianRational> q(c_.size() - 1);
        GaussianRational carry = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) {
            if (i < q.size()) q[i] = carry;
            carry = c_[i] + carry * r;
        }
        return {UPoly(std::move(q)), carry};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GaussianRational> c_;
};

/// p(s) = s^d, d = degree (the zero matrix counts as nilpotent of size 0).
inline bool is_power_of_s(const UPoly& p) {
    if (p.is_zero()) return false;
    for (int k = 0; k < p.degree(); ++k)
        if (!p.coeff(k).is_zero()) return false;
    return p.leading() == GaussianRational(1);
}

namespace detail {

struct GaussianInt {
    BigInt re, im;
    BigInt norm() const { return re * re + im * im; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool divides(const GaussianInt& z) const {
        BigInt nn = norm();
        if (nn == 0) return z.re == 0 && z.im == 0;
        // z / this = z * conj(this) / norm(this)
        BigInt pr = z.re * re + z.im * im;
        BigInt pi = z.im * re - z.re * im;
        return pr % nn == 0 && pi % nn == 0;
    }
};

/// First-quadrant representatives (a >= 0, b >= 0) of every associate
/// class of Gaussian-integer divisors of z. Assumes z != 0.
inline std::vector<GaussianInt> gaussian_divisors(const GaussianInt& z) {
    std::vector<GaussianInt> out;
    BigInt N = z.norm();
    std::vector<BigInt> norm_divs;
    for (BigInt k = 1; k * k <= N; ++k) {
        if (N % k != 0) continue;
        norm_divs.push_back(k);
        if (k * k != N) norm_divs.push_back(N / k);
    }
    for (const BigInt& k : norm_divs) {
        for (BigInt a = 0; a * a <= k; ++a) {
            BigInt b2 = k - a * a;
            BigInt b = boost::multiprecision::sqrt(b2);
            if (b * b != b2) continue;
            GaussianInt d{a, b};
            if (d.divides(z)) out.push_back(d);
            if (a != b) {
                GaussianInt e{b, a};
                if (e.divides(z)) out.push_back(e);
            }
        }
    }
    return out;
}

}  // namespace detail

/// All Gaussian-rational roots of p with multiplicities, plus the residual
/// factor with no such roots left. Rational-root search lifted to Z[i]:
/// after clearing denominators, any root num/den has num dividing the
/// constant term and den dividing the leading term (as Gaussian integers).
inline std::pair<std::vector<std::pair<GaussianRational, int>>, UPoly> gaussian_roots(
    const UPoly& p) {
    std::vector<std::pair<GaussianRational, int>> roots;
    UPoly rem = p;
    if (rem.is_zero() || rem.degree() == 0) return {roots, rem};

    // roots at the origin
    int k0 = 0;
    while (!rem.is_zero() && rem.coeff(0).is_zero()) {
        auto [q, r] = rem.deflate(GaussianRational());
        rem = q;
        ++k0;
    }
    if (k0 > 0) roots.emplace_back(GaussianRational(), k0);

    const GaussianRational units[4] = {GaussianRational(1), GaussianRational::unit_i(),
                                       GaussianRational(-1), -GaussianRational::unit_i()};
    bool progress = true;
    while (progress && rem.degree() >= 1) {
        progress = false;
        // clear denominators
        BigInt lcm = 1;
        for (const auto& c : rem.coeffs()) {
            lcm = boost::multiprecision::lcm(lcm, denominator_of(c.re));
            lcm = boost::multiprecision::lcm(lcm, denominator_of(c.im));
        }
        auto as_gi = [&](const GaussianRational& c) {
            return detail::GaussianInt{numerator_of(c.re) * (lcm / denominator_of(c.re)),
                                       numerator_of(c.im) * (lcm / denominator_of(c.im))};
        };
        detail::GaussianInt a0 = as_gi(rem.coeff(0));
        detail::GaussianInt ad = as_gi(rem.leading());
        auto nums = detail::gaussian_divisors(a0);
        auto dens = detail::gaussian_divisors(ad);
        for (const auto& num : nums) {
            for (const auto& den : dens) {
                if (den.norm() == 0) continue;
                GaussianRational base(Rational(num.re, 1), Rational(num.im, 1));
                GaussianRational dinv =
                    GaussianRational(Rational(den.re, 1), Rational(den.im, 1)).inverse();
                for (const auto& u : units) {
                    GaussianRational cand = base * dinv * u;
                    if (!rem.eval(cand).is_zero()) continue;
                    int mult = 0;
                    while (true) {
                        auto [q, r] = rem.deflate(cand);
                        if (!r.is_zero()) break;
                        rem = q;
                        ++mult;
                        if (rem.degree() < 1) break;
                    }
                    roots.emplace_back(cand, mult);
                    progress = true;
                    break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    return {roots, rem};
}

}  // namespace schsym
