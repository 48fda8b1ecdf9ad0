#pragma once

#include <map>
#include <stdexcept>

#include "schsym/diffop.hpp"
#include "schsym/rational.hpp"

namespace schsym {

/// Operator of the form sum_k exp(lambda_k * t) * B_k with distinct
/// Gaussian-rational lambda_k and DiffOp branches B_k (polynomial
/// coefficients in x and t). The lambda = 0 branch is the plain
/// polynomial part.
class ExpPolyOp {
public:
    using BranchMap = std::map<GaussianRational, DiffOp, GaussianLess>;

    ExpPolyOp() = default;
    explicit ExpPolyOp(int n) : n_(n) {}
    static ExpPolyOp from_diffop(const DiffOp& b) {
        ExpPolyOp r(b.n());
        r.add_branch(GaussianRational(), b);
        return r;
    }

    int n() const { return n_; }
    const BranchMap& branches() const { return branches_; }
    bool is_zero() const { return branches_.empty(); }

    DiffOp branch(const GaussianRational& lambda) const {
        auto it = branches_.find(lambda);
        return it == branches_.end() ? DiffOp(n_) : it->second;
    }

    void add_branch(const GaussianRational& lambda, const DiffOp& b) {
        if (b.n() != n_) throw std::invalid_argument("ExpPolyOp: arity mismatch");
        if (b.is_zero()) return;
        auto it = branches_.find(lambda);
        if (it == branches_.end()) {
            branches_.emplace(lambda, b);
        } else {
            it->second += b;
            if (it->second.is_zero()) branches_.erase(it);
        }
    }

    ExpPolyOp& operator+=(const ExpPolyOp& o) {
        check(o);
        for (const auto& [l, b] : o.branches_) add_branch(l, b);
        return *this;
    }
    ExpPolyOp& operator-=(const ExpPolyOp& o) {
        check(o);
        for (const auto& [l, b] : o.branches_) add_branch(l, -b);
        return *this;
    }
    ExpPolyOp& operator*=(const GaussianRational& s) {
        if (s.is_zero()) {
            branches_.clear();
            return *this;
        }
        for (auto& [l, b] : branches_) b *= s;
        return *this;
    }
    friend ExpPolyOp operator+(ExpPolyOp a, const ExpPolyOp& b) { return a += b; }
    friend ExpPolyOp operator-(ExpPolyOp a, const ExpPolyOp& b) { return a -= b; }
    friend ExpPolyOp operator*(const GaussianRational& s, ExpPolyOp a) { return a *= s; }

    /// d/dt: each branch maps to lambda * B + dB/dt.
    ExpPolyOp time_derivative() const {
        ExpPolyOp r(n_);
        for (const auto& [l, b] : branches_) r.add_branch(l, l * b + b.diff_t_coeffs());
        return r;
    }

    friend bool operator==(const ExpPolyOp& a, const ExpPolyOp& b) {
        return a.n_ == b.n_ && a.branches_ == b.branches_;
    }

private:
    void check(const ExpPolyOp& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ExpPolyOp: mixed variable counts");
    }

    int n_ = 0;
    BranchMap branches_;
};

/// [h, R] computed branch by branch; requires h free of t in both
/// derivatives and coefficients so it commutes with exp(lambda t).
inline ExpPolyOp exp_commutator(const DiffOp& h, const ExpPolyOp& r) {
    if (h.has_t_derivatives() || h.has_t_coefficients())
        throw std::invalid_argument("exp_commutator: time-dependent operator");
    ExpPolyOp out(r.n());
    for (const auto& [l, b] : r.branches()) out.add_branch(l, commutator(h, b));
    return out;
}

/// Symmetry condition for L = i*dt - h: i * dR/dt - [h, R] = 0.
inline ExpPolyOp symmetry_defect(const DiffOp& h, const ExpPolyOp& r) {
    return GaussianRational::unit_i() * r.time_derivative() - exp_commutator(h, r);
}

inline bool is_symmetry(const DiffOp& h, const ExpPolyOp& r) {
    return symmetry_defect(h, r).is_zero();
}

inline bool is_symmetry(const DiffOp& h, const DiffOp& q) {
    return is_symmetry(h, ExpPolyOp::from_diffop(q));
}

}  // namespace schsym
