#pragma once

#include <stdexcept>
#include <vector>

#include "schsym/diffop.hpp"
#include "schsym/poly.hpp"

namespace schsym {

/// Problem data for L = i*dt - 1/2*((p - e*A)^2 + V) with p_a = -i d/dx_a.
/// Note the 1/2 multiplies the potential as well, so V = x1^2 gives the
/// harmonic term (1/2) x1^2 in the Hamiltonian.
struct Schrodinger {
    int n = 1;
    Poly V;
    std::vector<Poly> A;       // vector potential; empty means A = 0
    GaussianRational charge = GaussianRational(1);  // e

    static Schrodinger free_particle(int n) {
        Schrodinger s;
        s.n = n;
        s.V = Poly(n);
        return s;
    }
};

/// H = 1/2 ((p - e*A)^2 + V).
inline DiffOp hamiltonian(const Schrodinger& s) {
    if (!s.A.empty() && static_cast<int>(s.A.size()) != s.n)
        throw std::invalid_argument("hamiltonian: vector potential needs one component per x");
    if (s.V.n() != s.n) throw std::invalid_argument("hamiltonian: potential arity mismatch");
    DiffOp h(s.n);
    for (int a = 0; a < s.n; ++a) {
        DiffOp pa = DiffOp::momentum(s.n, a);
        if (!s.A.empty() && !s.A[static_cast<size_t>(a)].is_zero())
            pa -= DiffOp::from_poly(s.A[static_cast<size_t>(a)] * s.charge);
        h += pa * pa;
    }
    h += DiffOp::from_poly(s.V);
    h *= GaussianRational(Rational(1, 2));
    return h;
}

/// L = i*dt - H.
inline DiffOp schrodinger_operator(const Schrodinger& s) {
    return GaussianRational::unit_i() * DiffOp::t_derivative(s.n) - hamiltonian(s);
}

}  // namespace schsym
