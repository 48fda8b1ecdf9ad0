#include <catch2/catch_amalgamated.hpp>

#include "schsym/counting.hpp"
#include "schsym/determining.hpp"
#include "testutil.hpp"

#include <utility>

using namespace schsym;
using namespace schsym::testing;

namespace {

const GaussianRational kI = GaussianRational::unit_i();
const GaussianRational kHalf{Rational(1, 2)};

Schrodinger oscillator1d() {
    Schrodinger s = Schrodinger::free_particle(1);
    s.V = Poly::variable(1, 0) * Poly::variable(1, 0);
    return s;
}

/// Substitute the concrete coefficients of Q into a linear expression.
Poly eval_expr(const LinearDiffExpr& e, const DiffOp& q) {
    Poly r(q.n());
    for (const auto& [key, c] : e.atoms) r += c * q.coeff(key.first).diff(key.second);
    return r;
}

}  // namespace

TEST_CASE("determining system of the free particle on the line, first order") {
    DeterminingSystem sys = generate_determining_system(Schrodinger::free_particle(1), 1);

    Monomial a0(1);
    Monomial a1 = Monomial::var(1, 0);
    Monomial d2 = a1 * a1;
    Monomial dt = Monomial::t_var(1);
    Poly one = Poly::constant(1, GaussianRational(1));

    REQUIRE(sys.equations.size() == 3);

    // top slot d1^2: the gradient of the leading coefficient
    const auto& top = sys.equations.at(d2);
    REQUIRE(top.atoms.size() == 1);
    CHECK(top.atoms.at({a1, a1}) == one);

    // middle slot d1: i db1/dt + 1/2 d1^2 b1 + d1 b0
    const auto& mid = sys.equations.at(a1);
    REQUIRE(mid.atoms.size() == 3);
    CHECK(mid.atoms.at({a1, dt}) == Poly::constant(1, kI));
    CHECK(mid.atoms.at({a1, d2}) == Poly::constant(1, kHalf));
    CHECK(mid.atoms.at({a0, a1}) == one);

    // bottom slot 1: i db0/dt + 1/2 d1^2 b0
    const auto& bot = sys.equations.at(a0);
    REQUIRE(bot.atoms.size() == 2);
    CHECK(bot.atoms.at({a0, dt}) == Poly::constant(1, kI));
    CHECK(bot.atoms.at({a0, d2}) == Poly::constant(1, kHalf));
}

TEST_CASE("potential terms enter the determining system") {
    DeterminingSystem sys = generate_determining_system(oscillator1d(), 1);
    Monomial a0(1);
    Monomial a1 = Monomial::var(1, 0);

    // slot 1 pick up -(1/2 V) b1' contributions: d(V/2)/dx1 = x1 from the
    // reordering of b1 d1 against the multiplication operator V/2.
    const auto& bot = sys.equations.at(a0);
    REQUIRE(bot.atoms.count({a1, Monomial(1)}) == 1);
    CHECK(bot.atoms.at({a1, Monomial(1)}) == Poly::variable(1, 0));
}

TEST_CASE("determining system text rendering") {
    std::string text = format_determining_system(
        generate_determining_system(Schrodinger::free_particle(1), 1));
    CHECK(text ==
          "d1^2: (1)*d1*b[1] = 0\n"
          "d1: (1/2)*d1^2*b[1] + (i)*dt*b[1] + (1)*d1*b[0] = 0\n"
          "1: (1/2)*d1^2*b[0] + (i)*dt*b[0] = 0\n");

    std::string text0 = format_determining_system(
        generate_determining_system(Schrodinger::free_particle(1), 0));
    CHECK(text0 ==
          "d1: (1)*d1*b[0] = 0\n"
          "1: (1/2)*d1^2*b[0] + (i)*dt*b[0] = 0\n");
}

TEST_CASE("determining system evaluates to the commutator coefficients") {
    Rng rng(53);
    for (int it = 0; it < 40; ++it) {
        int n = rand_int(rng, 1, 2);
        int q = rand_int(rng, 0, 2);
        Schrodinger s = Schrodinger::free_particle(n);
        s.V = random_poly(rng, n, 2, 1, 2);
        DeterminingSystem sys = generate_determining_system(s, q);

        DiffOp op(n);
        for (const Monomial& alpha : enumerate_monomials(n, q, 0))
            op.add_term(alpha, random_poly(rng, n, 2, 1, 2));

        DiffOp lhs = commutator(schrodinger_operator(s), op);
        for (const auto& [slot, expr] : sys.equations)
            CHECK(eval_expr(expr, op) == lhs.coeff(slot));
        for (const auto& [slot, c] : lhs.terms())
            CHECK(sys.equations.count(slot) == 1);
    }
}

TEST_CASE("free particle symmetries on the line, first order") {
    SymmetryBasis basis = solve_polynomial_ansatz(Schrodinger::free_particle(1), 1, 1, 1);
    CHECK(basis.elements.size() == 3);

    DiffOp boost = DiffOp::from_poly(Poly::variable(1, 0));
    boost.add_term(Monomial::var(1, 0), kI * Poly::t_variable(1));
    std::vector<DiffOp> expected{DiffOp::constant(1, GaussianRational(1)),
                                 DiffOp::momentum(1, 0), boost};
    CHECK(same_span(as_exp(basis.elements), as_exp(expected)));
}

TEST_CASE("free particle symmetries on the line, second order") {
    SymmetryBasis basis = solve_polynomial_ansatz(Schrodinger::free_particle(1), 2, 2, 2);
    CHECK(BigInt(basis.elements.size()) == count_Nhat(1, 2));
}

TEST_CASE("time-independent symmetries saturate the commutant bound") {
    // Free particle in the plane: 1, two momenta, one rotation.
    SymmetryBasis plane = restrict_time_independent(Schrodinger::free_particle(2), 1, 2);
    CHECK(BigInt(plane.elements.size()) == count_Ntilde(2, 1));
    for (const DiffOp& el : plane.elements) CHECK(el.has_t_coefficients() == false);

    // Harmonic oscillator, order 2: only span{1, H} commutes with H;
    // ladder products a^2, (a+)^2 oscillate in time and drop out at M = 0.
    SymmetryBasis osc = restrict_time_independent(oscillator1d(), 2, 3);
    CHECK(osc.elements.size() == 2);

    Schrodinger tdep = Schrodinger::free_particle(1);
    tdep.V = Poly::variable(1, 0) * Poly::t_variable(1);
    CHECK_FALSE(is_time_independent(tdep));
    CHECK(is_time_independent(oscillator1d()));
    CHECK_THROWS_AS(restrict_time_independent(tdep, 1, 1), std::invalid_argument);

    Schrodinger agauge = Schrodinger::free_particle(2);
    agauge.A = {Poly::t_variable(2), Poly(2)};
    CHECK_FALSE(is_time_independent(agauge));
}

TEST_CASE("oscillator ladder symmetries appear once time dependence is allowed") {
    // At q = 1 the full time-dependent count for V = x1^2 matches the free
    // particle: 1 and the two exponential ladders, realized polynomially in
    // cos/sin only through exp branches -- the polynomial-in-t ansatz sees
    // the constant and nothing else at M = 0 ...
    SymmetryBasis m0 = solve_polynomial_ansatz(oscillator1d(), 1, 1, 0);
    CHECK(m0.elements.size() == 1);
    // ... and still nothing new with t powers, since the ladders are not
    // polynomial in t.
    SymmetryBasis m3 = solve_polynomial_ansatz(oscillator1d(), 1, 2, 3);
    CHECK(m3.elements.size() == 1);
}

TEST_CASE("anisotropic quartic potential keeps only trivial low-order symmetries") {
    Schrodinger s = Schrodinger::free_particle(1);
    Poly x = Poly::variable(1, 0);
    s.V = x * x * x * x;
    // D = 4 so that H itself, whose multiplication part is x1^4/2, fits.
    SymmetryBasis basis = solve_polynomial_ansatz(s, 2, 4, 2);
    CHECK(BigInt(basis.elements.size()) <= count_Nhat(1, 2));
    // span{1, H}: the quartic destroys everything except the Hamiltonian.
    CHECK(basis.elements.size() == 2);
}

TEST_CASE("solution spaces grow monotonically with the ansatz caps") {
    Schrodinger s = Schrodinger::free_particle(1);
    size_t prev = 0;
    for (int cap = 0; cap <= 2; ++cap) {
        SymmetryBasis b = solve_polynomial_ansatz(s, 1, cap, cap);
        CHECK(b.elements.size() >= prev);
        prev = b.elements.size();
    }
}

TEST_CASE("the symmetry basis is closed under commutators") {
    Schrodinger s = Schrodinger::free_particle(1);
    DiffOp l = schrodinger_operator(s);
    SymmetryBasis basis = solve_polynomial_ansatz(s, 1, 1, 1);
    for (const DiffOp& a : basis.elements)
        for (const DiffOp& b : basis.elements)
            CHECK(commutator(l, commutator(a, b)).is_zero());
}

TEST_CASE("magnetic field in the symmetric gauge admits verified symmetries") {
    Schrodinger s = Schrodinger::free_particle(2);
    Poly x1 = Poly::variable(2, 0);
    Poly x2 = Poly::variable(2, 1);
    s.A = {-kHalf * x2, kHalf * x1};
    SymmetryBasis basis = solve_polynomial_ansatz(s, 1, 2, 2);
    CHECK(BigInt(basis.elements.size()) <= count_Nhat(2, 1));
    CHECK(basis.elements.size() >= 4);
    // Construction re-verifies [L, Q] = 0 for each element; reaching this
    // point means every candidate passed.
    SUCCEED();
}
