"""State construction, eigenvalues, pairing, and the bare well."""

from fractions import Fraction as F

import pytest

from mijacobi.algebra import AffineExp, EtaPoly, ParamPoly
from mijacobi.spectral import QuasiRat, apply_hamiltonian
from mijacobi.states import (
    DuplicateStatesError,
    NonGenericParametersError,
    State,
    StateTuple,
    StateType,
    eigenvalue,
    is_generic,
    jacobi_poly,
    make_state,
    pairing,
    parse_state,
    pochhammer,
    potential,
    require_generic,
)
from helpers import GENERIC_POINTS

G = ParamPoly.gen_g()
H = ParamPoly.gen_h()
ONE = ParamPoly.const(1)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(G, 0) == ONE

    def test_length_two(self):
        alpha = G  # stands for any symbol
        assert pochhammer(alpha + 1, 2) == G * G + G * 3 + 2

    def test_numeric(self):
        assert pochhammer(G, 3).eval_at(2, 0) == 24
        assert pochhammer(F(2), 3) == 24


class TestJacobi:
    def test_degree_zero(self):
        assert jacobi_poly(0, G, H) == EtaPoly((ONE,))

    def test_degree_one(self):
        # (alpha+1) - (alpha+beta+2)(1-eta)/2, expanded term by term
        got = jacobi_poly(1, G, H)
        const = (G + 1) - (G + H + 2).scale(F(1, 2))
        lin = (G + H + 2).scale(F(1, 2))
        assert got == EtaPoly((const, lin))

    def test_legendre_case(self):
        got = jacobi_poly(2, F(0), F(0))
        assert got == EtaPoly((F(-1, 2), F(0), F(3, 2)))

    def test_degree_exact_and_leading_nonzero(self):
        half = F(1, 2)
        for n in range(7):
            for alpha, beta in [(G - half, H - half), (G - half, half - H),
                                (half - G, H - half), (half - G, half - H)]:
                p = jacobi_poly(n, alpha, beta)
                assert p.degree == n
                assert p.lc  # nonzero ParamPoly


class TestMakeState:
    def test_type_i_index_zero(self):
        q = make_state(State(StateType.I, 0))
        assert q.expS == AffineExp(1, 0, 0)
        assert q.expC == AffineExp(0, -1, 1)
        assert q.poly == EtaPoly((ONE,))

    def test_bound_index_zero(self):
        q = make_state(State(StateType.N, 0))
        assert q.expS == AffineExp(1, 0, 0)
        assert q.expC == AffineExp(0, 1, 0)
        assert q.poly == EtaPoly((ONE,))

    def test_type_iii_poly(self):
        q = make_state(State(StateType.III, 1))
        half = F(1, 2)
        assert q.expS == AffineExp(-1, 0, 1)
        assert q.expC == AffineExp(0, -1, 1)
        assert q.poly == jacobi_poly(1, half - G, half - H)

    def test_instantiated(self):
        gv, hv = F(37, 10), F(52, 7)
        q = make_state(State(StateType.II, 2), inst=(gv, hv))
        assert q.expS == AffineExp.const(1 - gv)
        assert q.expC == AffineExp.const(hv)
        sym = make_state(State(StateType.II, 2))
        assert q.poly == sym.poly.instantiate(gv, hv)


class TestEigenvalue:
    def test_ground_state(self):
        assert eigenvalue(State(StateType.N, 0)) == ParamPoly()

    def test_type_ii_formula(self):
        for v in range(4):
            expected = ((G - (v + F(1, 2))) * (H + (v + F(1, 2)))).scale(-4)
            assert eigenvalue(State(StateType.II, v)) == expected

    def test_type_iii_formula(self):
        for v in range(4):
            expected = ((G + H - (v + 1)) * F(v + 1)).scale(-4)
            assert eigenvalue(State(StateType.III, v)) == expected

    def test_ii_is_i_at_negated_index(self):
        # type II eigenvalue equals the type I formula at index -(v+1)
        for v in range(9):
            w = F(-(v + 1))
            via_i = ((G + (w + F(1, 2))) * (H - (w + F(1, 2)))).scale(-4)
            assert eigenvalue(State(StateType.II, v)) == via_i

    def test_iii_is_bound_at_negated_index(self):
        # type III eigenvalue equals 4n(n+g+h) at n = -(v+1)
        for v in range(9):
            n = F(-(v + 1))
            via_n = ((G + H + n) * n).scale(4)
            assert eigenvalue(State(StateType.III, v)) == via_n


PAIRING_TABLE = {
    ("I", "I"): 1, ("I", "II"): -1, ("I", "III"): 0, ("I", "N"): 0,
    ("II", "I"): -1, ("II", "II"): 1, ("II", "III"): 0, ("II", "N"): 0,
    ("III", "I"): 0, ("III", "II"): 0, ("III", "III"): 1, ("III", "N"): -1,
    ("N", "I"): 0, ("N", "II"): 0, ("N", "III"): -1, ("N", "N"): 1,
}


def test_pairing_table():
    for (a, b), want in PAIRING_TABLE.items():
        assert pairing(StateType(a), StateType(b)) == want


class TestPotential:
    def test_sin_singularity_vanishes_at_g_zero(self):
        u = potential(inst=(F(0), F(5, 2)))
        # the (1-eta) pole cancels when g(g-1) = 0, so eta = 1 is regular
        assert u.den.eval_at(F(1)) != 0
        full = potential(inst=(F(3), F(5, 2)))
        assert full.den.eval_at(F(1)) == 0  # generic g keeps the pole

    def test_symmetric_when_g_equals_h(self):
        u = potential(inst=(F(7, 3), F(7, 3)))
        flipped = EtaPoly(tuple(c if k % 2 == 0 else -c
                                for k, c in enumerate(u.num.coeffs)))
        assert flipped == u.num and u.den == EtaPoly(
            tuple(c if k % 2 == 0 else -c for k, c in enumerate(u.den.coeffs)))

    def test_two_route_evaluation(self):
        gv, hv, eta = F(2), F(3), F(0)
        u = potential(inst=(gv, hv))
        via_eta = u.eval_eta(eta)
        s2, c2 = (1 - eta) / 2, (1 + eta) / 2
        via_trig = gv * (gv - 1) / s2 + hv * (hv - 1) / c2 - (gv + hv) ** 2
        assert via_eta == via_trig

    def test_two_route_random(self):
        gv, hv = F(37, 10), F(52, 7)
        u = potential(inst=(gv, hv))
        for eta in (F(1, 3), F(-2, 5), F(9, 11)):
            s2, c2 = (1 - eta) / 2, (1 + eta) / 2
            via_trig = gv * (gv - 1) / s2 + hv * (hv - 1) / c2 - (gv + hv) ** 2
            assert u.eval_eta(eta) == via_trig


class TestSchroedinger:
    def test_all_families_solve_the_equation(self):
        gv, hv = GENERIC_POINTS[0]
        u = potential(inst=(gv, hv))
        for st in StateType:
            for v in range(5):
                s = State(st, v)
                q = make_state(s, inst=(gv, hv))
                f = QuasiRat.make(q.expS, q.expC, q.poly, EtaPoly((F(1),)))
                ev = eigenvalue(s).eval_at(gv, hv)
                assert apply_hamiltonian(u, f).sub(f.scale(ev)).is_zero(), s

    def test_symbolically_for_small_indices(self):
        u = potential()
        for st in (StateType.I, StateType.N):
            for v in range(3):
                s = State(st, v)
                q = make_state(s)
                f = QuasiRat.make(q.expS, q.expC, q.poly, EtaPoly((F(1),)))
                ev = eigenvalue(s)
                assert apply_hamiltonian(u, f).sub(f.scale(ev)).is_zero(), s


class TestTuplesAndGenericity:
    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateStatesError):
            StateTuple([State(StateType.I, 1), State(StateType.I, 1)])

    def test_symbolic_construction_never_guards(self):
        # no parameter constraint is enforced at the symbolic level
        t = StateTuple([State(StateType.I, 1), State(StateType.II, 2)])
        assert len(t) == 2

    def test_generic_point_validation(self):
        assert is_generic(F(37, 10), F(52, 7))
        with pytest.raises(NonGenericParametersError):
            require_generic(F(3, 2), F(52, 7))  # half-odd integer g
        with pytest.raises(NonGenericParametersError):
            require_generic(F(7, 3), F(2, 3))  # g + h integral
        with pytest.raises(NonGenericParametersError):
            require_generic(F(7, 3), F(1, 3))  # g - h integral

    def test_parse(self):
        s = parse_state("III4")
        assert s == State(StateType.III, 4)
        with pytest.raises(ValueError):
            parse_state("IV2")

    def test_indices_and_sorted(self):
        t = StateTuple([parse_state(x) for x in ("N1", "I2", "III0", "I0")])
        assert t.indices(StateType.I) == [0, 2]
        assert t.sorted().spec() == "I0,I2,III0,N1"
