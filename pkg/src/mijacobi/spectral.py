"""Deformed Hamiltonians, exact eigenfunction checks, and permitted spectra.

Deleting nothing, the well U has bound states phi_n with E_n = 4n(n+g+h).
A tuple T of states deforms it to

    U_T = U - 2 (log W[T])'' ,

a quotient of eta-polynomials once (log W)'' is expressed through the
canonical form W = s^a c^b P(eta):

    (log W)'' = 4 (P'' P - P'^2-part) / ((1-eta^2) P^2)

computed with the same exact differentiation rule used for Wronskians.  The
ratios W[T, phi_n]/W[T] remain eigenfunctions with unchanged eigenvalue E_n,
and deleting a type III member with index m from the numerator instead
produces an extra eigenstate with E_{-m-1} = -4(m+1)(g+h-m-1).  Which labels
survive is read off the first Maya diagram: left white beads give the extra
levels, right black beads the deleted bound levels.

Everything here is exact; no tolerances appear anywhere.  Hamiltonian
applications default to an instantiated generic rational point because fully
symbolic quotient arithmetic is only cheap for very small tuples.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AffineExp,
    EtaPoly,
    ONE_MINUS_ETA_SQ,
    _coeff_div,
    _u_gcd,
    sturm_count,
    _F0,
    _F1,
)
from .states import (
    DEFAULT_GENERIC_POINT,
    State,
    StateType,
    as_state_tuple,
    eigenvalue,
    make_state,
    potential,
    require_generic,
)
from .wronskian import RawQuasi, _half_split, differentiate, wronskian


def _eta_monomial(c, k):
    return EtaPoly((_F0,) * k + (c,))


def _eta_mod(a, b):
    r = a
    while r and r.degree >= b.degree:
        f = _coeff_div(r.lc, b.lc)
        r = r - b * _eta_monomial(f, r.degree - b.degree)
    return r


def _eta_gcd_field(a, b):
    """Monic gcd of two eta-polynomials over the coefficient field."""
    if a.degree <= 0 or b.degree <= 0:
        return EtaPoly.const(_F1)
    if all(isinstance(c, Fraction) for c in a.coeffs) and \
            all(isinstance(c, Fraction) for c in b.coeffs):
        g = _u_gcd(list(a.coeffs), list(b.coeffs))
        return EtaPoly(g)
    while b:
        a, b = b, _eta_mod(a, b)
    if a.degree > 0:
        inv = _coeff_div(_F1, a.lc)
        a = a.scale(inv)
        return a
    return EtaPoly.const(_F1)


@dataclass(frozen=True)
class QuasiRat:
    """(sin x)^expS (cos x)^expC * num(eta)/den(eta), reduced.

    Reduced means gcd(num, den) is constant and den has leading coefficient
    1 over the coefficient field.  Construct through make(), which enforces
    this.
    """

    expS: AffineExp
    expC: AffineExp
    num: EtaPoly
    den: EtaPoly

    @classmethod
    def make(cls, expS, expC, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(expS, expC, EtaPoly.zero(), EtaPoly.const(_F1))
        g = _eta_gcd_field(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if not (isinstance(lc, Fraction) and lc == 1):
            inv = _coeff_div(_F1, lc)
            num, den = num.scale(inv), den.scale(inv)
        return cls(expS, expC, num, den)

    def is_zero(self):
        return not self.num

    # -- exponent alignment --------------------------------------------------
    # Sums only make sense when the exponents differ by even integers; the
    # higher side then folds sin^2 = (1-eta)/2 or cos^2 = (1+eta)/2 factors
    # into its numerator.

    @staticmethod
    def _fold_factors(ds, dc):
        out = EtaPoly.const(_F1)
        half = Fraction(1, 2)
        for _ in range(ds // 2):
            out = out * EtaPoly((half, -half))
        for _ in range(dc // 2):
            out = out * EtaPoly((half, half))
        return out

    def _aligned(self, other):
        ds = self.expS - other.expS
        dc = self.expC - other.expC
        if not (ds.is_constant and dc.is_constant):
            raise ValueError("incompatible exponents: %s vs %s" % (self.expS, other.expS))
        ds, dc = ds.c0, dc.c0
        if ds.denominator != 1 or dc.denominator != 1 or ds % 2 or dc % 2:
            raise ValueError("exponent difference must be even integers")
        ds, dc = int(ds), int(dc)
        na, nb = self.num, other.num
        if ds > 0:
            na = na * self._fold_factors(ds, 0)
        elif ds < 0:
            nb = nb * self._fold_factors(-ds, 0)
        if dc > 0:
            na = na * self._fold_factors(0, dc)
        elif dc < 0:
            nb = nb * self._fold_factors(0, -dc)
        expS = self.expS if ds <= 0 else other.expS
        expC = self.expC if dc <= 0 else other.expC
        return na, nb, expS, expC

    def add(self, other):
        na, nb, expS, expC = self._aligned(other)
        return QuasiRat.make(expS, expC,
                             na * other.den + nb * self.den,
                             self.den * other.den)

    def sub(self, other):
        return self.add(other.scale(-1))

    def mul(self, other):
        return QuasiRat.make(self.expS + other.expS, self.expC + other.expC,
                             self.num * other.num, self.den * other.den)

    def scale(self, c):
        return QuasiRat.make(self.expS, self.expC, self.num.scale(c), self.den)

    def shift_params(self, dg, dh):
        return QuasiRat.make(self.expS.shifted(dg, dh), self.expC.shifted(dg, dh),
                             self.num.shift_params(dg, dh),
                             self.den.shift_params(dg, dh))

    def eval_eta(self, v):
        d = self.den.eval_at(v)
        if not d:
            raise ZeroDivisionError("denominator vanishes at eta=%s" % v)
        return self.num.eval_at(v) / d

    def __str__(self):
        return "s^(%s) c^(%s) [%s] / [%s]" % (self.expS, self.expC, self.num, self.den)


def differentiate_rat(f):
    """One x-derivative of a QuasiRat (same rule as for quasi-polynomials,
    with the quotient rule for the eta-part)."""
    c0, c1 = _half_split(f.expS, f.expC)
    mult = EtaPoly((c0, c1))
    num = mult * (f.num * f.den) - ONE_MINUS_ETA_SQ * (
        f.num.deriv() * f.den - f.num * f.den.deriv())
    return QuasiRat.make(f.expS - 1, f.expC - 1, num, f.den * f.den)


def _log_second_derivative_term(w):
    """-2 (log W)'' for a canonical quasi-polynomial W, as a QuasiRat."""
    p0 = w.poly
    r1 = differentiate(RawQuasi(w.expS, w.expC, p0))
    r2 = differentiate(r1)
    n_corr = r2.poly * p0 - r1.poly * r1.poly
    return QuasiRat.make(AffineExp(), AffineExp(),
                         n_corr.scale(Fraction(-8)),
                         ONE_MINUS_ETA_SQ * (p0 * p0))


def _deformed_from(w, inst):
    return potential(inst).add(_log_second_derivative_term(w))


def deformed_potential(t, inst=None):
    """U - 2 (log W[t])'' as a reduced QuasiRat (symbolic or instantiated)."""
    return _deformed_from(wronskian(t, inst), inst)


def apply_hamiltonian(pot, f):
    """(-d^2/dx^2 + pot) applied to f, exactly."""
    fpp = differentiate_rat(differentiate_rat(f))
    return pot.mul(f).sub(fpp)


def _warn_if_small(expS, expC, gv, hv):
    threshold = Fraction(3, 2)
    vs, vc = expS.eval_at(gv, hv), expC.eval_at(gv, hv)
    if vs < threshold or vc < threshold:
        warnings.warn(
            "eigenfunction exponents (%s, %s) are below 3/2; the parameters "
            "may be too small for the full transformation chain" % (vs, vc),
            RuntimeWarning, stacklevel=3)


def _resolve_instantiation(t, inst, symbolic_cap=2):
    if inst is not None:
        return require_generic(*inst)
    if len(t) <= symbolic_cap:
        return None
    return require_generic(*DEFAULT_GENERIC_POINT)


def verify_eigenfunction(t, n, inst=None):
    """Check that W[t, phi_n]/W[t] is an eigenfunction of the deformed
    Hamiltonian with eigenvalue E_n = 4n(n+g+h).

    Returns (holds exactly, eigenvalue as a ParamPoly).  Symbolic in (g, h)
    for tuples of at most 2 states when no point is given; otherwise exact
    at the given (or default) generic rational point.
    """
    t = as_state_tuple(t)
    phi = State(StateType.N, n)
    tn = t.with_state(phi)  # raises DuplicateStatesError for deleted levels
    inst = _resolve_instantiation(t, inst)
    wt = wronskian(t, inst)
    wtn = wronskian(tn, inst)
    f = QuasiRat.make(wtn.expS - wt.expS, wtn.expC - wt.expC, wtn.poly, wt.poly)
    ham = _deformed_from(wt, inst)
    ev = eigenvalue(phi)
    ev_c = ev.eval_at(*inst) if inst else ev
    if inst:
        _warn_if_small(f.expS, f.expC, *inst)
    ok = apply_hamiltonian(ham, f).sub(f.scale(ev_c)).is_zero()
    return ok, ev


def extra_eigenstate(t, ell, inst=None):
    """Eigenfunction W[t without t[ell]]/W[t] from deleting a type III state.

    t[ell] must be of type III with index m; the returned eigenvalue is
    E_{-m-1} = -4(m+1)(g+h-m-1) as a ParamPoly.  Symbolic unless a point is
    given.
    """
    t = as_state_tuple(t)
    s = t[ell]
    if s.type is not StateType.III:
        raise ValueError("deleted state must be of type III, got %s" % s)
    if inst is not None:
        inst = require_generic(*inst)
    rest = t.without_index(ell)
    wt = wronskian(t, inst)
    wr = wronskian(rest, inst)
    f = QuasiRat.make(wr.expS - wt.expS, wr.expC - wt.expC, wr.poly, wt.poly)
    if inst:
        _warn_if_small(f.expS, f.expC, *inst)
    return f, eigenvalue(State(StateType.III, s.v))


@dataclass(frozen=True)
class SpectrumLabel:
    """A permitted level: bound E_n (n >= 0) or extra E_{-m-1} (m >= 0)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("bound", "extra"):
            raise ValueError("kind must be 'bound' or 'extra'")
        if self.index < 0:
            raise ValueError("index must be nonnegative")

    @property
    def energy_index(self):
        return self.index if self.kind == "bound" else -self.index - 1

    def energy(self):
        if self.kind == "bound":
            return eigenvalue(State(StateType.N, self.index))
        return eigenvalue(State(StateType.III, self.index))

    def label(self):
        return "E_%d" % self.energy_index

    def __str__(self):
        return self.label()


def permitted_spectrum(t, up_to):
    """Permitted levels read off the first Maya diagram, with eigenvalues.

    Extra levels E_{-m-1} for every left white bead position m, bound levels
    E_n for n in {0..up_to} minus the right black bead positions; ordered by
    the energy label.  No claim is made that this list is complete.
    """
    from .maya import tuple_to_diagrams
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    first = tuple_to_diagrams(as_state_tuple(t)).first
    labels = [SpectrumLabel("extra", m) for m in sorted(first.left_white, reverse=True)]
    deleted = set(first.right_black)
    labels += [SpectrumLabel("bound", n) for n in range(up_to + 1) if n not in deleted]
    return [(lab, lab.energy()) for lab in labels]


def check_nonsingular(t, gv, hv):
    """True iff the instantiated Wronskian has no zero with eta in (-1, 1).

    This is exactly the condition for the deformed potential to be free of
    interior singularities on (0, pi/2); endpoint behaviour is governed by
    the exponents and is not part of the check.
    """
    gv, hv = require_generic(gv, hv)
    w = wronskian(t, inst=(gv, hv))
    if w.poly.degree <= 0:
        return True
    return sturm_count(w.poly, Fraction(-1), Fraction(1)) == 0
