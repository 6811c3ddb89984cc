"""Command-line front end.

Commands
--------
poly TUPLE            exponents, degree, and coefficients of the Wronskian's
                      polynomial part
maya TUPLE            ASCII rendering of both Maya diagrams plus the bead sets
reduce TUPLE          reduction to a two-family normal form with the ledger
spectrum TUPLE        permitted energy labels with symbolic eigenvalues
verify-identity TUPLE single division-move identity check
equivalent T1 T2      compare canonical forms of two tuples

Tuples are comma-separated states like "I1,II2,III1" (types I, II, III, N
with nonnegative indices); the empty string is the empty tuple.  Rationals on
the command line are "p/q".  Output is UTF-8 text on stdout (JSON with
--json, LaTeX with --latex where supported); errors go to stderr.

Exit codes: 0 success, 2 parse error, 3 invalid tuple, 4 internal identity
failure, 5 non-generic parameters.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .algebra import AffineExp, EtaPoly, ParamPoly, ParamRat
from .maya import (
    ReductionTarget,
    canonical_form,
    reduce_tuple,
    render_diagram,
    tuple_to_diagrams,
    verify_move_identity,
    verify_reduction,
)
from .spectral import (
    apply_hamiltonian,
    check_nonsingular,
    deformed_potential,
    extra_eigenstate,
    permitted_spectrum,
    verify_eigenfunction,
)
from .states import (
    DuplicateStatesError,
    NonGenericParametersError,
    State,
    StateTuple,
    StateType,
    parse_state,
)
from .wronskian import wronskian


class TupleParseError(ValueError):
    pass


class IdentityMismatchError(RuntimeError):
    pass


def parse_tuple_spec(text):
    text = text.strip()
    if not text:
        return StateTuple()
    states = []
    for token in text.split(","):
        try:
            states.append(parse_state(token))
        except ValueError as e:
            raise TupleParseError(str(e)) from None
    return StateTuple(states)


def parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise TupleParseError("bad rational %r: %s" % (text, e)) from None


# -- JSON encoding ----------------------------------------------------------
# rationals: "p/q" strings; ParamPoly: [[i, j, "p/q"], ...] sorted by (i, j);
# AffineExp: {"g": int, "h": int, "c": "p/q"}; EtaPoly: [[k, ParamRat], ...]
# by ascending power; ParamRat: {"num": ParamPoly, "den": ParamPoly}.


def rational_json(q):
    return str(Fraction(q))


def parampoly_json(p):
    return [[i, j, rational_json(c)] for (i, j), c in sorted(p.terms.items())]


def paramrat_json(r):
    if isinstance(r, Fraction):
        r = ParamRat(ParamPoly.const(r))
    elif isinstance(r, ParamPoly):
        r = ParamRat(r)
    return {"num": parampoly_json(r.num), "den": parampoly_json(r.den)}


def affine_json(a):
    return {"g": a.cg, "h": a.ch, "c": rational_json(a.c0)}


def etapoly_json(p):
    return [[k, paramrat_json(c)] for k, c in enumerate(p.coeffs) if c]


def ledger_json(led):
    return {"dg": led.dg, "dh": led.dh,
            "prefS": affine_json(led.prefS), "prefC": affine_json(led.prefC)}


def constant_json(c):
    if c is None:
        return None
    return paramrat_json(c)


def coeff_str(c):
    return str(c)


def coeff_latex(c):
    return c.latex() if hasattr(c, "latex") else str(c)


def quasi_latex(q):
    terms = []
    for k in range(q.poly.degree, -1, -1):
        c = q.poly.coeff(k)
        if not c:
            continue
        mono = "" if k == 0 else (r"\eta" if k == 1 else r"\eta^{%d}" % k)
        terms.append(r"\left(%s\right)%s" % (coeff_latex(c), mono))
    return r"(\sin x)^{%s}\,(\cos x)^{%s}\left[%s\right]" % (
        q.expS.latex(), q.expC.latex(), " + ".join(terms))


def tuple_latex(t):
    return r"\,".join(s.latex() for s in t)


def _emit(args, report, human_lines, latex_text=None):
    if getattr(args, "json", False):
        print(json.dumps(report))
    elif getattr(args, "latex", False) and latex_text is not None:
        print(latex_text)
    else:
        for line in human_lines:
            print(line)
    return 0


def _instantiation(args):
    if args.g is None and args.h is None:
        return None
    if args.g is None or args.h is None:
        raise TupleParseError("--g and --h must be given together")
    return (parse_rational(args.g), parse_rational(args.h))


# -- commands ---------------------------------------------------------------


def cmd_poly(args):
    t = parse_tuple_spec(args.tuple)
    inst = _instantiation(args)
    w = wronskian(t, inst=inst)
    report = {
        "command": "poly",
        "tuple": [str(s) for s in t],
        "expS": affine_json(w.expS),
        "expC": affine_json(w.expC),
        "degree": w.poly.degree,
        "coefficients": etapoly_json(w.poly),
    }
    if inst is not None:
        report["g"], report["h"] = rational_json(inst[0]), rational_json(inst[1])
    lines = [
        "tuple  : %s" % t,
        "expS   : %s" % w.expS,
        "expC   : %s" % w.expC,
        "degree : %d" % w.poly.degree,
    ]
    for k in range(w.poly.degree + 1):
        c = w.poly.coeff(k)
        if c:
            lines.append("eta^%-2d : %s" % (k, coeff_str(c)))
    latex = r"W\left[%s\right] = %s" % (tuple_latex(t), quasi_latex(w))
    return _emit(args, report, lines, latex)


def cmd_maya(args):
    t = parse_tuple_spec(args.tuple)
    pair = tuple_to_diagrams(t)
    report = {
        "command": "maya",
        "tuple": [str(s) for s in t],
        "first": {"leftWhite": list(pair.first.left_white),
                  "rightBlack": list(pair.first.right_black),
                  "render": render_diagram(pair.first)},
        "second": {"leftWhite": list(pair.second.left_white),
                   "rightBlack": list(pair.second.right_black),
                   "render": render_diagram(pair.second)},
    }
    lines = [
        "tuple : %s" % t,
        "first : %s   (left white: III %s | right black: N %s)" % (
            render_diagram(pair.first), list(pair.first.left_white),
            list(pair.first.right_black)),
        "second: %s   (left white: II %s | right black: I %s)" % (
            render_diagram(pair.second), list(pair.second.left_white),
            list(pair.second.right_black)),
    ]
    return _emit(args, report, lines)


def cmd_reduce(args):
    t = parse_tuple_spec(args.tuple)
    target = ReductionTarget(args.target)
    reduced, ledger = reduce_tuple(t, target)
    report = {
        "command": "reduce",
        "tuple": [str(s) for s in t],
        "target": target.value,
        "reduced": [str(s) for s in reduced],
        "ledger": ledger_json(ledger),
    }
    lines = [
        "input   : %s" % t,
        "target  : %s" % target.value,
        "reduced : %s" % reduced,
        "shift   : dg=%+d dh=%+d" % (ledger.dg, ledger.dh),
        "prefS   : %s" % ledger.prefS,
        "prefC   : %s" % ledger.prefC,
    ]
    if args.verify:
        rep = verify_reduction(t, target, instantiate=_instantiation(args))
        report["verify"] = {
            "mode": rep.mode,
            "proportional": rep.proportional,
            "constant": constant_json(rep.constant),
        }
        if rep.point is not None:
            report["verify"]["point"] = [rational_json(v) for v in rep.point]
        lines.append("verify  : %s, constant = %s (%s)"
                     % ("proportional" if rep.proportional else "MISMATCH",
                        rep.constant, rep.mode))
        if not rep.proportional:
            raise IdentityMismatchError(
                "reduction identity failed for %s -> %s: %s" % (t, reduced, rep.detail))
    latex = (r"W\left[%s\right](x;g,h) \propto (\sin x)^{%s}(\cos x)^{%s}\,"
             r"W\left[%s\right](x;g%+d,h%+d)"
             % (tuple_latex(t), ledger.prefS.latex(), ledger.prefC.latex(),
                tuple_latex(reduced), ledger.dg, ledger.dh))
    return _emit(args, report, lines, latex)


def cmd_spectrum(args):
    t = parse_tuple_spec(args.tuple)
    spectrum = permitted_spectrum(t, args.up_to)
    report = {
        "command": "spectrum",
        "tuple": [str(s) for s in t],
        "upTo": args.up_to,
        "levels": [{"label": lab.label(), "kind": lab.kind, "index": lab.index,
                    "energy": parampoly_json(ev)} for lab, ev in spectrum],
    }
    lines = ["tuple : %s" % t]
    lines += ["%-6s (%s, index %d)  E = %s" % (lab.label(), lab.kind, lab.index, ev)
              for lab, ev in spectrum]
    if args.verify:
        inst = _instantiation(args)
        if inst is None:
            raise TupleParseError("--verify for spectrum needs --g and --h")
        checks = _verify_spectrum(t, spectrum, inst)
        report["verify"] = checks
        for name, ok in checks.items():
            lines.append("check %-22s: %s" % (name, "pass" if ok else "FAIL"))
        if not all(checks.values()):
            raise IdentityMismatchError("spectrum verification failed: %s" % checks)
    return _emit(args, report, lines)


def _verify_spectrum(t, spectrum, inst):
    checks = {}
    checks["nonsingular"] = check_nonsingular(t, *inst)
    pot = deformed_potential(t, inst=inst)
    for lab, ev in spectrum:
        if lab.kind == "bound" and lab.index <= 2:
            ok, _ = verify_eigenfunction(t, lab.index, inst=inst)
            checks["eigenfunction %s" % lab.label()] = ok
        elif lab.kind == "extra":
            for i, s in enumerate(t):
                if s.type is StateType.III and s.v == lab.index:
                    f, ev2 = extra_eigenstate(t, i, inst=inst)
                    ev_c = ev2.eval_at(*inst)
                    ok = apply_hamiltonian(pot, f).sub(f.scale(ev_c)).is_zero()
                    checks["extra state %s" % lab.label()] = ok
                    break
    return checks


def cmd_verify_identity(args):
    inst = _instantiation(args)
    if args.random:
        return _verify_random(args, inst)
    t = parse_tuple_spec(args.tuple)
    rep = verify_move_identity(t, args.which, args.dir, instantiate=inst)
    report = {
        "command": "verify-identity",
        "tuple": [str(s) for s in t],
        "move": {"which": args.which, "dir": args.dir},
        "moved": [str(s) for s in rep.tuple_after],
        "ledger": ledger_json(rep.ledger),
        "mode": rep.mode,
        "proportional": rep.proportional,
        "constant": constant_json(rep.constant),
    }
    lines = [
        "tuple : %s" % t,
        "move  : %s division, %s" % (args.which, args.dir),
        "moved : %s" % rep.tuple_after,
        "shift : dg=%+d dh=%+d   prefS: %s   prefC: %s" % (
            rep.ledger.dg, rep.ledger.dh, rep.ledger.prefS, rep.ledger.prefC),
        "result: %s (constant = %s, %s)" % (
            "proportional" if rep.proportional else "MISMATCH",
            rep.constant, rep.mode),
    ]
    if not rep.proportional:
        raise IdentityMismatchError("move identity failed: %s" % rep.detail)
    return _emit(args, report, lines)


def _verify_random(args, inst):
    rng = random.Random(args.seed)
    results = []
    for _ in range(args.random):
        size = rng.randint(0, 4)
        states = set()
        while len(states) < size:
            states.add(State(rng.choice(list(StateType)), rng.randint(0, 4)))
        t = StateTuple(sorted(states, key=State.sort_key))
        which = rng.choice(["first", "second"])
        direction = rng.choice(["left", "right"])
        rep = verify_move_identity(t, which, direction, instantiate=inst)
        results.append({"tuple": [str(s) for s in t],
                        "move": {"which": which, "dir": direction},
                        "mode": rep.mode,
                        "proportional": rep.proportional})
        if not rep.proportional:
            raise IdentityMismatchError("random move identity failed on %s" % t)
    report = {"command": "verify-identity", "random": args.random,
              "seed": args.seed, "results": results}
    lines = ["%3d/%d random move identities verified"
             % (len(results), args.random)]
    return _emit(args, report, lines)


def cmd_equivalent(args):
    t1 = parse_tuple_spec(args.tuple)
    t2 = parse_tuple_spec(args.tuple2)
    r1, l1 = canonical_form(t1)
    r2, l2 = canonical_form(t2)
    same = r1 == r2
    report = {
        "command": "equivalent",
        "tuple1": [str(s) for s in t1],
        "tuple2": [str(s) for s in t2],
        "canonical1": [str(s) for s in r1],
        "canonical2": [str(s) for s in r2],
        "ledger1": ledger_json(l1),
        "ledger2": ledger_json(l2),
        "equivalent": same,
    }
    lines = [
        "tuple 1    : %s  ->  %s" % (t1, r1),
        "tuple 2    : %s  ->  %s" % (t2, r2),
        "canonical forms %s" % ("AGREE (same two-family normal form)" if same
                                else "differ"),
    ]
    if same:
        lines.append("net shift 1: dg=%+d dh=%+d; net shift 2: dg=%+d dh=%+d"
                     % (l1.dg, l1.dh, l2.dg, l2.dh))
    return _emit(args, report, lines)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mijacobi",
        description="Exact multi-indexed Jacobi polynomial engine")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--latex", action="store_true", help="emit LaTeX")
    parser.add_argument("--g", help="instantiate g at this rational (p/q)")
    parser.add_argument("--h", help="instantiate h at this rational (p/q)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized verification runs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="Wronskian polynomial part of a tuple")
    p.add_argument("tuple")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("maya", help="Maya diagrams of a tuple")
    p.add_argument("tuple")
    p.set_defaults(func=cmd_maya)

    p = sub.add_parser("reduce", help="reduce to a two-family normal form")
    p.add_argument("tuple")
    p.add_argument("--target", default="IN", choices=[t.value for t in ReductionTarget])
    p.add_argument("--verify", action="store_true",
                   help="verify the reduction identity end to end")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("spectrum", help="permitted energy labels")
    p.add_argument("tuple")
    p.add_argument("--up-to", type=int, default=6, dest="up_to")
    p.add_argument("--verify", action="store_true",
                   help="verify eigenfunctions at the instantiation")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify-identity", help="check one division-move identity")
    p.add_argument("tuple", nargs="?", default="")
    p.add_argument("--which", default="second", choices=["first", "second"])
    p.add_argument("--dir", default="left", choices=["left", "right"])
    p.add_argument("--random", type=int, default=0, metavar="K",
                   help="instead verify K random tuples and moves")
    p.set_defaults(func=cmd_verify_identity)

    p = sub.add_parser("equivalent", help="compare canonical forms of two tuples")
    p.add_argument("tuple")
    p.add_argument("tuple2")
    p.set_defaults(func=cmd_equivalent)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TupleParseError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 2
    except DuplicateStatesError as e:
        print("invalid tuple: %s" % e, file=sys.stderr)
        return 3
    except IdentityMismatchError as e:
        print("identity failure: %s" % e, file=sys.stderr)
        return 4
    except NonGenericParametersError as e:
        print("non-generic parameters: %s" % e, file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
