"""Command line front end: verify, homology, podles-chern.

Every command writes deterministic JSON (to --out or standard output) and
a one-line summary to standard error.  Exit codes: 0 success, 1 failed
verification, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .catalog import Builtin, build
from .constructions import (ConstructionError, algebra_cyclic, coalgebra_hochschild, dual_module,
                            group_dihedral_submodule, hopf_cm_cocyclic, hopf_homology_dihedral,
                            hopf_paracyclic_with_coeff, mpi_coefficient, path_space)
from .cyclicmod import check_relations, homology
from .hopf import ModularPair, hopf_from_presentation
from .ncalg import PresentationError, parse_presentation
from .scalars import make_qparam, parse_rational
from .tensorspace import TruncationError, TruncationPolicy


class UsageError(ValueError):
    pass


def _pair(b: Builtin) -> ModularPair:
    return b.extras.get("mpi") or ModularPair("eps", ())


CONSTRUCTIONS = {
    "algebra-cyclic": lambda b: algebra_cyclic(b),
    "algebra-dual": lambda b: dual_module(algebra_cyclic(b)),
    "coalgebra-hochschild": lambda b: coalgebra_hochschild(b),
    "hopf-cm": lambda b: hopf_cm_cocyclic(b, _pair(b)),
    "paracyclic": lambda b: hopf_paracyclic_with_coeff(b, mpi_coefficient(b, _pair(b))),
    "hopf-homology": lambda b: hopf_homology_dihedral(b),
    "path-space": lambda b: path_space(b),
    "group-submodule": lambda b: group_dihedral_submodule(b),
}


def load_algebra(source: str, q) -> Builtin:
    """A builtin name, or a path to a presentation file (parameter q available)."""
    if not source.startswith("builtin:") and os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
        params = {"q": make_qparam(q if q is not None else Fraction(3, 4)).q}
        pres = parse_presentation(text, params, name=os.path.basename(source))
        hopf = hopf_from_presentation(pres) if pres.hopf_statements else None
        return Builtin(os.path.basename(source), pres, hopf)
    return build(source, q)


def parse_degrees(text: str) -> list:
    try:
        if ".." in text:
            a, b = text.split("..")
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"degrees must look like a..b, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad degree range {text!r}")
    return list(range(lo, hi + 1))


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------- commands


def cmd_verify(args) -> int:
    q = parse_rational(args.q) if args.q else None
    b = load_algebra(args.algebra, q)
    report: dict = {"command": "verify", "algebra": b.name, "seed": args.seed}
    ok = True
    if args.construction:
        M = CONSTRUCTIONS[args.construction](b)
        policy = TruncationPolicy(args.truncation) if args.truncation is not None else None
        rel = check_relations(M, args.max_degree, samples=args.samples, seed=args.seed, policy=policy)
        report["relations"] = rel.as_json()
        ok = rel.passed
        first = rel.failures[0]["identity"] if rel.failures else None
    else:
        if b.hopf is None:
            raise UsageError(f"{b.name} carries no Hopf structure; pick a construction")
        ax = b.hopf.verify_hopf_axioms(samples=args.samples, seed=args.seed)
        report["hopf_axioms"] = ax
        ok = ax.get("pass", False)
        first = ax["failures"][0][0] if ax.get("failures") else None
        pair = b.extras.get("mpi")
        if pair is not None:
            mpi = b.hopf.verify_mpi(pair, samples=args.samples, seed=args.seed)
            report["mpi"] = mpi
            if not mpi["pass"]:
                ok = False
                first = first or "modular pair in involution"
    report["pass"] = ok
    _emit(report, args.out)
    print(f"verify {b.name}: {'pass' if ok else 'FAIL at ' + str(first)}", file=sys.stderr)
    return 0 if ok else 1


def cmd_homology(args) -> int:
    q = parse_rational(args.q) if args.q else None
    b = load_algebra(args.algebra, q)
    if not args.construction:
        raise UsageError("homology needs --construction")
    M = CONSTRUCTIONS[args.construction](b)
    degrees = parse_degrees(args.degrees)
    if args.sign is None:
        kinds = ["hochschild" if args.hochschild else "cyclic"]
    else:
        sign = args.sign.replace("−", "-")
        base = "hochschild" if args.hochschild else "dihedral"
        kinds = [base + c for c in ("+-" if sign == "both" else sign)]
    policy = None
    if not M.finite:
        if args.truncation is None:
            raise UsageError(f"{M.name} is infinite; give --truncation N")
        policy = TruncationPolicy(args.truncation)
    results = []
    for kind in kinds:
        rep = homology(M, kind, degrees, policy=policy, stabilize=not M.finite)
        results.append(rep.as_json())
    payload = {"command": "homology", "algebra": b.name, "construction": args.construction,
               "degrees": degrees, "results": results}
    _emit(payload, args.out)
    for r in results:
        dims = [e["dim"] for e in r["entries"]]
        print(f"{r['kind']} {degrees[0]}..{degrees[-1]}: {dims}", file=sys.stderr)
    return 0


def cmd_podles_chern(args) -> int:
    from .charmaps import podles_chern

    q = parse_rational(args.q) if args.q else Fraction(3, 4)
    make_qparam(q, need_root=True)
    res = podles_chern(q, n=args.n, eps=args.eps, identity=args.identity)
    res["command"] = "podles-chern"
    _emit(res, args.out)
    print(f"podles-chern q={q}: coefficient {res['coefficient']}, "
          f"nontrivial={res['nontrivial']}", file=sys.stderr)
    ok = res["unitary_u"] and (args.identity or res["nontrivial"])
    return 0 if ok else 1


# ------------------------------------------------------------- parser


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfdihedral", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--q", help="deformation parameter p/r")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="write JSON here instead of standard output")

    v = sub.add_parser("verify", help="check axioms or structure-map identities")
    v.add_argument("--algebra", required=True)
    v.add_argument("--construction", choices=sorted(CONSTRUCTIONS))
    v.add_argument("--max-degree", type=int, default=3)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--truncation", type=int)
    common(v)
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("homology", help="(co)homology dimensions of a bicomplex")
    h.add_argument("--algebra", required=True)
    h.add_argument("--construction", choices=sorted(CONSTRUCTIONS))
    h.add_argument("--sign", choices=["+", "-", "−", "both"])
    h.add_argument("--hochschild", action="store_true", help="Hochschild instead of cyclic")
    h.add_argument("--degrees", default="0..3")
    h.add_argument("--truncation", type=int)
    common(h)
    h.set_defaults(func=cmd_homology)

    c = sub.add_parser("podles-chern", help="odd Chern class on the standard Podles sphere")
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--eps", type=int, choices=[1, -1], default=1)
    c.add_argument("--identity", action="store_true", help="use M = I instead")
    common(c)
    c.set_defaults(func=cmd_podles_chern)
    return p


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, PresentationError, ConstructionError,
            TruncationError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
