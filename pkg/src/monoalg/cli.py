"""Command line front end.

Usage examples:
  monoalg analyze "f: 0 0 0 1"
  monoalg iso "f: 0 0 0" "f: 1 1 1"
  monoalg aut "f: 1 2 3 0"
  monoalg orbits "f: 0 0 0" --n 2
  monoalg check uh "f: 1 2 0"
  monoalg check omega-cat "B[w]" --json
  monoalg check phom-n "f: 1 2 3 4 0" --k 2
  monoalg classify "f: 1 0 0" --json
  monoalg decompose "f: 1 0 3 4 2"
  monoalg limit --k 2
  monoalg instantiate "A[1;w,2]" --w 3
  monoalg truncate "A[2;1;2]" --height 3
  monoalg enumerate --n 4 --out corpus4.txt
  monoalg semilinear "f: 0 0 0 1" --root 0
  monoalg export-dot "f: 1 2 0"

An algebra argument is a file path (JSON {"n":..,"f":[..]} or a text
table "f: 0 0 1"), the same two forms inline, "random:N:SEED", or, for
the verbs that accept shapes, a symbolic sum such as "2*A[3;w,2]+w*B[w]".
Exit codes: 0 holds/done, 1 property fails, 2 error.  MONOALG_BOUND sets
the default oracle bound (otherwise 8).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, enumeration, homogeneity, iso, orbits, semilinear, symbolic


def _default_bound() -> int:
    env = os.environ.get("MONOALG_BOUND")
    return int(env) if env else homogeneity.DEFAULT_BOUND


def _load_any(arg: str):
    """Finite or partial algebra from path, inline table/JSON, or random:N:SEED."""
    if os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read().strip()
        return core.from_json(text) if text.startswith("{") else core.from_text(text)
    if arg.startswith("random:"):
        _, n, seed = arg.split(":")
        return enumeration.random_algebra(int(n), int(seed))
    if arg.lstrip().startswith("{"):
        return core.from_json(arg)
    return core.from_text(arg)


def _load_total(arg: str) -> core.FiniteMonounary:
    alg = _load_any(arg)
    if isinstance(alg, core.PartialMonounary):
        raise ValueError("a total algebra is required here")
    return alg


def _looks_symbolic(arg: str) -> bool:
    return any(ch in arg for ch in "ZNAB") and not os.path.exists(arg)


def _emit(args, payload: dict, human: str) -> None:
    print(json.dumps(payload) if args.json else human)


def _cmd_analyze(args) -> int:
    A = _load_total(args.algebra)
    r = core.structure_report(A)
    payload = {
        "n": A.n,
        "components": [list(c) for c in r.components],
        "cyclic": sorted(r.cyclic),
        "heights": list(r.heights),
        "height": r.height,
        "leaves": sorted(r.leaves),
        "cycle_sizes": list(r.cycle_sizes),
        "min_generating": {
            "leaves": sorted(r.min_generating.leaves),
            "cycle_choices": [sorted(c) for c in r.min_generating.cycle_choices],
        },
    }
    human = "\n".join(
        [
            f"n = {A.n}",
            f"components: {payload['components']}",
            f"cyclic: {payload['cyclic']}",
            f"heights: {payload['heights']} (algebra height {r.height})",
            f"leaves: {payload['leaves']}",
            f"cycle sizes: {payload['cycle_sizes']}",
            f"minimal generators: leaves {payload['min_generating']['leaves']}"
            f" + one choice from each of {payload['min_generating']['cycle_choices']}",
        ]
    )
    _emit(args, payload, human)
    return 0


def _cmd_iso(args) -> int:
    A, B = _load_total(args.left), _load_total(args.right)
    verdict = iso.are_isomorphic(A, B)
    _emit(args, {"isomorphic": verdict}, f"isomorphic: {str(verdict).lower()}")
    return 0 if verdict else 1


def _cmd_aut(args) -> int:
    A = _load_total(args.algebra)
    if args.oracle:
        auts = iso.brute_force_automorphisms(A, bound=args.bound)
    else:
        auts = iso.enumerate_automorphisms(A)
    payload = {"count": len(auts), "automorphisms": [list(p) for p in auts]}
    _emit(args, payload, "\n".join(str(list(p)) for p in auts))
    return 0


def _cmd_orbits(args) -> int:
    A = _load_total(args.algebra)
    profile = orbits.orbit_profile(A, args.n)
    blocks = [list(b) for b in orbits.one_orbits(A)]
    _emit(
        args,
        {"profile": profile, "one_orbits": blocks},
        f"profile: {profile}\none_orbits: {blocks}",
    )
    return 0


def _check_finite(args, A: core.FiniteMonounary) -> bool:
    prop, bound = args.property, args.bound
    if prop == "uh":
        return (
            homogeneity.is_ultrahomogeneous_oracle(A, bound)
            if args.oracle
            else homogeneity.is_ultrahomogeneous(A)
        )
    if prop == "hom":
        return homogeneity.is_ultrahomogeneous(A)  # finite: same condition
    if prop == "hom-n":
        return homogeneity.is_n_homogeneous(A, _need_k(args), bound)
    if prop == "phom":
        return (
            homogeneity.is_partially_homogeneous_oracle(A, bound)
            if args.oracle
            else homogeneity.is_partially_homogeneous(A)
        )
    if prop == "phom-n":
        return homogeneity.is_partially_n_homogeneous(A, _need_k(args), bound)
    if prop == "transitive":
        return orbits.is_transitive(A)
    if prop in ("omega-cat", "lf", "ulf"):
        return True  # finite structures satisfy all three outright
    raise ValueError(f"property {prop!r} does not apply to a finite table")


def _check_symbolic(args, S) -> bool:
    prop = args.property
    table = {
        "uh": symbolic.is_ultrahomogeneous,
        "hom": symbolic.is_homogeneous,
        "phom": symbolic.is_partially_homogeneous,
        "transitive": symbolic.is_transitive,
        "omega-cat": symbolic.is_omega_categorical,
        "lf": symbolic.is_locally_finite,
        "ulf": symbolic.is_ulf,
    }
    if prop not in table:
        raise ValueError(f"property {prop!r} does not apply to a symbolic shape")
    return table[prop](S)


def _need_k(args) -> int:
    if args.k is None:
        raise ValueError("this property needs --k")
    return args.k


def _cmd_check(args) -> int:
    if args.property == "pf-uh":
        alg = _load_any(args.algebra)
        if isinstance(alg, core.FiniteMonounary):
            alg = core.PartialMonounary(alg.table)
        holds = homogeneity.pseudoforest_ultrahomogeneous(alg)
    elif _looks_symbolic(args.algebra):
        holds = _check_symbolic(args, symbolic.parse(args.algebra))
    else:
        holds = _check_finite(args, _load_total(args.algebra))
    name = {"omega-cat": "omega_categorical"}.get(args.property, args.property.replace("-", "_"))
    _emit(args, {"property": name, "holds": holds}, f"{name}: {str(holds).lower()}")
    return 0 if holds else 1


def _cmd_classify(args) -> int:
    A = _load_total(args.algebra)
    report = homogeneity.classify_lattice(A, bound=args.bound).to_dict()
    human = ", ".join(f"{k}={str(v).lower()}" for k, v in report.items())
    _emit(args, report, human)
    return 0


def _cmd_decompose(args) -> int:
    A = _load_total(args.algebra)
    S = symbolic.decompose(A)
    _emit(args, {"symbolic": symbolic.show(S)}, symbolic.show(S))
    return 0


def _cmd_limit(args) -> int:
    S = symbolic.fraisse_limit(args.k)
    _emit(args, {"symbolic": symbolic.show(S)}, symbolic.show(S))
    return 0


def _cmd_instantiate(args) -> int:
    S = symbolic.parse(args.shape)
    if args.w is None:
        raise ValueError("instantiate needs --w")
    A = symbolic.instantiate(S, args.w)
    _emit(args, {"n": A.n, "f": list(A.table)}, core.to_text(A))
    return 0


def _cmd_truncate(args) -> int:
    S = symbolic.parse(args.shape) if not args.limit_k else symbolic.fraisse_limit(args.limit_k)
    T = symbolic.truncate(S, args.height, max_cycle=args.max_cycle)
    _emit(args, {"symbolic": symbolic.show(T)}, symbolic.show(T))
    return 0


def _cmd_enumerate(args) -> int:
    corpus = enumeration.enumerate_up_to_iso(args.n, workers=args.workers)
    if args.out:
        enumeration.save_corpus(corpus, args.out)
        print(f"wrote {len(corpus.representatives)} classes to {args.out}")
    else:
        print(f"# n={corpus.n} count={len(corpus.representatives)}")
        for A in corpus.representatives:
            print(" ".join(map(str, A.table)))
    return 0


def _cmd_semilinear(args) -> int:
    A = _load_total(args.algebra)
    order = semilinear.build_order(A, args.root)
    equal, alg_auts, _ = semilinear.check_aut_equality(A, args.root, bound=args.bound)
    payload = {
        "elements": list(order.elements),
        "bottom": order.bottom,
        "covers": sorted([list(c) for c in order.covers]),
        "aut_equality": equal,
        "aut_count": len(alg_auts),
    }
    human = (
        f"elements: {payload['elements']} (bottom {order.bottom})\n"
        f"covers: {payload['covers']}\n"
        f"aut groups agree: {str(equal).lower()} ({len(alg_auts)} automorphisms)"
    )
    _emit(args, payload, human)
    return 0 if equal else 1


def _cmd_export_dot(args) -> int:
    alg = _load_any(args.algebra)
    text = core.to_dot(alg)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algebra=True):
        if algebra:
            p.add_argument("algebra")
        p.add_argument("--json", action="store_true")
        p.add_argument("--bound", type=int, default=_default_bound())
        return p

    common(sub.add_parser("analyze", help="structural report"))

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")

    p = common(sub.add_parser("aut", help="list automorphisms"))
    p.add_argument("--oracle", action="store_true", help="brute-force filter")

    p = common(sub.add_parser("orbits", help="orbit profile"))
    p.add_argument("--n", type=int, default=1, help="largest tuple arity")

    p = common(sub.add_parser("check", help="decide a property"), algebra=False)
    p.add_argument(
        "property",
        choices=[
            "uh", "hom", "hom-n", "phom", "phom-n", "transitive",
            "omega-cat", "lf", "ulf", "pf-uh",
        ],
    )
    p.add_argument("algebra")
    p.add_argument("--k", type=int)
    p.add_argument("--oracle", action="store_true", help="definition-level search")

    common(sub.add_parser("classify", help="full homogeneity lattice report"))

    common(sub.add_parser("decompose", help="symbolic normal form of a UH algebra"))

    p = sub.add_parser("limit", help="age-limit family")
    p.add_argument("--k", type=int, default=None, help="indegree bound; omit for all finite algebras")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("instantiate", help="explicit table from a shape")
    p.add_argument("shape")
    p.add_argument("--w", type=int, help="value substituted for w")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("truncate", help="cut a shape to bounded height")
    p.add_argument("shape", nargs="?", default="")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--max-cycle", type=int, default=None)
    p.add_argument("--limit-k", type=int, default=None, help="truncate the k-bounded limit family instead")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="all classes up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")

    p = common(sub.add_parser("semilinear", help="order on the tree above a cyclic element"))
    p.add_argument("--root", type=int, required=True)

    p = sub.add_parser("export-dot", help="digraph form")
    p.add_argument("algebra")
    p.add_argument("--out")

    return parser


_DISPATCH = {
    "analyze": _cmd_analyze,
    "iso": _cmd_iso,
    "aut": _cmd_aut,
    "orbits": _cmd_orbits,
    "check": _cmd_check,
    "classify": _cmd_classify,
    "decompose": _cmd_decompose,
    "limit": _cmd_limit,
    "instantiate": _cmd_instantiate,
    "truncate": _cmd_truncate,
    "enumerate": _cmd_enumerate,
    "semilinear": _cmd_semilinear,
    "export-dot": _cmd_export_dot,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
