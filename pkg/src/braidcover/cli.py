"""Command-line entry point.

Exit codes: 0 success, 2 invalid input, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from .braid import (
    BraidWord,
    FreeWord,
    artin_action,
    braids_equal,
    full_twist,
    model_branch_monodromy,
    permutation_image,
)
from .catalog import CSV_COLUMNS, k3_conjectural_pair, search_pairs
from .cosets import CosetEnumerationExceeded, todd_coxeter
from .invariants import HirzebruchEmbedding, invariants_record
from .presentation import GroupPresentation, abelianize, tietze_reduce
from .schreier import reidemeister_schreier
from .vankampen import (
    GeometricMap,
    MonodromyFactorization,
    find_geometric_map,
    galois_pi1,
    projective_closure,
    quotient_by_generator_squares,
    validate_factorization,
    vk_presentation,
)
from .words import parse_letters

log = logging.getLogger("braidcover")

EXIT_INVALID = 2
EXIT_BOUND = 3


class InputError(ValueError):
    pass


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table(rows: list[dict], columns, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({c: r[c] for c in columns})
        return buf.getvalue()
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    for r in rows:
        lines.append("| " + " | ".join(str(r[c]) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def _braid(text: str, strands: int) -> BraidWord:
    return BraidWord(strands, parse_letters(text))


# braid ---------------------------------------------------------------------

def cmd_braid(args) -> str:
    p = args.strands
    if args.action == "perm":
        w = _braid(args.word, p)
        perm = permutation_image(w)
        return _dump({"word": list(w.letters), "permutation": list(perm.image), "cycles": str(perm)})
    if args.action == "equal":
        a, b = _braid(args.word, p), _braid(args.other, p)
        return _dump({"equal": braids_equal(a, b)})
    if args.action == "act":
        w = _braid(args.word, p)
        v = FreeWord(p, parse_letters(args.free))
        return _dump({"image": list(artin_action(w, v).letters)})
    if args.action == "twist":
        return _dump({"strands": p, "word": list(full_twist(p).letters)})
    if args.action == "model":
        w = model_branch_monodromy(args.nu)
        return _dump({"strands": 2, "word": list(w.letters)})
    raise InputError(f"unknown braid action {args.action}")


# group ---------------------------------------------------------------------

def cmd_group(args) -> str:
    P = GroupPresentation.from_json(_load_json(args.input))
    if args.action == "abelianize":
        return _dump(abelianize(P).to_json())
    if args.action == "simplify":
        res = tietze_reduce(P)
        out = res.presentation.to_json()
        out["images"] = [list(w) for w in res.images]
        return _dump(out)
    if args.action == "order":
        table = todd_coxeter(P, (), args.max_cosets)
        return _dump({"order": str(table.index), "cosets_defined": table.defined})
    if args.action == "kernel":
        if not args.map:
            raise InputError("group kernel needs --map")
        psi = GeometricMap.from_json(_load_json(args.map))
        K = reidemeister_schreier(P, psi.images)
        out = K.to_json()
        out["abelianization"] = abelianize(K).to_json()
        return _dump(out)
    raise InputError(f"unknown group action {args.action}")


# vk ------------------------------------------------------------------------

def cmd_vk(args) -> str:
    F = MonodromyFactorization.from_json(_load_json(args.input))
    if args.action == "validate":
        return _dump({"product_is_full_twist": validate_factorization(F), "factorization": F.to_json()})
    if args.action == "present":
        P = vk_presentation(F)
        if args.proj:
            P = projective_closure(P)
        if args.squares:
            P = quotient_by_generator_squares(P)
        res = tietze_reduce(P)
        return _dump({
            "presentation": P.to_json(),
            "simplified": res.presentation.to_json(),
            "generator_images": [list(w) for w in res.images],
            "abelianization": abelianize(P).to_json(),
        })
    if args.action == "pi1":
        if args.map:
            psi = GeometricMap.from_json(_load_json(args.map))
        else:
            P = vk_presentation(F)
            if args.proj:
                P = projective_closure(P)
            psi = find_geometric_map(quotient_by_generator_squares(P), args.sheets)
            if psi is None:
                raise InputError(f"no transposition map onto S_{args.sheets} respects the relations")
        if args.sheets is not None and psi.sheets != args.sheets:
            raise InputError(f"--sheets {args.sheets} disagrees with the map ({psi.sheets} sheets)")
        res = galois_pi1(F, psi, projective=args.proj, max_cosets=args.max_cosets, strict=True)
        out = res.to_json()
        out["map"] = psi.to_json()
        return _dump(out)
    raise InputError(f"unknown vk action {args.action}")


# invariants / pairs / k3 ---------------------------------------------------

def cmd_invariants(args) -> str:
    rec = invariants_record(HirzebruchEmbedding(args.k, args.a, args.b))
    if args.format == "json":
        return _dump(rec)
    return _table([rec], list(rec), args.format)


def cmd_pairs(args) -> str:
    reports = search_pairs(args.max_s, args.max_t, odd_only=args.odd, coprime_only=args.coprime)
    if args.format == "json":
        return _dump([r.to_json() for r in reports])
    return _table([r.row() for r in reports], CSV_COLUMNS, args.format)


def cmd_k3(args) -> str:
    return _dump(k3_conjectural_pair(args.a, args.b).k3_json())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidcover", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def positive(text):
        v = int(text)
        if v < 1:
            raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
        return v

    b = sub.add_parser("braid", help="braid word utilities")
    b.add_argument("action", choices=["perm", "equal", "act", "twist", "model"])
    b.add_argument("--strands", type=positive, default=2)
    b.add_argument("--word", default="", help='signed generators, e.g. "1 1 -2"')
    b.add_argument("--other", default="")
    b.add_argument("--free", default="", help="free word for 'act'")
    b.add_argument("--nu", type=positive, default=1)
    b.set_defaults(func=cmd_braid)

    g = sub.add_parser("group", help="finitely presented group tools")
    g.add_argument("action", choices=["abelianize", "simplify", "order", "kernel"])
    g.add_argument("--in", dest="input", required=True)
    g.add_argument("--map", help="GeometricMap JSON for 'kernel'")
    g.add_argument("--max-cosets", type=positive, default=100_000)
    g.set_defaults(func=cmd_group)

    v = sub.add_parser("vk", help="Van Kampen presentations and Galois-cover pi_1")
    v.add_argument("action", choices=["present", "pi1", "validate"])
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--map")
    v.add_argument("--sheets", type=positive)
    v.add_argument("--proj", action="store_true", help="add the relation x_1...x_p = 1")
    v.add_argument("--squares", action="store_true", help="quotient by the generator squares")
    v.add_argument("--max-cosets", type=positive, default=100_000)
    v.set_defaults(func=cmd_vk)

    i = sub.add_parser("invariants", help="Chern numbers of the Galois cover of F_{k,(a,b)}")
    i.add_argument("--k", type=int, required=True)
    i.add_argument("--a", type=int, required=True)
    i.add_argument("--b", type=int, required=True)
    i.add_argument("--format", choices=["json", "csv"], default="json")
    i.set_defaults(func=cmd_invariants)

    p = sub.add_parser("pairs", help="X_{s,t} / Y_{s,t} example pairs")
    p.add_argument("--max-s", type=positive, required=True)
    p.add_argument("--max-t", type=positive, required=True)
    p.add_argument("--odd", action="store_true")
    p.add_argument("--coprime", action="store_true")
    p.add_argument("--format", choices=["json", "csv", "md"], default="json")
    p.set_defaults(func=cmd_pairs)

    k = sub.add_parser("k3", help="conjectural K3 pair (group prediction only)")
    k.add_argument("--a", type=int, required=True)
    k.add_argument("--b", type=int, required=True)
    k.set_defaults(func=cmd_k3)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.command == "vk" and args.action == "pi1" and not args.map and args.sheets is None:
        parser.error("vk pi1 needs --sheets or --map")
    try:
        out = args.func(args)
    except CosetEnumerationExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
