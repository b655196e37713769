"""Command-line interface: ``dforms <command> [options]``.

Exit codes: 0 when every check passes, 1 when a computation finished but
some check failed, 2 for invalid input or an exceeded resource cap.
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .caps import CapExceeded, override
from .fields import FieldError, gf, prime_power
from .groups import is_fine_image, parse_subgroup_text, standard_group
from .hecke import as_type, convolve, coset_count, hco_expand, mass
from .satake import (dim_formula, enumerate_subspaces, gl_weights, graded_dim,
                     group_act, invariant_dim, level_dim_formula, sl_weights,
                     span_dim_r, stratum_matches, universal_coeffs,
                     unipotent_weights, weighted_hilbert)

SCHEMA = "drinfeld-forms/1"
MAX_Q = 16


class InputError(ValueError):
    pass


# -- parsing helpers -------------------------------------------------------------

def parse_k_range(text):
    """'0..4' -> [0,1,2,3,4]; '1,3,5' -> [1,3,5]; '6' -> [6]."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            ks = list(range(int(lo), int(hi) + 1))
        else:
            ks = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad k range {text!r}") from exc
    if not ks or min(ks) < 0:
        raise InputError(f"k range {text!r} must be non-empty and non-negative")
    return ks


def check_qr(q, r):
    if q is None or r is None:
        raise InputError("--q and --r are required")
    try:
        prime_power(q)
    except FieldError as exc:
        raise InputError(str(exc)) from exc
    if q > MAX_Q:
        raise InputError(f"q = {q} exceeds the supported maximum {MAX_Q}")
    if r < 1:
        raise InputError("r must be at least 1")


def parse_subspace(text, F, r):
    rows = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        row = [F.parse(x) for x in chunk.replace(",", " ").split()]
        if len(row) != r:
            raise InputError(f"subspace row {chunk.strip()!r} has {len(row)} entries, expected {r}")
        rows.append(tuple(row))
    if not rows:
        raise InputError("empty subspace")
    return rows


def resolve_group(spec, q, r):
    """(group, q, r, weights or None) for --group."""
    if spec.startswith("file:"):
        path = spec[5:]
        try:
            with open(path) as fh:
                K = parse_subgroup_text(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read subgroup file {path!r}: {exc.strerror}") from exc
        return K, K.field.order, K.r, None
    check_qr(q, r)
    weights = {"gl": gl_weights, "sl": sl_weights, "unipotent": unipotent_weights}
    if spec in weights:
        return standard_group(spec, q, r), q, r, weights[spec](q, r)
    if spec == "trivial":
        return standard_group("trivial", q, r), q, r, None
    raise InputError(f"unknown group {spec!r}")


# -- commands --------------------------------------------------------------------

def cmd_dims(args):
    check_qr(args.q, args.r)
    rows = []
    for k in parse_k_range(args.k):
        oracle = graded_dim(args.r, args.q, k)
        formula = dim_formula(args.r, args.q, k)
        rows.append({"k": k, "oracle": oracle, "formula": formula, "match": oracle == formula})
    return {"q": args.q, "r": args.r}, rows


def cmd_invariants(args):
    K, q, r, weights = resolve_group(args.group, args.q, args.r)
    fine = is_fine_image(K)
    rows = []
    for k in parse_k_range(args.k):
        dim = invariant_dim(K, k)
        if weights is not None:
            source, formula = "weighted_hilbert", weighted_hilbert(weights, k)
        elif fine:
            source, formula = "level_dim_formula", level_dim_formula(K, r, q, k)
        else:
            source, formula = None, None
        rows.append({"k": k, "invariant_dim": dim, "formula": formula, "source": source,
                     "match": None if formula is None else dim == formula})
    return {"q": q, "r": r, "group": args.group, "group_order": K.order}, rows


def cmd_universal(args):
    check_qr(args.q, args.r)
    U = universal_coeffs(args.r, args.q)
    G = standard_group("gl", args.q, args.r)
    rows = []
    for i, c in enumerate(U.coeffs, start=1):
        fixed = all(group_act(c, g) == c for g in G.gens)
        rows.append({"check": f"c_{i}", "value": str(c), "degree": c.degree,
                     "match": fixed and c.degree == args.q ** i - 1})
    rows.append({"check": "q_power_exponents_only", "value": "", "degree": None,
                 "match": U.checks["q_power_exponents_only"]})
    rows.append({"check": "top_nonzero", "value": "", "degree": None,
                 "match": U.checks["top_nonzero"]})
    from .verify import weighted_monomials
    for k in parse_k_range(args.k):
        got = span_dim_r(weighted_monomials(U.coeffs, k))
        want = weighted_hilbert(gl_weights(args.q, args.r), k)
        rows.append({"check": f"independence k={k}", "value": f"{got}/{want}",
                     "degree": k, "match": got == want})
    return {"q": args.q, "r": args.r}, rows


def cmd_strata(args):
    check_qr(args.q, args.r)
    F = gf(args.q)
    U = universal_coeffs(args.r, args.q)
    if args.subspace:
        bases = [parse_subspace(args.subspace, F, args.r)]
    else:
        bases = enumerate_subspaces(F, args.r)
    rows = []
    for basis in bases:
        S, ok, rank = stratum_matches(U, basis)
        rows.append({"subspace": ";".join(" ".join(F.format(x) for x in b) for b in basis),
                     "dim": len(basis), "rank": rank,
                     "coefficients": [str(c) for c in S.coeffs],
                     "match": ok and rank == len(basis)})
    return {"q": args.q, "r": args.r}, rows


def cmd_hecke(args):
    check_qr(args.q, args.r)
    try:
        a, b = as_type(args.a), as_type(args.b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if len(a) != args.r or len(b) != args.r:
        raise InputError("--a and --b must have r entries")
    oracle = convolve(a, b, args.q)
    product = hco_expand(a, b, args.q)
    want = coset_count(a, args.q) * coset_count(b, args.q)
    match = product == oracle and mass(product, args.q) == want
    rows = [{"type": list(z), "mult": m} for z, m in product.items()]
    meta = {"q": args.q, "r": args.r, "a": list(a), "b": list(b),
            "product": rows, "oracle_match": match}
    return meta, [dict(r, match=match) for r in rows]


def cmd_verify(args):
    from .verify import CRITERIA, run

    wanted = sorted(CRITERIA) if not args.criteria else \
        [int(x) for x in args.criteria.split(",") if x.strip()]
    for n in wanted:
        if n not in CRITERIA:
            raise InputError(f"unknown criterion {n}")
    checks = run(wanted, seed=args.seed)
    summary = []
    for n in wanted:
        mine = [c for c in checks if c.criterion == n]
        summary.append({"criterion": n, "title": CRITERIA[n][0], "checks": len(mine),
                        "passed": sum(c.ok for c in mine)})
    return {"summary": summary}, [c.as_row() for c in checks]


COMMANDS = {
    "dims": (cmd_dims, "graded dimensions: row-reduction oracle vs closed formula"),
    "invariants": (cmd_invariants, "invariant dimensions for a level subgroup"),
    "universal": (cmd_universal, "coefficients of the universal family and their checks"),
    "strata": (cmd_strata, "specialise the universal family to boundary strata"),
    "hecke": (cmd_hecke, "spherical Hecke product, orbit expansion vs pair count"),
    "verify": (cmd_verify, "run the acceptance grid"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dforms",
        description="Drinfeld modular forms at level t: dimensions, invariants, Hecke products.",
        epilog="Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input or cap exceeded. "
               "DFORMS_CAPS='group=N,monomials=N,orbit=N' overrides resource caps.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--q", type=int, help="size of the constant field (prime power <= 16)")
        p.add_argument("--r", type=int, help="rank")
        p.add_argument("--k", default="0..4", help="degrees: 'a..b' or a comma list (default 0..4)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--seed", type=int, default=0, help="seed for randomised checks (default 0)")
        p.add_argument("--cap-group", type=int, help="largest group to enumerate")
        p.add_argument("--cap-monomials", type=int, help="largest monomial basis to build")
        if name == "invariants":
            p.add_argument("--group", default="gl",
                           help="gl, sl, unipotent, trivial or file:PATH")
        if name == "strata":
            p.add_argument("--subspace", help="basis rows separated by ';', e.g. '1 0;0 1'")
        if name == "hecke":
            p.add_argument("--a", required=True, help="divisor type, e.g. 0,1")
            p.add_argument("--b", required=True, help="divisor type, e.g. 0,1")
        if name == "verify":
            p.add_argument("--criteria", help="comma list of criteria (default all)")
    return parser


def render(command, args, meta, rows, fmt):
    checks = [r["match"] for r in rows if r.get("match") is not None]
    status = "pass" if all(checks) else "fail"
    if fmt == "csv":
        buf = io.StringIO()
        fields = []
        for r in rows:
            for key in r:
                if key not in fields:
                    fields.append(key)
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                             for k, v in r.items()})
        return buf.getvalue(), status
    doc = {"schema": SCHEMA, "command": command, "seed": args.seed}
    doc.update(meta)
    doc["rows"] = rows
    doc["status"] = status
    return json.dumps(doc, indent=2, sort_keys=False) + "\n", status


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    fn = COMMANDS[args.command][0]
    try:
        with override(group=args.cap_group, monomials=args.cap_monomials):
            meta, rows = fn(args)
    except (InputError, FieldError, CapExceeded, ValueError) as exc:
        print(f"dforms {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text, status = render(args.command, args, meta, rows, args.format)
    sys.stdout.write(text)
    return 0 if status == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
