"""Command-line driver: ``hermgt {dims,basis,verify,appell,monogenic,gram}``."""
from __future__ import annotations

import argparse
import json
import shlex
import sys
import time

from .dimensions import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    dim_M,
    kernel_dim_oracle,
    monogenic_dim,
    monogenic_dim_oracle,
    sum_identity,
)
from .fischer import gram
from .gt import gt_basis, monogenic_basis
from .operators import apply_dirac
from .poly import SpaceDescriptor, monomial_count
from .report import RunReport
from .verify import (
    appell_check,
    ck_restriction_check,
    closed_form_agreement,
    data_for,
    edge_agreement,
    family_soundness,
    lattice_check,
)

CHECKS = ("hmono", "gram", "count", "lattice", "ck", "closedform")


def _descriptor(args) -> SpaceDescriptor:
    return SpaceDescriptor(args.n, args.a, args.b, args.r)


def _guard(desc: SpaceDescriptor, budget: int) -> None:
    size = monomial_count(desc)
    if size > budget:
        raise BudgetExceeded(f"{desc} spans {size} monomials, over the budget {budget} (raise --budget)")


def cmd_dims(args) -> RunReport:
    d = _descriptor(args)
    rep = RunReport(args.echo, [d])
    m = dim_M(d.n, d.a, d.b, d.r)
    rep.payload["dim"] = m
    if args.oracle:
        o = kernel_dim_oracle(d.n, d.a, d.b, d.r, args.budget)
        rep.payload["oracle"] = o
        rep.lines.append(f"{m} = {o}")
        rep.check("oracle", m == o, f"formula {m}, kernel rank {o}")
    else:
        rep.lines.append(str(m))
    if 0 < d.r < d.n:
        lhs, rhs = sum_identity(d.n, d.a, d.b, d.r)
        rep.payload["sum_identity"] = [lhs, rhs]
        rep.check("sum-identity", lhs == rhs, f"{lhs} = {rhs}")
    return rep


def _render_family(fam, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(fam.to_json(), indent=2, sort_keys=True)
    if fmt == "latex":
        return "\n".join(f"% {lab}\n{P.to_latex()}" for lab, P in fam.members)
    return "\n".join(P.to_text() for _, P in fam.members)


def cmd_basis(args) -> RunReport:
    d = _descriptor(args)
    _guard(d, args.budget)
    fam = gt_basis(d.n, d.a, d.b, d.r)
    rep = RunReport(args.echo, [d])
    body = _render_family(fam, args.format)
    rep.payload["count"] = len(fam)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
        rep.lines.append(f"wrote {len(fam)} elements to {args.out}")
    else:
        rep.raw = body
    return rep


def cmd_verify(args) -> RunReport:
    d = _descriptor(args)
    _guard(d, args.budget)
    wanted = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in wanted if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {','.join(CHECKS)}")
    fam = gt_basis(d.n, d.a, d.b, d.r)
    rep = RunReport(args.echo, [d])
    rep.payload["count"] = len(fam)
    sound = None
    for name in wanted:
        if name in ("hmono", "gram", "count"):
            sound = sound or family_soundness(fam)
            tags = {"hmono": ("hmono", "homogeneity"), "gram": ("gram off-diagonal", "gram diagonal"), "count": ("count", "label", "distinct labels")}
            bad = [f for f in sound.failures if f[0] in tags[name]]
            detail = f"count {len(fam)}" if name == "count" else ""
            rep.check(name, not bad, detail, bad)
        elif name == "lattice":
            if 0 < d.r < d.n:
                L = lattice_check(d.n, d.a, d.b, d.r)
                rep.payload["lattice"] = L.to_json()
                rep.check("lattice", L.passed, f"{L.nonzero_components} components")
            else:
                rep.check("lattice", True, "edge grade: single component chain")
        elif name == "ck":
            if d.n < 2:
                rep.check("ck", True, "n = 1: no extension")
                continue
            data = data_for(d.n, d.a, d.b, d.r)
            summed = ck_restriction_check(data)
            singles = [ck_restriction_check([x]) for x in data]
            bad = summed.failures + [f for s in singles for f in s.failures]
            rep.check("ck", not bad, f"{len(data)} data", bad)
        elif name == "closedform":
            if d.r in (0, d.n):
                c = edge_agreement(d.n, d.a, d.b, d.r)
            elif d.n == 2:
                c = closed_form_agreement(d.a, d.b)
            else:
                rep.check("closedform", True, "no closed form for this descriptor")
                continue
            rep.payload["closedform"] = c.info
            rep.check("closedform", c.passed, "", c.failures)
    return rep


def cmd_appell(args) -> RunReport:
    rep = RunReport(args.echo)
    c = appell_check(args.amax, args.bmax)
    rep.payload.update(c.info)
    ids = c.info["identities"]
    rep.check("appell", c.passed, f"4 identities x {ids['i']} elements, {c.info['edge_checks']} edge checks", c.failures)
    return rep


def cmd_monogenic(args) -> RunReport:
    rep = RunReport(args.echo)
    B = monogenic_basis(args.n, args.k)
    polys = B.polynomials
    rep.payload["count"] = len(B)
    rep.lines.append(f"{len(B)} elements")
    if args.verify:
        expected = monogenic_dim(args.n, args.k)
        rep.check("count", len(B) == expected, f"{len(B)} of {expected}")
        try:
            o = monogenic_dim_oracle(args.n, args.k, args.budget)
            rep.check("oracle", o == expected, f"dirac kernel rank {o}")
        except BudgetExceeded as exc:
            rep.lines.append(f"oracle skipped: {exc}")
        bad = [i for i, P in enumerate(polys) if not apply_dirac(P).is_zero()]
        rep.check("dirac", not bad, "all dirac-annihilated" if not bad else "", bad)
        g = gram(polys)
        rep.check("gram", g.is_diagonal() and g.has_positive_diagonal(), "Gram diagonal", g.off_diagonal_nonzeros()[:5])
    return rep


def cmd_gram(args) -> RunReport:
    d = _descriptor(args)
    _guard(d, args.budget)
    fam = gt_basis(d.n, d.a, d.b, d.r)
    g = gram(fam)
    rep = RunReport(args.echo, [d])
    rep.payload["labels"] = [str(lab) for lab in g.labels]
    rep.payload["gram"] = g.to_json()
    rep.lines.extend(f"{lab}: {x}" for lab, x in zip(g.labels, g.diagonal()))
    rep.check("diagonal", g.is_diagonal(), "", g.off_diagonal_nonzeros()[:5])
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="size guard for brute-force and construction steps")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    p = argparse.ArgumentParser(prog="hermgt", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def space(sp):
        for name in ("n", "a", "b", "r"):
            sp.add_argument(f"--{name}", type=int, required=True)

    sp = sub.add_parser("dims", help="dimension formula (and kernel-rank oracle)")
    space(sp)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("basis", help="construct a GT basis")
    space(sp)
    sp.add_argument("--format", choices=("json", "latex", "text"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("verify", help="run invariant suites on a GT basis")
    space(sp)
    sp.add_argument("--checks", default=",".join(CHECKS))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("appell", help="Appell identities sweep")
    sp.add_argument("--amax", type=int, required=True)
    sp.add_argument("--bmax", type=int, required=True)
    sp.set_defaults(func=cmd_appell)

    sp = sub.add_parser("monogenic", help="assemble a monogenic basis")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_monogenic)

    sp = sub.add_parser("gram", help="Gram matrix of a GT basis")
    space(sp)
    sp.set_defaults(func=cmd_gram)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.echo = "hermgt " + shlex.join(argv)
    start = time.perf_counter()
    try:
        rep = args.func(args)
    except (ValueError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        rep.timing = time.perf_counter() - start
    raw = rep.raw
    if args.json:
        out = rep.to_json()
        if raw is not None and args.command == "basis" and args.format == "json":
            out["payload"]["family"] = json.loads(raw)
        elif raw is not None:
            out["payload"]["body"] = raw
        print(json.dumps(out, indent=2, sort_keys=True))
    elif raw is not None:
        print(raw)
    else:
        print(rep.render_text())
    return 0 if rep.passed else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
