"""Command-line driver: check, construct, residual, search, catalog.

Exit codes: 0 = pass/success, 1 = a check or mathematical gate failed,
2 = usage, parse or dimension errors.  Report output is deterministic
for a fixed input; the wall-clock time goes to stderr only, and the
echoed command omits ``--out`` and ``--workers`` so that reruns and
different worker counts are byte-identical.

The listing cap for violations is ``PREALT_MAX_WITNESSES`` (default 10);
the verdict is always computed over the full witness grid regardless.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import catalog as catalog_mod
from .alternative import (
    AlternativeAlgebra,
    AltBimoduleAction,
    alt_dual_bimodule,
    alt_semidirect,
    check_alt_bimodule,
    check_alternative,
    check_form,
)
from .bialgebras import (
    Comultiplication,
    ComultiplicationPair,
    PreAltBialgebra,
    alt_dbialgebra_check,
    bialgebra_check,
    coalgebra_check,
    coboundary_comult,
    coboundary_condition_residuals,
    drinfeld_double,
    dual_bialgebra,
    pad_double,
)
from .constructions import (
    Grading,
    al_induce,
    compatible_from_al,
    graded_split,
    symplectic_split,
)
from .errors import (
    BadCharacteristic,
    DimensionMismatch,
    MissingSection,
    ParseError,
    PrealtError,
    SearchSpaceTooLarge,
    SlotError,
    UnknownName,
)
from .fields import QQ, PrimeField
from .prealternative import (
    PreAlternativeAlgebra,
    PreAltBimoduleAction,
    associated_algebra,
    check_2cocycle,
    check_prealt_bimodule,
    check_prealternative,
    prealt_dual_bimodule,
    prealt_semidirect,
)
from .reports import DEFAULT_MAX_WITNESSES
from .serialization import (
    dumps,
    encode_algebra_file,
    encode_report,
    loads,
    parse_algebra_file,
)
from .yangbaxter import aybe_residual, brute_search, canonical_r, pa_residuals

USAGE_ERRORS = (
    ParseError, UnknownName, MissingSection, DimensionMismatch,
    SlotError, BadCharacteristic, SearchSpaceTooLarge,
)


def _max_witnesses() -> int:
    raw = os.environ.get("PREALT_MAX_WITNESSES", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_WITNESSES
    except ValueError:
        raise ParseError(f"bad PREALT_MAX_WITNESSES value {raw!r}") from None


def _read_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return loads(handle.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _need(section, name: str):
    if section is None:
        raise MissingSection(f"input file has no {name!r} section")
    return section


def _algebra_name(path_or_name: str):
    """Catalog name, or a path to an algebra file."""
    try:
        return catalog_mod.lookup(path_or_name)
    except UnknownName:
        if os.path.exists(path_or_name):
            return _read_file(path_or_name).algebra
        raise


def cmd_check(args) -> int:
    parsed = _read_file(args.path)
    mw = _max_witnesses()
    workers = args.workers
    alg = parsed.algebra
    suite = args.suite
    if suite == "alternative":
        if parsed.is_prealternative:
            raise DimensionMismatch("alternative suite needs a mult table")
        report = check_alternative(alg, max_witnesses=mw, workers=workers)
    elif suite == "prealt":
        if not parsed.is_prealternative:
            raise DimensionMismatch("prealt suite needs prec/succ tables")
        report = check_prealternative(alg, max_witnesses=mw, workers=workers)
    elif suite == "bimodule":
        act = _need(parsed.actions, "actions")
        if parsed.is_prealternative:
            if not isinstance(act, PreAltBimoduleAction):
                raise MissingSection("prealt bimodule suite needs Lp/Rp/Ls/Rs actions")
            report = check_prealt_bimodule(alg, act, max_witnesses=mw, workers=workers)
        else:
            if not isinstance(act, AltBimoduleAction):
                raise MissingSection("alternative bimodule suite needs L/R actions")
            report = check_alt_bimodule(alg, act, max_witnesses=mw, workers=workers)
    elif suite == "coalgebra":
        kind = args.kind or ("alt" if parsed.delta is not None else "prealt")
        if kind == "alt":
            delta = _need(parsed.delta, "delta")
            report = coalgebra_check(delta, "alt", max_witnesses=mw, workers=workers)
        else:
            pair = ComultiplicationPair(
                parsed.field, parsed.dim,
                _need(parsed.alpha, "alpha"), _need(parsed.beta, "beta"),
            )
            report = coalgebra_check(pair, "prealt", max_witnesses=mw, workers=workers)
    elif suite == "bialgebra":
        if not parsed.is_prealternative:
            raise DimensionMismatch("bialgebra suite needs prec/succ tables")
        pair = ComultiplicationPair(
            parsed.field, parsed.dim,
            _need(parsed.alpha, "alpha"), _need(parsed.beta, "beta"),
        )
        report = bialgebra_check(alg, pair, max_witnesses=mw, workers=workers)
    elif suite == "dbialgebra":
        if parsed.is_prealternative:
            raise DimensionMismatch("dbialgebra suite needs a mult table")
        delta = _need(parsed.delta, "delta")
        co = coalgebra_check(delta, "alt", max_witnesses=mw, workers=workers)
        eqs = alt_dbialgebra_check(alg, delta, max_witnesses=mw, workers=workers)
        double_ok = check_alternative(drinfeld_double(alg, delta)).passed
        if double_ok != (co.passed and eqs.passed and check_alternative(alg).passed):
            raise AssertionError("double and equation verdicts disagree; internal error")
        from .reports import CheckReport
        report = CheckReport(
            passed=double_ok,
            violations=list(co.violations) + list(eqs.violations),
            truncated=co.truncated or eqs.truncated,
            total_violations=co.total_violations + eqs.total_violations,
            evaluations=co.evaluations + eqs.evaluations,
            info={"double_alternative": double_ok, **co.info},
        )
    elif suite == "form":
        if args.kind not in ("invariant", "closed", "symplectic"):
            raise ParseError("form suite needs --kind invariant|closed|symplectic")
        if parsed.is_prealternative:
            raise DimensionMismatch("form suite needs a mult table")
        report = check_form(alg, _need(parsed.form, "form"), args.kind,
                            max_witnesses=mw, workers=workers)
    elif suite == "cocycle2":
        if not parsed.is_prealternative:
            raise DimensionMismatch("cocycle2 suite needs prec/succ tables")
        report = check_2cocycle(alg, _need(parsed.form, "form"),
                                max_witnesses=mw, workers=workers)
    else:
        raise ParseError(f"unknown suite {suite!r}")
    command = f"check {os.path.basename(args.path)} --suite {suite}"
    if args.kind:
        command += f" --kind {args.kind}"
    _emit(dumps(encode_report(parsed.field, command, report)), args.out)
    return 0 if report.passed else 1


def cmd_construct(args) -> int:
    parsed = _read_file(args.path)
    alg = parsed.algebra
    op = args.op
    doc = None
    if op == "semidirect":
        act = _need(parsed.actions, "actions")
        if parsed.is_prealternative:
            doc = encode_algebra_file(prealt_semidirect(alg, act))
        else:
            doc = encode_algebra_file(alt_semidirect(alg, act))
    elif op == "dual-bimodule":
        act = _need(parsed.actions, "actions")
        dual = (prealt_dual_bimodule(act) if isinstance(act, PreAltBimoduleAction)
                else alt_dual_bimodule(act))
        doc = encode_algebra_file(alg, actions=dual)
    elif op == "associated":
        if not parsed.is_prealternative:
            raise DimensionMismatch("associated needs prec/succ tables")
        doc = encode_algebra_file(associated_algebra(alg))
    elif op == "graded-split":
        if parsed.is_prealternative:
            raise DimensionMismatch("graded-split needs a mult table")
        grading = Grading(_need(parsed.grading, "grading"))
        doc = encode_algebra_file(graded_split(alg, grading))
    elif op == "symplectic-split":
        if parsed.is_prealternative:
            raise DimensionMismatch("symplectic-split needs a mult table")
        doc = encode_algebra_file(symplectic_split(alg, _need(parsed.form, "form")))
    elif op == "al-induce":
        act = _need(parsed.actions, "actions")
        if not isinstance(act, AltBimoduleAction):
            raise MissingSection("al-induce needs L/R actions")
        doc = encode_algebra_file(al_induce(alg, act, _need(parsed.linmap, "map")))
    elif op == "compatible-from-al":
        act = _need(parsed.actions, "actions")
        if not isinstance(act, AltBimoduleAction):
            raise MissingSection("compatible-from-al needs L/R actions")
        doc = encode_algebra_file(compatible_from_al(alg, act, _need(parsed.linmap, "map")))
    elif op == "double":
        if parsed.is_prealternative:
            raise DimensionMismatch("double needs a mult table")
        doc = encode_algebra_file(drinfeld_double(alg, _need(parsed.delta, "delta")))
    elif op == "pad-double":
        if not parsed.is_prealternative:
            raise DimensionMismatch("pad-double needs prec/succ tables")
        if parsed.alpha is not None and parsed.beta is not None:
            pair = ComultiplicationPair(parsed.field, parsed.dim, parsed.alpha, parsed.beta)
        elif parsed.r is not None:
            pair = coboundary_comult(alg, parsed.r)
        else:
            raise MissingSection("pad-double needs alpha/beta sections or an r section")
        double = pad_double(PreAltBialgebra(alg, pair))
        doc = encode_algebra_file(double.algebra,
                                  alpha=double.comult.alpha, beta=double.comult.beta)
    elif op == "canonical-r":
        if not parsed.is_prealternative:
            raise DimensionMismatch("canonical-r needs prec/succ tables")
        if args.sign not in ("minus", "plus"):
            raise ParseError("canonical-r needs --sign minus|plus")
        record = canonical_r(alg, args.sign)
        doc = encode_algebra_file(record.ambient, r=record.r)
    elif op == "dual-bialgebra":
        if not parsed.is_prealternative:
            raise DimensionMismatch("dual-bialgebra needs prec/succ tables")
        pair = ComultiplicationPair(
            parsed.field, parsed.dim,
            _need(parsed.alpha, "alpha"), _need(parsed.beta, "beta"),
        )
        dual = dual_bialgebra(PreAltBialgebra(alg, pair))
        doc = encode_algebra_file(dual.algebra,
                                  alpha=dual.comult.alpha, beta=dual.comult.beta)
    else:
        raise ParseError(f"unknown construct op {op!r}")
    _emit(dumps(doc), args.out)
    return 0


def cmd_residual(args) -> int:
    parsed = _read_file(args.path)
    alg = parsed.algebra
    r = _need(parsed.r, "r")
    field = parsed.field

    def entries3(t3):
        return [[i, j, k, field.encode(c)] for (i, j, k), c in t3.sorted_items()]

    equations = {}
    if args.eq in ("aybe", "aybe-a2"):
        if parsed.is_prealternative:
            raise DimensionMismatch("Yang-Baxter residuals need a mult table")
        variant = "A1" if args.eq == "aybe" else "A2"
        t = aybe_residual(alg, r, variant)
        key = "C_A" if variant == "A1" else "A_2"
        equations[key] = {"zero": t.is_zero(), "entries": entries3(t)}
    elif args.eq == "pa":
        if not parsed.is_prealternative:
            raise DimensionMismatch("the six-equation residuals need prec/succ tables")
        res = pa_residuals(alg, r)
        for key, t in {**res.components(), **res.sums()}.items():
            equations[key] = {"zero": t.is_zero(), "entries": entries3(t)}
    elif args.eq == "coboundary-cond":
        kind = "prealt" if parsed.is_prealternative else "alt"
        fams = coboundary_condition_residuals(alg, r, kind)
        for name, tensors in fams.items():
            entries = []
            zero = True
            for x, t in enumerate(tensors):
                zero = zero and t.is_zero()
                entries.extend([[x, i, j, k, field.encode(c)]
                                for (i, j, k), c in t.sorted_items()])
            equations[name] = {"zero": zero, "entries": entries}
    else:
        raise ParseError(f"unknown equation {args.eq!r}")
    verdict = all(v["zero"] for v in equations.values())
    doc = {
        "format_version": "1",
        "command": f"residual {os.path.basename(args.path)} --eq {args.eq}",
        "verdict": "pass" if verdict else "fail",
        "equations": equations,
    }
    _emit(dumps(doc), args.out)
    return 0 if verdict else 1


def cmd_search(args) -> int:
    field = PrimeField(args.field)
    base = _algebra_name(args.algebra)
    if base.field != field:
        base = base.map_scalars(field)
    if base.dim != args.dim:
        raise DimensionMismatch(
            f"algebra dimension {base.dim} does not match --dim {args.dim}"
        )
    hits = brute_search(field, args.target, base, cap=args.cap)
    out_hits = []
    for hit in hits:
        if args.target == "al-operator":
            out_hits.append({
                "map": [[i, j, field.encode(hit.entries[i][j])]
                        for i in range(hit.codomain_dim)
                        for j in range(hit.domain_dim) if hit.entries[i][j]],
            })
        else:
            out_hits.append({
                "r": [[i, j, field.encode(c)] for i, j, c in hit.r.nonzero_items()],
            })
    doc = {
        "format_version": "1",
        "command": (f"search --field {args.field} --dim {args.dim} "
                    f"--target {args.target} --algebra {args.algebra}"),
        "field": args.field,
        "dim": args.dim,
        "target": args.target,
        "count": len(out_hits),
        "hits": out_hits,
    }
    _emit(dumps(doc), args.out)
    return 0


def cmd_catalog(args) -> int:
    field = PrimeField(args.field) if args.field else QQ
    entry = catalog_mod.lookup(args.name, field)
    _emit(dumps(encode_algebra_file(entry)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prealt",
        description="Exact checks and constructions for alternative and "
                    "pre-alternative structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run an axiom suite on a file")
    p.add_argument("path")
    p.add_argument("--suite", required=True,
                   choices=["alternative", "prealt", "bimodule", "coalgebra",
                            "bialgebra", "dbialgebra", "form", "cocycle2"])
    p.add_argument("--kind", default=None,
                   help="form: invariant|closed|symplectic; coalgebra: prealt|alt")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="apply a construction to a file")
    p.add_argument("path")
    p.add_argument("--op", required=True,
                   choices=["semidirect", "dual-bimodule", "associated",
                            "graded-split", "symplectic-split", "al-induce",
                            "compatible-from-al", "double", "pad-double",
                            "canonical-r", "dual-bialgebra"])
    p.add_argument("--sign", default=None, choices=["minus", "plus"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("residual", help="print residual tensors for an r section")
    p.add_argument("path")
    p.add_argument("--eq", required=True,
                   choices=["aybe", "aybe-a2", "pa", "coboundary-cond"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("search", help="exhaustive solution search over GF(p)")
    p.add_argument("--field", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--target", required=True,
                   choices=["aybe-skew", "pa-sym", "al-operator"])
    p.add_argument("--algebra", required=True,
                   help="catalog name or algebra file path")
    p.add_argument("--cap", type=int, default=10_000_000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="emit a built-in example file")
    p.add_argument("name")
    p.add_argument("--field", type=int, default=None,
                   help="reduce the entry modulo this odd prime")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code = args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrealtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        elapsed = time.monotonic() - start
        print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
