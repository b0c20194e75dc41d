"""Command-line front end.

    chainfib magic class X Y Z
    chainfib chain class A1 ... AN
    chainfib seq --m M [--pad P] [--i I] [--t T]
    chainfib target --k K --g G --n N
    chainfib bounds --k K --g G --n N
    chainfib stretch --n N [--word W] [--mu MU]
    chainfib family --id NAME --k K
    chainfib domain --g G --max-k K
    chainfib verify [--only NAME ...]

Every command emits one OutputRecord as json, csv or an aligned table.
Exit status: 0 success, 1 model or domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import bounds, chainlink, core, families, magic, thurston, verify
from .errors import DomainError, ModelError

FORMATS = ("json", "csv", "table")
SIG_DIGITS = 12


def real(x: float) -> float:
    """Round to 12 significant digits so printed output is stable."""
    return float(f"{x:.{SIG_DIGITS}g}")


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    provenance: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


# -- serialization -----------------------------------------------------------


def to_json(record: OutputRecord) -> str:
    return json.dumps(record.to_dict(), sort_keys=True, indent=2) + "\n"


def _flatten(value: Any, prefix: str = "") -> dict[str, Any]:
    if isinstance(value, dict):
        out: dict[str, Any] = {}
        for k in sorted(value):
            out.update(_flatten(value[k], f"{prefix}.{k}" if prefix else str(k)))
        return out
    return {prefix: value}


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _table_rows(record: OutputRecord) -> tuple[list[str], list[list[str]]] | None:
    rows = record.result.get("rows")
    if not isinstance(rows, list):
        return None
    header = list(rows[0]) if rows else list(record.result.get("columns", []))
    return header, [[_cell(r[h]) for h in header] for r in rows]


def to_csv(record: OutputRecord) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    tabular = _table_rows(record)
    if tabular is not None:
        header, rows = tabular
        writer.writerow(header)
        writer.writerows(rows)
    else:
        flat = _flatten(record.result)
        writer.writerow(list(flat))
        writer.writerow([_cell(v) for v in flat.values()])
    return buf.getvalue()


def _aligned(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max([len(h)] + [len(r[j]) for r in rows]) for j, h in enumerate(header)]
    fmt = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    return [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]


def to_table(record: OutputRecord) -> str:
    lines = [f"command: {record.command}"]
    for k, v in _flatten(record.inputs).items():
        lines.append(f"input {k}: {_cell(v)}")
    tabular = _table_rows(record)
    scalars = {k: v for k, v in record.result.items() if k not in ("rows", "columns")}
    flat = _flatten(scalars)
    if flat:
        width = max(len(k) for k in flat)
        lines += [f"{k.ljust(width)}  {_cell(v)}" for k, v in flat.items()]
    if tabular is not None:
        lines += _aligned(*tabular)
    for p in record.provenance:
        lines.append(f"via {p}")
    return "\n".join(lines) + "\n"


SERIALIZERS: dict[str, Callable[[OutputRecord], str]] = {
    "json": to_json,
    "csv": to_csv,
    "table": to_table,
}


# -- payload helpers ---------------------------------------------------------


def _surface(s: core.SurfaceType) -> dict[str, Any]:
    return {
        "genus": s.genus,
        "punctures": s.punctures,
        "euler_characteristic": s.euler_characteristic(),
        "type": str(s),
    }


def _stretch(sf: thurston.StretchFactor) -> dict[str, Any]:
    out: dict[str, Any] = {
        "lambda": real(sf.value),
        "entropy": real(sf.entropy),
        "reciprocal": real(sf.reciprocal),
    }
    if sf.exact_form is not None:
        p, q = sf.exact_form
        out["exact_form"] = [p, q]
        out["exact"] = f"({p} + sqrt({q}))/2"
    return out


def _fraction(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


# -- commands ----------------------------------------------------------------


def cmd_magic(args) -> OutputRecord:
    v = magic.as_magic(args.coords)
    surface = magic.magic_classify(v)
    result = {
        "class": list(v.coords),
        "in_cone": magic.magic_in_cone(v),
        "primitive": core.is_primitive(v),
        "norm": magic.magic_norm(v),
        "boundaries": magic.magic_boundaries(v),
        **_surface(surface),
    }
    return OutputRecord("magic class", {"coords": list(args.coords)}, result, [
        "norm = x + y - z on the cone x > 0, y > 0, x > z, y > z",
        "boundaries = gcd(x, y+z) + gcd(y, z+x) + gcd(z, x+y)",
        "genus = (norm + 2 - boundaries) / 2",
    ])


def cmd_chain(args) -> OutputRecord:
    v = chainlink.as_chain(args.coords)
    region = chainlink.chain_region(v)
    surface = chainlink.chain_classify(v)
    result = {
        "class": list(v.coords),
        "components": v.components,
        "region": region.value,
        "primitive": core.is_primitive(v),
        "norm": chainlink.chain_norm(v),
        "boundaries": chainlink.chain_boundaries(v),
        "boundary_terms": chainlink.boundary_terms(v),
        **_surface(surface),
    }
    return OutputRecord("chain class", {"coords": list(args.coords)}, result, [
        "norm = sum of coordinates on the open positive orthant",
        "boundaries = sum_i gcd(a[i-1] + a[i+1], a[i]), cyclic",
    ])


def cmd_seq(args) -> OutputRecord:
    idx = families.SequenceIndex(args.m, args.pad, args.i, args.t)
    v = families.chain_sequence_t(idx)
    surface = chainlink.chain_classify(v)
    claimed = idx.claimed_type()
    result: dict[str, Any] = {
        "class": list(v.coords),
        "length": idx.length,
        "claimed": str(claimed),
        "matches_claim": surface == claimed,
        **_surface(surface),
    }
    provenance = [
        "tuple = (t+1)*pad, (t+1, t+1, t, t)*m, t*i",
        "type = S_{2mt-(m-1), (N-4m)t+4m+pad}",
    ]
    if idx.t == 1:
        cap = bounds.normalized_entropy_cap(idx)
        result["entropy_cap"] = {"exact": real(cap.exact), "cap": real(cap.cap), "holds": cap.exact < cap.cap}
        provenance.append("|chi| log(lambda_N) < 2N log(N+2)")
    inputs = {"m": args.m, "pad": args.pad, "i": args.i, "t": args.t}
    return OutputRecord("seq", inputs, result, provenance)


def cmd_target(args) -> OutputRecord:
    idx = families.target_index(args.k, args.g, args.n)
    v = families.chain_sequence(idx)
    surface = chainlink.chain_classify(v)
    result = {
        "class": list(v.coords),
        "length": len(v),
        "betti_number": len(v),
        "index": {"m": idx.m, "pad": idx.pad, "i": idx.i},
        "primitive": core.is_primitive(v),
        "in_cone": chainlink.chain_in_cone(v),
        **_surface(surface),
    }
    return OutputRecord("target", {"k": args.k, "g": args.g, "n": args.n}, result, [
        "domain 4g-4 <= k+1 <= n <= 2k-4g+6",
        "m = g-1, pad = n-k-1, i = 2k-4g+6-n",
    ])


def cmd_bounds(args) -> OutputRecord:
    rep = bounds.bounds_report((args.k, args.g, args.n))
    opt = lambda x: None if x is None else real(x)
    result = {
        "chi_abs": rep.chi_abs,
        "lower": real(rep.lower),
        "upper": opt(rep.upper),
        "in_theorem_domain": rep.in_theorem_domain,
        "failed_conditions": list(rep.failed_conditions),
        "witness": None if rep.witness is None else list(rep.witness.coords),
        "corollary": opt(rep.corollary),
        "corollary_kind": bounds.corollary_applies(args.k, args.g, args.n),
        "normalized_entropy_cap": opt(rep.normalized_entropy_cap),
    }
    return OutputRecord("bounds", {"k": args.k, "g": args.g, "n": args.n}, result, [
        "lower = (k+1) / (334.08 * 3 pi * |chi|)",
        "upper = 2(k+1) log(k+3) / |chi| on 4g-4 <= k+1 <= n <= 2k-4g+6",
    ])


def _parse_mu(text: str) -> int | Fraction | float:
    try:
        f = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"mu must be a number, got {text!r}") from None
    if "." in text or "e" in text.lower():
        return float(text)
    return int(f) if f.denominator == 1 else f


def cmd_stretch(args) -> OutputRecord:
    inputs: dict[str, Any] = {"n": args.n, "word": args.word, "mu": None if args.mu is None else str(args.mu)}
    if args.word is None and args.mu is None:
        if args.n is None:
            raise DomainError("stretch needs --n, or --word with --mu", ["n given"])
        sf = thurston.monodromy_stretch(args.n)
        rep = thurston.represent(thurston.MONODROMY_WORD, args.n)
        result = {
            "word": str(thurston.MONODROMY_WORD),
            "mu": args.n,
            "trace": _fraction(rep.exact_trace()),
            "det": _fraction(rep.exact_det()),
            **_stretch(sf),
        }
        return OutputRecord("stretch", inputs, result, [
            "T_A T_B^-1 with mu = n has trace n+2",
            "lambda = (n+2 + sqrt(n^2+4n)) / 2",
        ])
    mu_value = args.mu if args.mu is not None else args.n
    if mu_value is None:
        raise DomainError("a word needs --mu or --n", ["mu given"])
    word = thurston.TwistWord.parse(args.word or str(thurston.MONODROMY_WORD))
    wt = thurston.classify_word(word, mu_value)
    result = {
        "word": str(word),
        "mu": mu_value if isinstance(mu_value, int) else str(mu_value),
        "kind": wt.kind.value,
        "pseudo_anosov": wt.is_pseudo_anosov,
        "trace": real(wt.trace),
    }
    if wt.stretch is not None:
        result.update(_stretch(wt.stretch))
    return OutputRecord("stretch", inputs, result, [
        "T_A -> [[1, sqrt(mu)], [0, 1]], T_B -> [[1, 0], [-sqrt(mu), 1]]",
        "|trace| > 2 hyperbolic, = 2 parabolic, < 2 elliptic",
    ])


def cmd_family(args) -> OutputRecord:
    fam = families.MagicFamily.lookup(args.id)
    v = families.magic_family(fam, args.k)
    surface = magic.magic_classify(v)
    result = {
        "family": fam.name,
        "label": fam.label,
        "class": list(v.coords),
        "claimed": str(fam.claim(args.k)),
        "matches_claim": surface == fam.claim(args.k),
        **_surface(surface),
    }
    return OutputRecord("family", {"id": args.id, "k": args.k}, result, [
        f"family {fam.label}",
        "genus = (norm + 2 - boundaries) / 2",
    ])


DOMAIN_COLUMNS = ["k", "n", "chi_abs", "upper", "lower"]


def export_domain(g: int, k_max: int) -> list[dict[str, Any]]:
    rows = []
    for k, n in bounds.domain_points(g, k_max):
        q = bounds.BoundsQuery(k, g, n)
        rows.append({
            "k": k,
            "n": n,
            "chi_abs": q.chi_abs,
            "upper": real(bounds.upper_bound(q).value),
            "lower": real(bounds.lower_bound(q)),
        })
    return rows


def cmd_domain(args) -> OutputRecord:
    rows = export_domain(args.g, args.max_k)
    result = {"g": args.g, "count": len(rows), "columns": DOMAIN_COLUMNS, "rows": rows}
    return OutputRecord("domain", {"g": args.g, "max_k": args.max_k}, result, [
        "4g-4 <= k+1 <= n <= 2k-4g+6",
    ])


def cmd_verify(args) -> OutputRecord:
    known = [name for name, _ in verify.CHECKS]
    unknown = [n for n in args.only or [] if n not in known]
    if unknown:
        raise ValueError(f"unknown check(s) {unknown}; known: {known}")
    results = verify.run_checks(args.only or None)
    rows = [
        {"name": r.name, "passed": r.passed, "cases": r.cases, "seconds": round(r.seconds, 3), "detail": r.detail}
        for r in results
    ]
    passed = all(r.passed for r in results)
    result = {
        "passed": passed,
        "total_seconds": round(sum(r.seconds for r in results), 3),
        "columns": ["name", "passed", "cases", "seconds", "detail"],
        "rows": rows,
    }
    return OutputRecord("verify", {"only": args.only or []}, result, ["invariant sweeps of all modules"])


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # output options are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="chainfib", description="Fibered-class arithmetic on the magic manifold and chained-link complements.")
    parser.add_argument("--format", choices=FORMATS, default="table", help="output format (default: table)")
    parser.add_argument("--out", metavar="PATH", default=None, help="write the payload to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("magic", parents=[common], help="classify a magic manifold class")
    msub = p.add_subparsers(dest="action", required=True)
    q = msub.add_parser("class", parents=[common])
    q.add_argument("coords", type=int, nargs=3, metavar="X")
    q.set_defaults(func=cmd_magic)

    p = sub.add_parser("chain", parents=[common], help="classify a class of M(N)")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("class", parents=[common])
    q.add_argument("coords", type=int, nargs="+", metavar="A")
    q.set_defaults(func=cmd_chain)

    p = sub.add_parser("seq", parents=[common], help="sequence tuple in M(N)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pad", type=int, default=0)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--t", type=int, default=1)
    p.set_defaults(func=cmd_seq)

    for name, fn, text in (("target", cmd_target, "class realizing S_{g,n} with b1 = k+1"),
                           ("bounds", cmd_bounds, "lower and upper bounds on L(k,g,n)")):
        p = sub.add_parser(name, parents=[common], help=text)
        for flag in ("--k", "--g", "--n"):
            p.add_argument(flag, type=int, required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("stretch", parents=[common], help="stretch factor of a twist word")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--word", default=None, help='word in A, B and inverses, e.g. "A B^-1"')
    p.add_argument("--mu", type=_parse_mu, default=None)
    p.set_defaults(func=cmd_stretch)

    p = sub.add_parser("family", parents=[common], help="member of a magic manifold family")
    p.add_argument("--id", required=True, help="e.g. ThreeBdry1, FourBdry3, PlanarA")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("domain", parents=[common], help="export the (k, n) domain at fixed genus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(func=cmd_domain)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--only", action="append", metavar="NAME")
    p.set_defaults(func=cmd_verify)
    return parser


def _error_record(args, exc: Exception) -> OutputRecord:
    error: dict[str, Any] = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, DomainError):
        error["failed"] = list(exc.failed)
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "format", "out", "command", "action")}
    inputs = {k: str(v) if isinstance(v, Fraction) else v for k, v in inputs.items()}
    return OutputRecord(args.command, inputs, {"error": error}, [])


def _emit(payload: str, out: str | None, stdout) -> None:
    if out is None:
        stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        record = args.func(args)
        code = 0
        if args.command == "verify" and not record.result["passed"]:
            code = 1
    except ModelError as exc:
        record, code = _error_record(args, exc), 1
    except ValueError as exc:
        # argument values that break a precondition (m < 1, g < 2, unknown family, ...)
        stderr.write(f"chainfib: error: {exc}\n")
        return 2
    _emit(SERIALIZERS[args.format](record), args.out, stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
