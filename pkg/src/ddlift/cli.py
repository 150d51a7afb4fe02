"""Command-line driver.

Commands: build, verify, params, fingerprint, export.  All output is
canonical JSON on stdout (or --out).  Exit codes: 0 success or verification
pass, 1 verification failure, 2 usage or document error, 3 enumeration
guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path

from .designs import Design
from .docio import (
    DocumentError,
    design_to_document,
    field_to_json,
    parse_document,
    parse_document_raw,
    serialize_document,
)
from .errors import ConstructionError
from .generators import (
    code_point_set,
    elliptic_quadric,
    fano_design,
    trivial_abstract_design,
    trivial_design,
    veronese_dimension,
    veronese_variety,
)
from .gf import GF, field_from_order
from .guards import DEFAULT_LIMITS, GuardExceeded, Limits
from .lifting import LiftingContext, build_lifted_design, build_sections_design, predicted_params, product_lift
from .linalg import Matrix
from .verify import check_axioms, check_hypersimple, fingerprint
from .witt import BINARY_GOLAY_GENERATOR, enumerate_codewords, witt12_embedding, witt24_embedding

CONSTRUCTIONS = (
    "nrc-lift",
    "veronese-lift",
    "witt12",
    "witt12-lift",
    "witt24",
    "trivial-lift",
    "quadric",
    "product",
    "code",
    "affine-poly",
    "sections",
)

TRIVIAL_BASES = ("witt12", "witt24", "nrc", "veronese", "quadric", "code")


class UsageError(Exception):
    pass


def _limits(args) -> Limits:
    return Limits(
        max_points=args.max_points,
        max_blocks=args.max_blocks,
        max_subsets=args.max_subsets,
    )


def _field(args) -> GF:
    modulus = None
    if args.modulus:
        try:
            modulus = [int(x) for x in args.modulus.split(",")]
        except ValueError as exc:
            raise UsageError(f"--modulus must be comma-separated integers: {exc}") from exc
    if args.q is not None:
        if args.p is not None or args.e is not None:
            raise UsageError("give either --q or --p/--e, not both")
        try:
            return field_from_order(args.q, modulus)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.p is None:
        raise UsageError("a field is required: give --q or --p (with optional --e)")
    try:
        return GF(args.p, args.e or 1, modulus)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _need(args, *names) -> None:
    for name in names:
        if getattr(args, name.replace("-", "_"), None) is None:
            raise UsageError(f"construction {args.construction!r} requires --{name}")


def _read_matrix_file(path: str, field: GF) -> Matrix:
    text = Path(path).read_text(encoding="utf-8")
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) % field.q for tok in line.split()])
    if not rows:
        raise UsageError(f"matrix file {path} contains no rows")
    return Matrix(field, rows)


def _trivial_base(args, limits: Limits):
    """Point set and provenance for the one-block bases reachable by name."""
    base = args.base
    if base is None:
        raise UsageError("this construction requires --base " + "|".join(TRIVIAL_BASES))
    if base == "witt12":
        points = witt12_embedding(limits).points
        t = args.t if args.t is not None else 5
        field = GF(3)
        prov = {"generator": "witt12-points"}
    elif base == "witt24":
        points = witt24_embedding(limits).points
        t = args.t if args.t is not None else 5
        field = GF(2)
        prov = {"generator": "witt24-points"}
    elif base == "nrc":
        _need(args, "t")
        field = _field(args)
        t = args.t
        points = veronese_variety(field, 1, t - 1, limits)
        prov = {"generator": "nrc", "q": field.q, "t": t}
    elif base == "veronese":
        _need(args, "t", "m")
        field = _field(args)
        t = args.t
        points = veronese_variety(field, args.m, t - 1, limits)
        prov = {"generator": "veronese", "q": field.q, "m": args.m, "t": t}
    elif base == "quadric":
        field = _field(args)
        t = args.t if args.t is not None else 3
        points = elliptic_quadric(field, limits).points
        prov = {"generator": "quadric-points", "q": field.q}
    elif base == "code":
        _need(args, "t", "input")
        field = _field(args)
        t = args.t
        points = code_point_set(field, _read_matrix_file(args.input, field), t, limits)
        prov = {"generator": "code", "q": field.q, "t": t, "input": args.input}
    else:
        raise UsageError(f"unknown base {base!r}")
    return trivial_design(field, points, t, provenance=prov, limits=limits)


def _load_input_design(args) -> Design:
    if args.input is None:
        raise UsageError("this construction requires --input FILE (a design document, '-' for stdin)")
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
    return parse_document(text)


def _build_design(args, limits: Limits) -> Design:
    name = args.construction
    c = args.c if args.c is not None else 0
    route = getattr(args, "route", "direct")
    if name == "witt12":
        return witt12_embedding(limits).to_design()
    if name == "witt24":
        return witt24_embedding(limits).to_design()
    if name == "witt12-lift":
        _need(args, "c")
        return build_lifted_design(LiftingContext(witt12_embedding(limits), args.c, limits), route)
    if name == "nrc-lift":
        _need(args, "t", "c")
        field = _field(args)
        base = trivial_design(
            field,
            veronese_variety(field, 1, args.t - 1, limits),
            args.t,
            provenance={"generator": "nrc", "q": field.q, "t": args.t},
            limits=limits,
        )
        return build_lifted_design(LiftingContext(base, args.c, limits), route)
    if name == "veronese-lift":
        _need(args, "t", "c", "m")
        field = _field(args)
        base = trivial_design(
            field,
            veronese_variety(field, args.m, args.t - 1, limits),
            args.t,
            provenance={"generator": "veronese", "q": field.q, "m": args.m, "t": args.t},
            limits=limits,
        )
        return build_lifted_design(LiftingContext(base, args.c, limits), route)
    if name == "trivial-lift":
        base = _trivial_base(args, limits)
        return build_lifted_design(LiftingContext(base, c, limits), route)
    if name == "quadric":
        field = _field(args)
        embedded = elliptic_quadric(field, limits)
        return build_lifted_design(LiftingContext(embedded, c, limits), route)
    if name == "code":
        _need(args, "t", "c", "input")
        field = _field(args)
        points = code_point_set(field, _read_matrix_file(args.input, field), args.t, limits)
        base = trivial_design(
            field,
            points,
            args.t,
            provenance={"generator": "code", "q": field.q, "t": args.t, "input": args.input},
            limits=limits,
        )
        return build_lifted_design(LiftingContext(base, args.c, limits), route)
    if name == "product":
        _need(args, "w")
        if args.base == "fano":
            base = fano_design()
        elif args.base == "trivial":
            _need(args, "k", "t")
            base = trivial_abstract_design(args.k, args.t)
        elif args.base is None:
            base = _load_input_design(args)
        else:
            raise UsageError("product base must be 'fano', 'trivial' or come from --input")
        return product_lift(base, args.w, limits)
    if name == "affine-poly":
        _need(args, "t", "c", "m")
        field = _field(args)
        from .lifting import affine_polynomial_design

        return affine_polynomial_design(field, args.m, args.c, args.t, limits)
    if name == "sections":
        base = _trivial_base(args, limits)
        return build_sections_design(LiftingContext(base, c, limits))
    raise UsageError(f"unknown construction {name!r}")


def _predict(args, limits: Limits) -> dict:
    """Predicted parameter table without materializing the lifted design."""
    name = args.construction
    c = args.c if args.c is not None else 0
    if name in ("witt12", "witt12-lift"):
        field = GF(3)
        profile = dict(t=5, s=1, k=6, lam=1, v=12, b=132, beta=5)
        c = 0 if name == "witt12" else (args.c if args.c is not None else 0)
    elif name == "witt24":
        field = GF(2)
        octads = sum(
            1 for w in enumerate_codewords(GF(2), BINARY_GOLAY_GENERATOR, limits) if sum(w) == 8
        )
        profile = dict(t=5, s=1, k=8, lam=1, v=24, b=octads, beta=7)
        c = 0
    elif name == "nrc-lift" or (name in ("trivial-lift", "sections") and args.base == "nrc"):
        _need_params(args, "t")
        field = _field(args)
        k = field.q + 1
        profile = dict(t=args.t, s=1, k=k, lam=1, v=k, b=1, beta=args.t)
    elif name == "veronese-lift" or (name in ("trivial-lift", "sections") and args.base == "veronese"):
        _need_params(args, "t", "m")
        field = _field(args)
        if args.t > field.q + 1:
            raise UsageError(f"the degree-{args.t - 1} variety does not span for t > q+1")
        k = (field.q ** (args.m + 1) - 1) // (field.q - 1)
        profile = dict(t=args.t, s=1, k=k, lam=1, v=k, b=1, beta=veronese_dimension(args.m, args.t - 1) + 1)
    elif name in ("trivial-lift", "sections") and args.base == "witt12":
        field = GF(3)
        t = args.t if args.t is not None else 5
        profile = dict(t=t, s=1, k=12, lam=1, v=12, b=1, beta=6)
    elif name in ("trivial-lift", "sections") and args.base == "witt24":
        field = GF(2)
        t = args.t if args.t is not None else 5
        profile = dict(t=t, s=1, k=24, lam=1, v=24, b=1, beta=12)
    elif name in ("trivial-lift", "sections") and args.base == "quadric":
        field = _field(args)
        t = args.t if args.t is not None else 3
        profile = dict(t=t, s=1, k=field.q**2 + 1, lam=1, v=field.q**2 + 1, b=1, beta=4)
    elif name == "quadric":
        field = _field(args)
        q = field.q
        profile = dict(t=3, s=1, k=q + 1, lam=1, v=q * q + 1, b=q**3 + q, beta=3)
    elif name == "code" or (name in ("trivial-lift", "sections") and args.base == "code"):
        _need_params(args, "t", "input")
        field = _field(args)
        h = _read_matrix_file(args.input, field)
        nu = h.ncols
        rank = h.rank()
        profile = dict(t=args.t, s=1, k=nu, lam=1, v=nu, b=1, beta=rank)
    elif name == "product":
        _need_params(args, "w")
        if args.base == "fano":
            base = fano_design()
        elif args.base == "trivial":
            _need_params(args, "k", "t")
            base = trivial_abstract_design(args.k, args.t)
        else:
            base = _load_input_design(args)
        t, s, k, lam = base.params
        w = args.w
        return {
            "t": t,
            "s": w * s,
            "k": k,
            "lambda": lam * w ** (k - t),
            "v": w * base.v,
            "block_count": base.b * w**k,
        }
    elif name == "affine-poly":
        _need_params(args, "t", "c", "m")
        field = _field(args)
        q = field.q
        if args.t > q:
            raise UsageError(f"t={args.t} exceeds q={q}")
        d = comb(args.m + args.t - 1, args.m) - 1
        return {
            "t": args.t,
            "s": q**args.c,
            "k": q**args.m,
            "lambda": q ** (args.c * (d - args.t + 1)),
            "v": q ** (args.m + args.c),
            "block_count": q ** (args.c * (d + 1)),
        }
    else:
        raise UsageError(f"params not supported for construction {name!r} with base {getattr(args, 'base', None)!r}")
    q = field.q
    return {
        "t": profile["t"],
        "s": q**c * profile["s"],
        "k": profile["k"],
        "lambda": q ** (c * (profile["beta"] - profile["t"])) * profile["lam"],
        "v": q**c * profile["v"],
        "block_count": profile["b"] * q ** (c * profile["beta"]),
    }


def _need_params(args, *names) -> None:
    for name in names:
        if getattr(args, name.replace("-", "_"), None) is None:
            raise UsageError(f"params for {args.construction!r} requires --{name}")


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _apply_config(args: argparse.Namespace) -> None:
    if getattr(args, "config", None) is None:
        return
    try:
        bundle = json.loads(Path(args.config).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read --config {args.config}: {exc}") from exc
    if not isinstance(bundle, dict):
        raise UsageError("--config must contain a JSON object of flag values")
    for key, value in bundle.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise UsageError(f"--config key {key!r} is not a known flag")
        if getattr(args, attr) is None:
            setattr(args, attr, value)


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--q", type=int, help="field order q = p^e")
    sub.add_argument("--p", type=int, help="field characteristic")
    sub.add_argument("--e", type=int, help="field extension degree")
    sub.add_argument("--modulus", help="comma-separated modulus coefficients, low degree first")
    sub.add_argument("--m", type=int, help="source dimension for monomial maps")
    sub.add_argument("--t", type=int, help="design strength t")
    sub.add_argument("--c", type=int, help="number of lifted coordinates")
    sub.add_argument("--w", type=int, help="fiber size for product lifting")
    sub.add_argument("--k", type=int, help="point count for the trivial abstract base")
    sub.add_argument("--base", help="named base for trivial-lift/sections/product")
    sub.add_argument("--input", help="input file: matrix (code) or design document (product)")
    sub.add_argument("--config", help="JSON file bundling flag values")
    sub.add_argument("--max-points", type=int, default=DEFAULT_LIMITS.max_points)
    sub.add_argument("--max-blocks", type=int, default=DEFAULT_LIMITS.max_blocks)
    sub.add_argument("--max-subsets", type=int, default=DEFAULT_LIMITS.max_subsets)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ddlift",
        description="Construct divisible designs by lifting and verify them exhaustively.",
        epilog=(
            "examples: ddlift build nrc-lift --q 3 --t 3 --c 1 | ddlift verify -; "
            "ddlift params witt12-lift --c 2; "
            "ddlift build product --base fano --w 2 --out d.json"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a design and write its document")
    p_build.add_argument("construction", choices=CONSTRUCTIONS)
    _add_common_flags(p_build)
    p_build.add_argument("--route", choices=("direct", "group"), default="direct", help="block orbit route")
    p_build.add_argument("--out", help="output file (default stdout)")

    p_verify = sub.add_parser("verify", help="verify a design document exhaustively")
    p_verify.add_argument("file", help="design document, '-' for stdin")
    p_verify.add_argument("--t", type=int, help="override the strength to verify at")
    p_verify.add_argument("--hypersimple", action="store_true", help="also run the closure-refined count")
    p_verify.add_argument("--s-expected", type=int, help="expected closure multiplicity for --hypersimple")
    p_verify.add_argument("--max-subsets", type=int, default=DEFAULT_LIMITS.max_subsets)
    p_verify.add_argument("--max-blocks", type=int, default=DEFAULT_LIMITS.max_blocks)
    p_verify.add_argument("--max-points", type=int, default=DEFAULT_LIMITS.max_points)
    p_verify.add_argument("--out", help="write the report here as well as stdout")

    p_params = sub.add_parser("params", help="print predicted parameters without building")
    p_params.add_argument("construction", choices=CONSTRUCTIONS)
    _add_common_flags(p_params)

    p_fp = sub.add_parser("fingerprint", help="print the invariant fingerprint of a document")
    p_fp.add_argument("file", help="design document, '-' for stdin")
    p_fp.add_argument("--max-subsets", type=int, default=DEFAULT_LIMITS.max_subsets)
    p_fp.add_argument("--out", help="output file (default stdout)")

    p_export = sub.add_parser("export", help="re-serialize a document canonically")
    p_export.add_argument("file", help="design document, '-' for stdin")
    p_export.add_argument("--fingerprint", action="store_true", help="recompute and attach the fingerprint")
    p_export.add_argument("--max-subsets", type=int, default=DEFAULT_LIMITS.max_subsets)
    p_export.add_argument("--out", help="output file (default stdout)")

    return parser


def _read_file_arg(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    _apply_config(args)

    if args.command == "build":
        limits = _limits(args)
        design = _build_design(args, limits)
        _write_out(serialize_document(design_to_document(design)), args.out)
        return 0

    if args.command == "verify":
        limits = Limits(max_points=args.max_points, max_blocks=args.max_blocks, max_subsets=args.max_subsets)
        design = parse_document(_read_file_arg(args.file))
        report = check_axioms(design, t=args.t, limits=limits)
        result = report.to_dict()
        if args.hypersimple:
            if args.s_expected is None:
                raise UsageError("--hypersimple requires --s-expected")
            ok, witness = check_hypersimple(design, t=args.t, s_expected=args.s_expected, limits=limits)
            result["hypersimple"] = {"passed": ok, "s_expected": args.s_expected}
            if witness is not None:
                result["hypersimple"]["witness"] = witness
        text = serialize_document(result)
        _write_out(text, args.out)
        if args.out is not None:
            sys.stdout.write(text)
        passed = report.passed and (not args.hypersimple or result["hypersimple"]["passed"])
        return 0 if passed else 1

    if args.command == "params":
        limits = _limits(args)
        table = _predict(args, limits)
        _write_out(serialize_document(table), None)
        return 0

    if args.command == "fingerprint":
        limits = Limits(max_subsets=args.max_subsets)
        design = parse_document(_read_file_arg(args.file))
        fp = fingerprint(design, limits)
        _write_out(serialize_document(fp.to_dict()), args.out)
        return 0

    if args.command == "export":
        limits = Limits(max_subsets=args.max_subsets)
        raw = parse_document_raw(_read_file_arg(args.file))
        if args.fingerprint:
            design = parse_document(serialize_document(raw))
            raw["fingerprint"] = fingerprint(design, limits).to_dict()
        _write_out(serialize_document(raw), args.out)
        return 0

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DocumentError as exc:
        print(f"document error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except (ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
