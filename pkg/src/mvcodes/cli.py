"""Command-line front end over the algebra and code text formats.

Exit codes: 0 success, 1 malformed input, 2 domain rejection (invalid
algebra, rejected attachment, exhausted embedding), 64 usage error. Output is
deterministic: identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algebras import Algebra, kind_of, verify
from .attach import (
    CodeRejected,
    attach_wajsberg,
    embed_code,
)
from .catalog import enumerate_wajsberg, pi_count
from .codes import (
    code_from_algebra,
    distance_D,
    min_hamming_distance,
    skeleton,
)
from .convert import convert
from .errors import AlgebraError, NoEmbeddingFound, NotAnAlgebra, ParseError
from .fileio import format_algebra, format_code, parse_algebra, parse_code

EX_OK = 0
EX_MALFORMED = 1
EX_REJECTED = 2
EX_USAGE = 64

KIND_LABELS = {
    "bck": "bounded commutative BCK",
    "mv": "MV",
    "wajsberg": "Wajsberg",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="mvcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the axioms of an algebra file")
    p.add_argument("algebra", type=Path)

    p = sub.add_parser("convert", help="translate an algebra to another presentation")
    p.add_argument("algebra", type=Path)
    p.add_argument("--to", required=True, choices=("bck", "mv", "wajsberg"), dest="kind")

    p = sub.add_parser("code", help="print the block code generated by an algebra")
    p.add_argument("algebra", type=Path)

    p = sub.add_parser("distance", help="cut-set distance between two elements")
    p.add_argument("algebra", type=Path)
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)

    p = sub.add_parser("mindist", help="minimum Hamming distance of a code file")
    p.add_argument("code", type=Path)

    p = sub.add_parser("skeleton", help="print the order skeleton of an algebra")
    p.add_argument("algebra", type=Path)

    p = sub.add_parser("enumerate", help="all Wajsberg algebras of a given order")
    p.add_argument("n", type=int)
    p.add_argument("--output", type=Path, default=None)

    p = sub.add_parser("attach", help="reconstruct the algebra behind a square code")
    p.add_argument("code", type=Path)
    p.add_argument("--all", action="store_true", dest="all_matches")
    p.add_argument("--to", choices=("bck", "mv", "wajsberg"), dest="kind", default="wajsberg")
    p.add_argument("--output", type=Path, default=None)

    p = sub.add_parser("embed", help="embed a code into a larger algebra's code")
    p.add_argument("code", type=Path)
    p.add_argument("--max-order", type=int, default=None, dest="max_order")
    p.add_argument("--all", action="store_true", dest="all_matches")
    p.add_argument("--output", type=Path, default=None)

    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_verified(path: Path, out) -> Algebra:
    algebra = parse_algebra(_read(path))
    report = verify(algebra)
    if not report.valid:
        _print_violations(algebra, report, out)
        raise NotAnAlgebra(f"{path} does not verify", report)
    return algebra


def _print_violations(algebra, report, out) -> None:
    print(f"invalid: {KIND_LABELS[kind_of(algebra)]}", file=out)
    for v in report.violations:
        args = ", ".join(str(x) for x in v.witness)
        print(f"violated {v.axiom} witness ({args})", file=out)


def _cmd_verify(args, out) -> int:
    algebra = parse_algebra(_read(args.algebra))
    report = verify(algebra)
    if report.valid:
        print(f"valid: {KIND_LABELS[kind_of(algebra)]}", file=out)
        return EX_OK
    _print_violations(algebra, report, out)
    return EX_REJECTED


def _cmd_convert(args, out) -> int:
    algebra = parse_algebra(_read(args.algebra))
    out.write(format_algebra(convert(algebra, args.kind)))
    return EX_OK


def _cmd_code(args, out) -> int:
    algebra = _load_verified(args.algebra, out)
    out.write(format_code(code_from_algebra(algebra)))
    return EX_OK


def _cmd_distance(args, out) -> int:
    algebra = _load_verified(args.algebra, out)
    if not (0 <= args.r < algebra.k and 0 <= args.s < algebra.k):
        raise ParseError(f"elements must lie in [0,{algebra.k})")
    print(distance_D(algebra, args.r, args.s), file=out)
    return EX_OK


def _cmd_mindist(args, out) -> int:
    code = parse_code(_read(args.code))
    print(min_hamming_distance(code), file=out)
    return EX_OK


def _cmd_skeleton(args, out) -> int:
    algebra = _load_verified(args.algebra, out)
    print(skeleton(algebra).render(), file=out)
    return EX_OK


def _write_or_print(texts: list[tuple[str, str]], output: Optional[Path], out) -> None:
    """Emit named documents to a directory, or to stdout with separators."""
    if output is not None:
        output.mkdir(parents=True, exist_ok=True)
        for name, text in texts:
            (output / name).write_text(text)
    else:
        for _, text in texts:
            print("---", file=out)
            out.write(text)


def _cmd_enumerate(args, out) -> int:
    entries = enumerate_wajsberg(args.n)
    pi = pi_count(args.n) if args.n >= 2 else 0
    print(f"n={args.n} pi={pi} total={pi + 1}", file=out)
    texts = []
    for entry in entries:
        label = "chain" if len(entry.factors) == 1 else entry.factor_label()
        body = f"# factors: {label}\n" + format_algebra(entry.algebra)
        texts.append((f"w{args.n}_{label.replace('x', '_')}.alg", body))
    _write_or_print(texts, args.output, out)
    return EX_OK


def _cmd_attach(args, out, err) -> int:
    code = parse_code(_read(args.code))
    try:
        found = attach_wajsberg(code, all_matches=args.all_matches)
    except CodeRejected as exc:
        reason = exc.reason
        witness = ", ".join(str(x) for x in reason.witness)
        print(f"rejected: {reason.kind} witness ({witness})", file=err)
        print(reason.detail, file=err)
        return EX_REJECTED
    results = found if args.all_matches else [found]
    texts = []
    for i, result in enumerate(results, start=1):
        algebra = convert(result.algebra, args.kind)
        header = (
            f"# catalog: n={result.source.order} factors={result.source.factor_label()}\n"
            f"# relabeling: {','.join(str(x) for x in result.iso.forward)}\n"
        )
        texts.append((f"attached_{i}_{args.kind}.alg", header + format_algebra(algebra)))
    _write_or_print(texts, args.output, out)
    return EX_OK


def _cmd_embed(args, out, err) -> int:
    code = parse_code(_read(args.code))
    try:
        found = embed_code(code, max_order=args.max_order, all_matches=args.all_matches)
    except NoEmbeddingFound as exc:
        print(f"no embedding found up to order {exc.max_order}", file=err)
        return EX_REJECTED
    results = found if args.all_matches else [found]
    texts = []
    for i, result in enumerate(results, start=1):
        cols = ",".join(str(c) for c in result.columns)
        summary = f"q={result.q} factors={result.factor_label()} columns={cols}\n"
        body = (
            summary
            + format_algebra(result.host)
            + "# restricted code\n"
            + format_code(result.restriction)
        )
        texts.append((f"embedding_{i}.txt", body))
    _write_or_print(texts, args.output, out)
    return EX_OK


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EX_USAGE
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "convert":
            return _cmd_convert(args, out)
        if args.command == "code":
            return _cmd_code(args, out)
        if args.command == "distance":
            return _cmd_distance(args, out)
        if args.command == "mindist":
            return _cmd_mindist(args, out)
        if args.command == "skeleton":
            return _cmd_skeleton(args, out)
        if args.command == "enumerate":
            return _cmd_enumerate(args, out)
        if args.command == "attach":
            return _cmd_attach(args, out, err)
        return _cmd_embed(args, out, err)
    except NotAnAlgebra as exc:
        print(f"error: {exc}", file=err)
        return EX_REJECTED
    except AlgebraError as exc:
        print(f"error: {exc}", file=err)
        return EX_MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
