"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 budget exceeded.  Every command accepts ``--format text|json``.
Budget defaults can be overridden with the environment variables
``SYMKRON_MAX_PAIRS``, ``SYMKRON_MAX_GROUP`` and ``SYMKRON_MAX_VERIFY_DEGREE``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import expr, grouporacle, symfunc, verify
from .combinat import (
    Composition,
    Partition,
    count_ssyt,
    enumerate_compositions,
    enumerate_partitions,
    format_parts,
    parse_parts,
)
from .contingency import contingency_matrices, decompose_permutation_tensor, hom_dimension
from .errors import BudgetExceededError, DegreeMismatchError, ExpressionError


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return Partition(parse_parts(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _composition_arg(text: str) -> Composition:
    try:
        return Composition(parse_parts(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text_lines, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj))
    else:
        for line in text_lines:
            print(line)


def _render_multiset(pieces: dict[Partition, int]) -> str:
    if not pieces:
        return "0"
    out = []
    for lam, mult in pieces.items():
        atom = f"M[{','.join(str(p) for p in lam)}]"
        out.append(atom if mult == 1 else f"{mult}*{atom}")
    return " + ".join(out)


def cmd_partitions(args) -> int:
    parts = enumerate_partitions(args.d)
    _emit(
        args,
        [format_parts(p) for p in parts],
        {"d": args.d, "partitions": [list(p) for p in parts]},
    )
    return 0


def cmd_compositions(args) -> int:
    comps = enumerate_compositions(args.n, args.d)
    _emit(
        args,
        [format_parts(c) for c in comps],
        {"n": args.n, "d": args.d, "compositions": [list(c) for c in comps]},
    )
    return 0


def cmd_kostka(args) -> int:
    shape = _partition_arg(args.shape)
    content = _composition_arg(args.content)
    value = count_ssyt(shape, content)
    _emit(
        args,
        [str(value)],
        {"shape": list(shape), "content": list(content), "kostka": value},
    )
    return 0


def cmd_contingency(args) -> int:
    lam = _composition_arg(args.lam)
    mu = _composition_arg(args.mu)
    if args.count_only:
        count = hom_dimension(lam, mu)
        _emit(args, [str(count)], {"lambda": list(lam), "mu": list(mu), "count": count})
        return 0
    matrices = contingency_matrices(lam, mu)
    lines = []
    for k, mat in enumerate(matrices):
        if k:
            lines.append("")
        lines.extend(",".join(str(v) for v in row) for row in mat.rows)
    _emit(
        args,
        lines,
        {
            "lambda": list(lam),
            "mu": list(mu),
            "count": len(matrices),
            "matrices": [m.to_json_dict() for m in matrices],
        },
    )
    return 0


def cmd_decompose_perm(args) -> int:
    lam = _composition_arg(args.lam)
    mu = _composition_arg(args.mu)
    pieces = decompose_permutation_tensor(lam, mu)
    payload = {
        "lambda": list(lam),
        "mu": list(mu),
        "terms": [
            {"partition": list(p), "multiplicity": mult} for p, mult in pieces.items()
        ],
    }
    lines = [_render_multiset(pieces)]
    if args.oracle:
        oracle = grouporacle.tensor_orbit_decompose(lam, mu)
        agrees = oracle == pieces
        payload["oracle_terms"] = [
            {"partition": list(p), "multiplicity": mult} for p, mult in oracle.items()
        ]
        payload["oracle_agrees"] = agrees
        lines.append(f"oracle: {_render_multiset(oracle)}")
        lines.append(f"oracle agrees: {'yes' if agrees else 'NO'}")
        if not agrees:
            _emit(args, lines, payload)
            return 1
    if args.show_matrices:
        dicts = [m.to_json_dict() for m in contingency_matrices(lam, mu)]
        payload["matrices"] = dicts
        lines.extend(json.dumps(d) for d in dicts)
    _emit(args, lines, payload)
    return 0


def _eval_command(args) -> int:
    tree = expr.parse(args.expr)
    if args.formal:
        comps = expr.evaluate_components(tree)
        if args.basis:
            comps = {d: symfunc.convert(f, args.basis) for d, f in comps.items()}
        rendered = " + ".join(f"({f.render()})" for f in comps.values()) or "0"
        _emit(
            args,
            [rendered],
            {"components": [f.to_json_dict() for f in comps.values()]},
        )
        return 0
    result = expr.evaluate(tree, args.basis)
    _emit(args, [result.render()], result.to_json_dict())
    return 0


def cmd_kron(args) -> int:
    return _eval_command(args)


def cmd_convert(args) -> int:
    return _eval_command(args)


def _character_for(kind: str, lam: Partition) -> grouporacle.CharacterVector:
    if kind == "perm":
        return grouporacle.permutation_character(lam)
    return grouporacle.specht_character(lam)


def cmd_character(args) -> int:
    lam = _partition_arg(args.lam)
    char = _character_for(args.kind, lam)
    lines = [f"{format_parts(rho)}: {value}" for rho, value in char.items()]
    _emit(
        args,
        lines,
        {
            "kind": args.kind,
            "lambda": list(lam),
            "degree": char.degree,
            "values": [
                {"cycle_type": list(rho), "value": value} for rho, value in char.items()
            ],
        },
    )
    return 0


def cmd_ch(args) -> int:
    lam = _partition_arg(args.lam)
    char = _character_for(args.kind, lam)
    image = grouporacle.characteristic_map(char)
    if args.basis:
        image = symfunc.convert(image, args.basis)
    _emit(args, [image.render()], image.to_json_dict())
    return 0


def cmd_verify(args) -> int:
    config = verify.RunConfig(
        max_pairs=grouporacle.MAX_ORBIT_PAIRS,
        max_group=grouporacle.MAX_GROUP_ORDER,
        max_degree=int(
            os.environ.get("SYMKRON_MAX_VERIFY_DEGREE", verify.DEFAULT_MAX_VERIFY_DEGREE)
        ),
        output_format=args.format,
        seed=args.seed,
    )
    checks = verify.run_verify(args.suite, args.d, config)
    ok = all(c.passed for c in checks)
    lines = []
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status} {c.name}" + (f" [{c.detail}]" if c.detail else ""))
    lines.append(f"{'PASS' if ok else 'FAIL'} {args.suite}: {len(checks)} checks")
    _emit(
        args,
        lines,
        {
            "suite": args.suite,
            "d": args.d,
            "passed": ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
            ],
        },
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="symkron",
        description="Exact symmetric functions, permutation-module tensor "
        "decompositions, and Kronecker products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="list partitions of d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser(
        "compositions", parents=[common], help="list compositions of d into n parts"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_compositions)

    p = sub.add_parser(
        "kostka", parents=[common], help="tableau count for a shape and content"
    )
    p.add_argument("--shape", required=True)
    p.add_argument("--content", required=True)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser(
        "contingency", parents=[common], help="matrices with given margins"
    )
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_contingency)

    p = sub.add_parser(
        "decompose-perm",
        parents=[common],
        help="decompose a tensor product of permutation modules",
    )
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with orbit enumeration")
    p.add_argument("--show-matrices", action="store_true")
    p.set_defaults(func=cmd_decompose_perm)

    p = sub.add_parser("kron", parents=[common], help="evaluate an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--basis", choices=symfunc.BASES)
    p.add_argument("--formal", action="store_true", help="allow mixed-degree sums")
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser(
        "convert", parents=[common], help="evaluate and convert an expression"
    )
    p.add_argument("--expr", required=True)
    p.add_argument("--basis", choices=symfunc.BASES, required=True)
    p.add_argument("--formal", action="store_true", help="allow mixed-degree sums")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("character", parents=[common], help="character values by cycle type")
    p.add_argument("--kind", choices=("perm", "specht"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser(
        "ch", parents=[common], help="characteristic map of a character"
    )
    p.add_argument("--kind", choices=("perm", "specht"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--basis", choices=symfunc.BASES, default="p")
    p.set_defaults(func=cmd_ch)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=verify.SUITES, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ExpressionError, DegreeMismatchError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
