"""Command-line surface and the JSON on-disk format for built codes.

Exit codes: 0 success, 2 invalid input or parameters, 3 verification or
decoding failure.  All symbol I/O is space-separated decimal integers;
"?" marks an erased coordinate in decode input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .bounds import (
    improved_bound,
    optimality_report,
    predicted_distance,
    rate_bound_holds,
    singleton_like_bound,
)
from .construction import (
    CodeSpec,
    build_code,
    encode,
    message_layout,
    validate_params,
)
from .errors import LrcError, Unrecoverable
from .field import Field, poly_eval, poly_from_roots, poly_sub
from .goodpoly import ADDITIVE, MULTIPLICATIVE, GoodPolynomial, PartitionSpec, SubgroupSpec
from .repair import decode_erasures, locate_group, repair_local
from .verify import run_verification

SPEC_VERSION = 1
DEFAULT_BUDGET = 5_000_000


# -- persistence --------------------------------------------------------


def spec_to_dict(spec: CodeSpec) -> dict:
    p = spec.params
    return {
        "version": SPEC_VERSION,
        "q": p.q,
        "n": p.n,
        "k": p.k,
        "r": p.r,
        "s": p.s,
        "t": p.t,
        "m": p.m_blocks,
        "n_bar": p.n_bar,
        "subgroup": {"kind": spec.subgroup.kind, "elements": list(spec.subgroup.elements)},
        "blocks": [list(b) for b in spec.partition.blocks],
        "B": list(spec.partition.B),
        "gamma": spec.good.gamma,
        "g_tilde": list(spec.good.g_tilde),
        "h_B": list(spec.h_B),
        "eval_points": list(spec.eval_points),
        "generator_matrix": [list(row) for row in spec.G],
    }


def write_spec_file(spec: CodeSpec, path: str | Path) -> None:
    text = json.dumps(spec_to_dict(spec), indent=2) + "\n"
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise LrcError(f"bad code file: {message}")


def load_spec_file(path: str | Path) -> CodeSpec:
    """Load and structurally re-validate a code file.

    Everything about the partition and the polynomials is re-checked;
    the generator matrix is only shape-checked here, so that the verify
    command can report (rather than refuse to load) a tampered matrix.
    """
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    _expect(isinstance(doc, dict), "top level is not an object")
    _expect(doc.get("version") == SPEC_VERSION, f"unsupported version {doc.get('version')!r}")
    for key in ("q", "n", "k", "r", "s", "t", "m", "n_bar", "gamma"):
        _expect(isinstance(doc.get(key), int), f"missing or non-integer field {key!r}")
    params = validate_params(doc["q"], doc["n"], doc["k"], doc["r"])
    stored = (doc["s"], doc["t"], doc["m"], doc["n_bar"])
    derived = (params.s, params.t, params.m_blocks, params.n_bar)
    _expect(stored == derived, f"derived quantities {stored} do not match {derived}")
    F = Field(params.q)

    sub = doc.get("subgroup")
    _expect(isinstance(sub, dict), "missing subgroup")
    kind = sub.get("kind")
    _expect(kind in (MULTIPLICATIVE, ADDITIVE), f"unknown subgroup kind {kind!r}")
    elements = sub.get("elements")
    _expect(
        isinstance(elements, list)
        and len(elements) == params.r + 1
        and all(isinstance(x, int) and 0 <= x < params.q for x in elements)
        and elements == sorted(set(elements)),
        "subgroup elements must be r+1 sorted distinct field elements",
    )
    op = F.mul if kind == MULTIPLICATIVE else F.add
    if kind == MULTIPLICATIVE:
        _expect(0 not in elements, "0 cannot lie in a multiplicative subgroup")
    elem_set = set(elements)
    _expect(
        all(op(a, b) in elem_set for a in elements for b in elements),
        "subgroup elements are not closed under the group operation",
    )
    subgroup = SubgroupSpec(kind, tuple(elements), params.r + 1)

    blocks = doc.get("blocks")
    _expect(
        isinstance(blocks, list) and len(blocks) == params.m_blocks,
        f"expected {params.m_blocks} blocks",
    )
    seen: set[int] = set()
    for b in blocks:
        _expect(
            isinstance(b, list) and len(b) == params.r + 1 and b == sorted(set(b)),
            "each block must be r+1 sorted distinct elements",
        )
        _expect(not seen & set(b), "blocks are not disjoint")
        _expect(set(op(b[0], h) for h in elements) == set(b), f"block {b} is not a coset")
        seen.update(b)
    B = doc.get("B")
    _expect(
        isinstance(B, list) and len(B) == params.t and B == sorted(set(B)),
        f"B must be {params.t} sorted distinct elements",
    )
    _expect(set(B) <= set(blocks[-1]), "B must lie inside the last block")
    partition = PartitionSpec(
        tuple(tuple(b) for b in blocks), tuple(B), n_bar=params.n_bar
    )

    g_tilde = doc.get("g_tilde")
    _expect(
        isinstance(g_tilde, list)
        and len(g_tilde) == params.r + 2
        and all(isinstance(c, int) and 0 <= c < params.q for c in g_tilde)
        and g_tilde[-1] != 0,
        "g_tilde must be a degree r+1 coefficient list",
    )
    gamma = doc["gamma"]
    _expect(0 <= gamma < params.q, "gamma out of range")
    block_values = []
    for b in blocks:
        vals = {poly_eval(F, g_tilde, x) for x in b}
        _expect(len(vals) == 1, f"g_tilde is not constant on block {b}")
        block_values.append(vals.pop())
    _expect(block_values[-1] == 0, "g_tilde does not vanish on the last block")
    g_raw = poly_sub(F, g_tilde, [F.neg(gamma)])
    good = GoodPolynomial(
        g_raw=tuple(g_raw),
        gamma=gamma,
        g_tilde=tuple(g_tilde),
        block_values=tuple(block_values),
    )

    h_B = doc.get("h_B")
    _expect(h_B == poly_from_roots(F, B), "h_B does not match the annihilator of B")
    eval_points = doc.get("eval_points")
    expected_points = sorted(x for b in blocks for x in b if x not in set(B))
    _expect(eval_points == expected_points, "eval_points do not match blocks minus B")

    G = doc.get("generator_matrix")
    _expect(
        isinstance(G, list)
        and len(G) == params.k
        and all(
            isinstance(row, list)
            and len(row) == params.n
            and all(isinstance(x, int) and 0 <= x < params.q for x in row)
            for row in G
        ),
        "generator matrix must be k rows of n field elements",
    )
    return CodeSpec(
        params=params,
        field=F,
        subgroup=subgroup,
        partition=partition,
        good=good,
        h_B=tuple(h_B),
        eval_points=tuple(eval_points),
        layout=message_layout(params),
        G=tuple(tuple(row) for row in G),
    )


# -- symbol parsing -----------------------------------------------------


def _gather_tokens(args: argparse.Namespace) -> list[str]:
    if args.file is not None:
        if args.symbols:
            raise LrcError("give symbols either inline or with --file, not both")
        return Path(args.file).read_text(encoding="utf-8").split()
    if not args.symbols:
        raise LrcError("no symbols given")
    return list(args.symbols)


def _parse_symbols(tokens: Sequence[str], q: int, allow_erased: bool = False) -> list[int | None]:
    out: list[int | None] = []
    for tok in tokens:
        if tok == "?":
            if not allow_erased:
                raise LrcError("erasure token '?' not allowed here")
            out.append(None)
            continue
        try:
            v = int(tok)
        except ValueError:
            raise LrcError(f"symbol {tok!r} is not an integer") from None
        if not 0 <= v < q:
            raise LrcError(f"symbol {v} outside [0, {q})")
        out.append(v)
    return out


# -- subcommands --------------------------------------------------------


def cmd_params(args: argparse.Namespace) -> int:
    params = validate_params(args.q, args.n, args.k, args.r)
    report = optimality_report(params)
    print(
        f"valid ({params.n}, {params.k}, {params.r}) code over GF({params.q}): "
        f"s={params.s} t={params.t} m={params.m_blocks} n_bar={params.n_bar} k'={params.k_prime}"
    )
    print(f"minimum distance d = {report.d_predicted} ({report.applicable_reason})")
    doc = {
        "q": params.q,
        "n": params.n,
        "k": params.k,
        "r": params.r,
        "s": params.s,
        "t": params.t,
        "m": params.m_blocks,
        "n_bar": params.n_bar,
        "k_prime": params.k_prime,
        "d_singleton": report.d_singleton,
        "d_improved": report.d_improved,
        "delta": report.delta,
        "d_predicted": report.d_predicted,
        "optimal": report.optimal,
        "applicable_reason": report.applicable_reason,
    }
    print(json.dumps(doc, indent=2))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    params = validate_params(args.q, args.n, args.k, args.r)
    spec = build_code(params)
    write_spec_file(spec, args.out)
    print(f"wrote ({params.n}, {params.k}, {params.r}) code over GF({params.q}) "
          f"with d = {predicted_distance(params)} to {args.out}")
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.spec)
    msg = _parse_symbols(_gather_tokens(args), spec.params.q)
    if len(msg) != spec.params.k:
        raise LrcError(f"message has {len(msg)} symbols, expected k = {spec.params.k}")
    print(" ".join(str(x) for x in encode(msg, spec)))
    return 0


def cmd_repair(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.spec)
    p = spec.params
    word = _parse_symbols(_gather_tokens(args), p.q, allow_erased=True)
    if len(word) != p.n:
        raise LrcError(f"codeword has {len(word)} symbols, expected n = {p.n}")
    i = args.index
    g_idx, helpers, zeros = locate_group(spec, i)
    pos = {alpha: j for j, alpha in enumerate(spec.eval_points)}
    pairs = []
    for alpha in helpers:
        v = word[pos[alpha]]
        if v is None:
            raise Unrecoverable(f"helper at point {alpha} is erased")
        pairs.append((alpha, v))
    pairs.extend((beta, 0) for beta in zeros)
    value = repair_local(spec, i, pairs)
    print(f"coordinate {i} (point {spec.eval_points[i - 1]}), repair group {g_idx}")
    print("helper values: " + " ".join(f"{a}={v}" for a, v in pairs))
    print(f"repaired value: {value}")
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.spec)
    p = spec.params
    word = _parse_symbols(_gather_tokens(args), p.q, allow_erased=True)
    if len(word) != p.n:
        raise LrcError(f"received word has {len(word)} symbols, expected n = {p.n}")
    print(" ".join(str(x) for x in decode_erasures(spec, word)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.spec)
    report = run_verification(spec, budget=args.budget, seed=args.seed)
    doc = {
        "rank_ok": report.rank_ok,
        "distance_found": report.distance_found,
        "distance_expected": report.distance_expected,
        "locality_ok": report.locality_ok,
        "shortening_ok": report.shortening_ok,
        "erasure_ok": report.erasure_ok,
        "enumerated_words": report.enumerated_words,
        "all_ok": report.all_ok,
    }
    print(json.dumps(doc, indent=2))
    return 0 if report.all_ok else 3


def cmd_bounds(args: argparse.Namespace) -> int:
    doc = {
        "n": args.n,
        "k": args.k,
        "r": args.r,
        "d_singleton": singleton_like_bound(args.n, args.k, args.r),
        "d_improved": improved_bound(args.n, args.k, args.r),
        "rate_bound_holds": rate_bound_holds(args.n, args.k, args.r),
    }
    print(json.dumps(doc, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrcodes",
        description="Distance-optimal locally recoverable codes of any length",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_qnkr(p: argparse.ArgumentParser) -> None:
        p.add_argument("--q", type=int, required=True, help="field order")
        p.add_argument("--n", type=int, required=True, help="code length")
        p.add_argument("--k", type=int, required=True, help="dimension")
        p.add_argument("--r", type=int, required=True, help="locality")

    def add_symbols(p: argparse.ArgumentParser, what: str) -> None:
        p.add_argument("symbols", nargs="*", help=f"{what} as space-separated integers")
        p.add_argument("--file", help=f"read the {what} from a file instead")

    p = sub.add_parser("params", help="validate parameters and report the distance")
    add_qnkr(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("construct", help="build a code and write its JSON file")
    add_qnkr(p)
    p.add_argument("--out", required=True, help="output path for the code file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="encode a k-symbol message")
    p.add_argument("--spec", required=True, help="code file from construct")
    add_symbols(p, "message")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("repair", help="repair one coordinate from its group")
    p.add_argument("--spec", required=True, help="code file from construct")
    p.add_argument("--index", type=int, required=True, help="1-based coordinate to repair")
    add_symbols(p, "codeword")
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("decode", help="decode a word with '?' erasures")
    p.add_argument("--spec", required=True, help="code file from construct")
    add_symbols(p, "received word")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="run every brute-force oracle on a code file")
    p.add_argument("--spec", required=True, help="code file from construct")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max enumerated words / patterns (default %(default)s)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized sub-checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="distance bounds for (n, k, r), no field needed")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Unrecoverable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except LrcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
