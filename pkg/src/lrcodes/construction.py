"""Code construction: parameter validation, message layout, encoding.

The code of length n and locality r lives inside a parent evaluation
code of length n_bar = m(r+1), the smallest multiple of r+1 covering n.
Messages become polynomials built from powers of the block-constant
polynomial g_tilde plus a correction term divisible by h_B, so that
every codeword polynomial vanishes on the t dropped points B; the
codeword is the value vector on the remaining n points.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Sequence

from .errors import (
    FieldTooSmall,
    InternalInconsistency,
    LengthMismatch,
    LrcError,
    RateBoundViolated,
    SEqualsOne,
)
from .field import Field, poly_add, poly_eval, poly_from_roots, poly_mul, poly_scale, poly_shift
from .goodpoly import (
    MULTIPLICATIVE,
    GoodPolynomial,
    PartitionSpec,
    SubgroupSpec,
    coset_partition,
    find_subgroup,
    good_polynomial,
    make_partition,
    normalize_gamma,
)
from .linalg import rank


@dataclass(frozen=True)
class CodeParams:
    q: int
    n: int
    k: int
    r: int
    s: int
    t: int
    m_blocks: int
    n_bar: int
    k_prime: int


@dataclass(frozen=True)
class MessageLayout:
    """How the k message symbols map to polynomial coefficients.

    a_slots lists (i, j) pairs, each feeding the coefficient of
    x^i * g_tilde^j; the remaining b_count symbols feed
    h_B * (b_0 + b_1 x + ... ).  S_values holds the per-i slot counts
    from the defining formula (which go negative when k+t < r; negative
    counts contribute no slots and the b part absorbs all k symbols).
    """

    a_slots: tuple[tuple[int, int], ...]
    b_count: int
    S_values: tuple[int, ...]


@dataclass(frozen=True)
class CodeSpec:
    params: CodeParams
    field: Field
    subgroup: SubgroupSpec
    partition: PartitionSpec
    good: GoodPolynomial
    h_B: tuple[int, ...]
    eval_points: tuple[int, ...]
    layout: MessageLayout
    G: tuple[tuple[int, ...], ...]


def slot_count(k_prime: int, r: int, i: int) -> int:
    """Slot-count formula: floor(k'/r) for the first k' mod r rows, one less after."""
    return k_prime // r if i < k_prime % r else k_prime // r - 1


def validate_params(q: int, n: int, k: int, r: int) -> CodeParams:
    """Derive (s, t, m, n_bar, k') and enforce every parameter constraint.

    A length divisible by r+1 is remapped to s = r+1, t = 0: nothing is
    dropped from the parent code and the construction degenerates to the
    unshortened one.
    """
    for name, v in (("q", q), ("n", n), ("k", k), ("r", r)):
        if not isinstance(v, int) or v < 1:
            raise LrcError(f"{name} must be a positive integer, got {v!r}")
    if r >= n:
        raise LrcError(f"locality r = {r} must be smaller than the length n = {n}")
    s = n % (r + 1)
    if s == 1:
        raise SEqualsOne(f"n = {n}, r = {r}: s = 1 not supported (n mod (r+1) = 1)")
    if s == 0:
        s, t = r + 1, 0
    else:
        t = r + 1 - s
    m = ceil(n / (r + 1))
    n_bar = m * (r + 1)
    F = Field(q)
    H = find_subgroup(F, r + 1)
    reachable = q - 1 if H.kind == MULTIPLICATIVE else q
    if n_bar > reachable:
        raise FieldTooSmall(
            f"need {n_bar} evaluation points but the {H.kind} coset space "
            f"of GF({q}) has only {reachable}"
        )
    if k > n - m:
        raise RateBoundViolated(f"k = {k} exceeds n - ceil(n/(r+1)) = {n - m}")
    return CodeParams(q=q, n=n, k=k, r=r, s=s, t=t, m_blocks=m, n_bar=n_bar, k_prime=k + t)


def message_layout(params: CodeParams) -> MessageLayout:
    kp, r = params.k_prime, params.r
    S_values = tuple(slot_count(kp, r, i) for i in range(r))
    a_slots = tuple((i, j) for i in range(r) for j in range(1, S_values[i] + 1))
    b_count = params.k - len(a_slots)
    if not 0 <= b_count <= params.s - 1 or (kp >= r and b_count != params.s - 1):
        raise InternalInconsistency(
            f"layout miscount: {len(a_slots)} a-slots and {b_count} b-slots for k = {params.k}"
        )
    return MessageLayout(a_slots=a_slots, b_count=b_count, S_values=S_values)


def _assemble(
    F: Field,
    layout: MessageLayout,
    g_tilde: Sequence[int],
    h_B: Sequence[int],
    msg: Sequence[int],
) -> list[int]:
    gt_powers: list[list[int]] = [[1]]
    max_j = max((j for _, j in layout.a_slots), default=0)
    for _ in range(max_j):
        gt_powers.append(poly_mul(F, gt_powers[-1], g_tilde))
    f: list[int] = []
    for (i, j), a in zip(layout.a_slots, msg):
        if a:
            f = poly_add(F, f, poly_shift(poly_scale(F, a, gt_powers[j]), i))
    b_part = list(msg[len(layout.a_slots):])
    while b_part and b_part[-1] == 0:
        b_part.pop()
    if b_part:
        f = poly_add(F, f, poly_mul(F, h_B, b_part))
    return f


def assemble_polynomial(msg: Sequence[int], spec: CodeSpec) -> list[int]:
    """The codeword polynomial f of the message; deg f <= k' + ceil(k'/r) - 2."""
    p = spec.params
    if len(msg) != p.k:
        raise LengthMismatch(f"message length {len(msg)} != k = {p.k}")
    F = spec.field
    for x in msg:
        F.check(x)
    return _assemble(F, spec.layout, spec.good.g_tilde, spec.h_B, msg)


def encode(msg: Sequence[int], spec: CodeSpec) -> list[int]:
    """Values of the message's polynomial at the n evaluation points."""
    f = assemble_polynomial(msg, spec)
    F = spec.field
    return [poly_eval(F, f, x) for x in spec.eval_points]


def extend_to_parent(msg: Sequence[int], spec: CodeSpec) -> list[int]:
    """The length-n_bar parent codeword: values on every block in block
    order, including the dropped points B (where the value is zero)."""
    f = assemble_polynomial(msg, spec)
    F = spec.field
    return [poly_eval(F, f, x) for block in spec.partition.blocks for x in block]


def build_code(params: CodeParams) -> CodeSpec:
    """Assemble the full code object and certify its dimension."""
    F = Field(params.q)
    H = find_subgroup(F, params.r + 1)
    blocks = coset_partition(F, H, params.m_blocks)
    partition = make_partition(blocks, params.t)
    good = normalize_gamma(F, good_polynomial(F, H), partition)
    h_B = tuple(poly_from_roots(F, partition.B))
    dropped = set(partition.B)
    eval_points = tuple(sorted(x for block in blocks for x in block if x not in dropped))
    if len(eval_points) != params.n:
        raise InternalInconsistency(
            f"evaluation set has {len(eval_points)} points, expected n = {params.n}"
        )
    layout = message_layout(params)
    G = []
    for row in range(params.k):
        unit = [0] * params.k
        unit[row] = 1
        f = _assemble(F, layout, good.g_tilde, h_B, unit)
        G.append(tuple(poly_eval(F, f, x) for x in eval_points))
    if rank(F, G) != params.k:
        raise InternalInconsistency(f"generator matrix rank below k = {params.k}")
    return CodeSpec(
        params=params,
        field=F,
        subgroup=H,
        partition=partition,
        good=good,
        h_B=h_B,
        eval_points=eval_points,
        layout=layout,
        G=tuple(G),
    )
