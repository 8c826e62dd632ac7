"""Independent brute-force oracles for every claim a built code makes.

Nothing here trusts the construction: distance comes from enumerating
the whole message space, locality from dual vectors of the generator
matrix, shortening from interpolation degree checks, erasure tolerance
from exhaustive pattern decoding.  Enumeration is budget-gated; a
report is either complete or the run aborts with BudgetExceeded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .bounds import predicted_distance
from .construction import CodeSpec, encode, extend_to_parent
from .errors import BudgetExceeded, Unrecoverable
from .field import Field, poly_mul, poly_scale
from .linalg import nullspace
from .linalg import rank as _rank
from .repair import apply_erasures, decode_erasures, erasure_pattern

DEFAULT_CHUNK_CAP = 1 << 16


@dataclass(frozen=True)
class VerificationReport:
    rank_ok: bool
    distance_found: int
    distance_expected: int
    locality_ok: bool
    shortening_ok: bool
    erasure_ok: bool
    enumerated_words: int

    @property
    def all_ok(self) -> bool:
        return (
            self.rank_ok
            and self.locality_ok
            and self.shortening_ok
            and self.erasure_ok
            and self.distance_found == self.distance_expected
        )


def matrix_rank(F: Field, rows: Sequence[Sequence[int]]) -> int:
    """Rank over F by Gaussian elimination."""
    return _rank(F, rows)


# -- distance by exhaustive enumeration --------------------------------


def _scaled_rows(F: Field, row: Sequence[int]) -> np.ndarray:
    """q x n table of v * row for every scalar v, as the numpy kernels need."""
    q = F.order
    out = np.empty((q, len(row)), dtype=np.int64)
    for v in range(q):
        out[v] = [F.mul(v, x) for x in row]
    return out


def _combine(F: Field, scaled: np.ndarray, table: np.ndarray) -> np.ndarray:
    """All sums s + t over the rows of both tables, (|scaled|*|table|) x n."""
    if F.characteristic == 2:
        merged = scaled[:, None, :] ^ table[None, :, :]
    else:
        merged = (scaled[:, None, :] + table[None, :, :]) % F.characteristic
    return merged.reshape(-1, scaled.shape[1])


def brute_force_distance(
    spec: CodeSpec, budget: int, chunk_cap: int = DEFAULT_CHUNK_CAP
) -> int:
    """Exact minimum weight over all q^k - 1 nonzero codewords.

    Messages are enumerated digit by digit: the low digits are expanded
    into one table of at most chunk_cap codewords, the high digits are
    walked one combination at a time and broadcast against that table.
    The answer does not depend on chunk_cap (it only shapes the batches).
    """
    weight, _ = minimum_weight_word(spec, budget, chunk_cap)
    return weight


def minimum_weight_word(
    spec: CodeSpec, budget: int, chunk_cap: int = DEFAULT_CHUNK_CAP
) -> tuple[int, list[int]]:
    """Minimum nonzero weight and one message achieving it."""
    F = spec.field
    p = spec.params
    q, k, n = p.q, p.k, p.n
    total = q**k
    if total > budget:
        raise BudgetExceeded(f"distance search needs budget >= {total} (q^k), got {budget}")
    scaled = [_scaled_rows(F, row) for row in spec.G]
    # digits 0..low-1 go into the in-memory table, the rest are walked
    low = 0
    while low < k and q ** (low + 1) <= max(chunk_cap, q):
        low += 1
    table = np.zeros((1, n), dtype=np.int64)
    for d in range(low):
        table = _combine(F, scaled[d], table)
    best_w, best_m = n + 1, None
    high_digits = [0] * (k - low)
    while True:
        base = np.zeros(n, dtype=np.int64)
        for d, v in enumerate(high_digits):
            if v:
                row = scaled[low + d][v]
                base = (base ^ row) if F.characteristic == 2 else (base + row) % F.characteristic
        chunk = _combine(F, base[None, :], table)
        weights = np.count_nonzero(chunk, axis=1)
        if not any(high_digits):
            weights[0] = n + 1  # the all-zero message does not count
        i = int(weights.argmin())
        if weights[i] < best_w:
            best_w = int(weights[i])
            digits = []
            rest = i
            for _ in range(low):
                digits.append(rest % q)
                rest //= q
            best_m = digits + list(high_digits)
        # odometer over the high digits
        d = 0
        while d < len(high_digits):
            high_digits[d] += 1
            if high_digits[d] < q:
                break
            high_digits[d] = 0
            d += 1
        else:
            break
    assert best_m is not None
    return best_w, best_m


# -- locality -----------------------------------------------------------


def group_dual_vector(
    F: Field, G: Sequence[Sequence[int]], cols: Sequence[int]
) -> list[int] | None:
    """A dual constraint on the given columns with no zero entry, or None.

    Such a vector proves every one of those coordinates is a linear
    function of the others.  Any combination of nullspace basis vectors
    has support inside the union of their supports, so the union must be
    everything; a full-support combination is then built greedily, one
    basis vector at a time.
    """
    restricted = [[row[c] for c in cols] for row in G]
    basis = nullspace(F, restricted)
    if not basis:
        return None
    covered = set()
    for v in basis:
        covered.update(j for j, x in enumerate(v) if x)
    if len(covered) != len(cols):
        return None
    acc = basis[0]
    for v in basis[1:]:
        if all(x == 0 for x in v):
            continue
        lam = None
        for candidate in F.elements():
            trial = [F.add(a, F.mul(candidate, b)) for a, b in zip(acc, v)]
            keep = {j for j, x in enumerate(trial) if x}
            want = {j for j, x in enumerate(acc) if x} | {j for j, x in enumerate(v) if x}
            if want <= keep:
                lam = candidate
                break
        if lam is None:
            return None  # field too small for the greedy merge
        acc = [F.add(a, F.mul(lam, b)) for a, b in zip(acc, v)]
    if any(x == 0 for x in acc):
        return None
    return acc


def locality_holds(F: Field, G: Sequence[Sequence[int]], groups: Sequence[Sequence[int]]) -> bool:
    """Whether every column group carries a full-support dual constraint."""
    return all(group_dual_vector(F, G, cols) is not None for cols in groups)


def repair_groups(spec: CodeSpec) -> list[list[int]]:
    """Column index groups of the code: one per block, dropped points removed."""
    pos = {alpha: j for j, alpha in enumerate(spec.eval_points)}
    dropped = set(spec.partition.B)
    return [
        [pos[x] for x in block if x not in dropped]
        for block in spec.partition.blocks
    ]


def verify_locality(spec: CodeSpec) -> bool:
    return locality_holds(spec.field, spec.G, repair_groups(spec))


# -- shortening ---------------------------------------------------------


def _lagrange_coeff_rows(F: Field, points: Sequence[int], min_degree: int) -> list[list[int]]:
    """Rows mapping a value vector on *points* to the coefficients of
    degrees min_degree .. len(points)-1 of its interpolating polynomial."""
    npts = len(points)
    master = [1]
    for x in points:
        master = poly_mul(F, master, [F.neg(x), 1])
    rows = [[0] * npts for _ in range(min_degree, npts)]
    for j, xj in enumerate(points):
        # basis_j = master / (x - xj), by synthetic division, then normalized
        basis = [0] * npts
        carry = master[npts]
        for deg in range(npts - 1, -1, -1):
            basis[deg] = carry
            carry = F.add(master[deg], F.mul(carry, xj))
        denom = 1
        for xl in points:
            if xl != xj:
                denom = F.mul(denom, F.sub(xj, xl))
        basis = poly_scale(F, F.inv(denom), basis)
        basis += [0] * (npts - len(basis))
        for e in range(min_degree, npts):
            rows[e - min_degree][j] = basis[e]
    return rows


def _parent_layout(spec: CodeSpec) -> tuple[list[int], list[int], int]:
    """Parent coordinate order (all block points), the indices of the
    dropped points within it, and the parent degree cap."""
    points = [x for block in spec.partition.blocks for x in block]
    dropped = set(spec.partition.B)
    b_idx = [j for j, x in enumerate(points) if x in dropped]
    p = spec.params
    cap = p.k_prime + -(-p.k_prime // p.r) - 2
    return points, b_idx, cap


def parent_word_ok(spec: CodeSpec, word: Sequence[int]) -> bool:
    """Whether a length-n_bar value vector lies in the parent code:
    zero at every dropped point and interpolation degree within the cap."""
    F = spec.field
    points, b_idx, cap = _parent_layout(spec)
    if len(word) != len(points):
        return False
    if any(word[j] != 0 for j in b_idx):
        return False
    rows = _lagrange_coeff_rows(F, points, cap + 1)
    for row in rows:
        acc = 0
        for a, b in zip(row, word):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        if acc != 0:
            return False
    return True


def _matmul(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """A @ B over F for small nonnegative-int arrays."""
    if F.characteristic != 2:
        return (A.astype(np.int64) @ B.astype(np.int64)) % F.characteristic
    q = F.order
    mul_table = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        mul_table[a] = [F.mul(a, b) for b in range(q)]
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[1]):
        out ^= mul_table[A[:, i][:, None], B[i, :][None, :]]
    return out


def verify_shortening(spec: CodeSpec, trials: int, seed: int = 0) -> bool:
    """Check *trials* random messages embed into the parent code: their
    extended words vanish on the dropped points and interpolate to a
    polynomial within the parent degree cap."""
    F = spec.field
    p = spec.params
    points, b_idx, cap = _parent_layout(spec)
    parent_G = []
    for row in range(p.k):
        unit = [0] * p.k
        unit[row] = 1
        parent_G.append(extend_to_parent(unit, spec))
    rng = random.Random(seed)
    msgs = np.array(
        [[rng.randrange(p.q) for _ in range(p.k)] for _ in range(trials)], dtype=np.int64
    )
    words = _matmul(F, msgs, np.array(parent_G, dtype=np.int64))
    if b_idx and np.count_nonzero(words[:, b_idx]):
        return False
    check = np.array(_lagrange_coeff_rows(F, points, cap + 1), dtype=np.int64)
    if check.size and np.count_nonzero(_matmul(F, words, check.T)):
        return False
    return True


# -- erasure decoding ---------------------------------------------------


def exhaustive_erasure_test(
    spec: CodeSpec, e: int, budget: int = 10**6, seed: int = 0
) -> bool:
    """Whether every e-subset of coordinates can be erased and decoded.

    Each pattern is tried on a fresh random codeword; any Unrecoverable
    or wrong round-trip makes the answer False.
    """
    p = spec.params
    patterns = comb(p.n, e)
    if patterns > budget:
        raise BudgetExceeded(f"erasure test needs budget >= {patterns} patterns, got {budget}")
    rng = random.Random(seed)
    for subset in combinations(range(1, p.n + 1), e):
        msg = [rng.randrange(p.q) for _ in range(p.k)]
        received = apply_erasures(encode(msg, spec), erasure_pattern(spec, subset))
        try:
            if decode_erasures(spec, received) != msg:
                return False
        except Unrecoverable:
            return False
    return True


def run_verification(
    spec: CodeSpec, budget: int, trials: int = 1000, seed: int = 0
) -> VerificationReport:
    """All oracles against one spec.  Budget shortfalls raise before any
    check runs, so a returned report always covers everything."""
    p = spec.params
    d = predicted_distance(p)
    if p.q**p.k > budget:
        raise BudgetExceeded(f"distance search needs budget >= {p.q ** p.k} (q^k), got {budget}")
    if comb(p.n, d - 1) > budget:
        raise BudgetExceeded(
            f"erasure check needs budget >= {comb(p.n, d - 1)} patterns, got {budget}"
        )
    return VerificationReport(
        rank_ok=matrix_rank(spec.field, spec.G) == p.k,
        distance_found=brute_force_distance(spec, budget),
        distance_expected=d,
        locality_ok=verify_locality(spec),
        shortening_ok=verify_shortening(spec, trials, seed),
        erasure_ok=exhaustive_erasure_test(spec, d - 1, budget, seed),
        enumerated_words=p.q**p.k - 1,
    )
