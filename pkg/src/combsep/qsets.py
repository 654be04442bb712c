"""Sets of disallowed differences, their combs, and subset counting.

The central objects: a set Q of positive integers (no two elements of a
counted subset of {1..n} may differ by a member of Q), the comb tile it
corresponds to, and count tables for the number of valid subsets (totals
and the size-k triangle).

Two counting routines are provided.  count_subsets_oracle enumerates
every subset of {1..n_max} and applies the bitwise validity test; it is
the ground truth everything else is checked against.  count_subsets_fast
is a sliding-window dynamic program over the occupancy of the last q
positions and must agree with the oracle wherever both run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

ORACLE_N_CAP = 28  # 2^28 subsets, processed in chunks
FAST_Q_CAP = 20  # 2^q DP states


class CapacityError(Exception):
    """Requested size exceeds a documented enumeration cap."""


class QSetParseError(ValueError):
    """Malformed textual Q specification."""


@dataclass(frozen=True)
class QSet:
    """Ordered set of disallowed differences plus derived data.

    diffs: the differences, strictly increasing.
    q: largest difference (0 when empty).
    complement: elements of {1..q} not in diffs, strictly increasing.
    """

    diffs: tuple[int, ...]
    q: int = field(init=False)
    complement: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        diffs = tuple(sorted(set(self.diffs)))
        if any(d < 1 for d in diffs):
            raise ValueError("differences must be positive")
        object.__setattr__(self, "diffs", diffs)
        q = diffs[-1] if diffs else 0
        object.__setattr__(self, "q", q)
        members = set(diffs)
        comp = tuple(j for j in range(1, q + 1) if j not in members)
        object.__setattr__(self, "complement", comp)

    @property
    def a(self) -> int:
        return len(self.complement)

    @property
    def mask(self) -> int:
        """Bit j-1 set iff j is a disallowed difference."""
        m = 0
        for d in self.diffs:
            m |= 1 << (d - 1)
        return m

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.diffs)) + "}"


def parse_qset(text: str) -> QSet:
    """Parse a comma-separated list of positive integers; '-' is empty Q."""
    text = text.strip()
    if not text:
        raise QSetParseError("empty Q specification (use '-' for the empty set)")
    if text == "-":
        return QSet(())
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            v = int(token)
        except ValueError:
            raise QSetParseError(f"not an integer: {token!r}") from None
        if v < 1:
            raise QSetParseError(f"differences must be positive: {token!r}")
        values.append(v)
    return QSet(tuple(values))


@dataclass(frozen=True)
class Comb:
    """Teeth/gap decomposition of the length-(q+1) tile encoding a QSet.

    pattern[j] is 1 iff cell j lies in a tooth; cells run 0..q.
    """

    teeth: tuple[int, ...]
    gaps: tuple[int, ...]

    def __post_init__(self):
        if not self.teeth:
            raise ValueError("a comb has at least one tooth")
        if len(self.gaps) != len(self.teeth) - 1:
            raise ValueError("need exactly one gap between consecutive teeth")
        if any(w < 1 for w in self.teeth) or any(g < 1 for g in self.gaps):
            raise ValueError("teeth and gaps must have positive length")

    @property
    def length(self) -> int:
        return sum(self.teeth) + sum(self.gaps)

    @property
    def r(self) -> int:
        """Width of the rightmost tooth."""
        return self.teeth[-1]

    @property
    def s(self) -> int:
        return self.length - self.r

    @property
    def pattern(self) -> tuple[int, ...]:
        bits = []
        for i, w in enumerate(self.teeth):
            bits.extend([1] * w)
            if i < len(self.gaps):
                bits.extend([0] * self.gaps[i])
        return tuple(bits)

    @property
    def tooth_cells(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.pattern) if b)

    @property
    def empty_cells(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.pattern) if not b)

    def __str__(self) -> str:
        if len(self.teeth) == 1:
            return f"{self.teeth[0]}-omino"
        parts = []
        for i, w in enumerate(self.teeth):
            parts.append(str(w))
            if i < len(self.gaps):
                parts.append(str(self.gaps[i]))
        return "(" + ",".join(parts) + ")-comb"


def comb_from_qset(qset: QSet) -> Comb:
    """Comb whose cell j (j >= 1) is a tooth cell iff j is in Q."""
    bits = [1] + [1 if j in set(qset.diffs) else 0 for j in range(1, qset.q + 1)]
    teeth, gaps = [], []
    run_value, run_len = bits[0], 0
    for b in bits + [None]:
        if b == run_value:
            run_len += 1
            continue
        (teeth if run_value else gaps).append(run_len)
        run_value, run_len = b, 1
    return Comb(tuple(teeth), tuple(gaps))


def qset_from_comb(c: Comb) -> QSet:
    """Inverse of comb_from_qset."""
    return QSet(tuple(j for j in c.tooth_cells if j >= 1))


@dataclass(frozen=True)
class CountTable:
    """Totals S_0..S_n_max and the optional size-k triangle."""

    n_max: int
    totals: tuple[int, ...]
    triangle: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if len(self.totals) != self.n_max + 1:
            raise ValueError("totals length must be n_max + 1")
        if self.triangle is not None:
            for n, row in enumerate(self.triangle):
                if len(row) != n + 1:
                    raise ValueError("triangle row n must have n + 1 entries")

    def row(self, n: int) -> tuple[int, ...]:
        if self.triangle is None:
            raise ValueError("table was computed without the triangle")
        return self.triangle[n]


def _popcount(arr: np.ndarray) -> np.ndarray:
    v = arr.copy()
    v = v - ((v >> 1) & 0x55555555)
    v = (v & 0x33333333) + ((v >> 2) & 0x33333333)
    v = (v + (v >> 4)) & 0x0F0F0F0F
    return (v * 0x01010101) >> 24


def _bit_length32(arr: np.ndarray) -> np.ndarray:
    bits = np.zeros(arr.shape, dtype=np.uint32)
    v = arr.copy()
    for shift in (16, 8, 4, 2, 1):
        mask = v >= np.uint32(1 << shift)
        bits[mask] += np.uint32(shift)
        v[mask] >>= np.uint32(shift)
    return bits + v


def count_subsets_oracle(
    qset: QSet, n_max: int, with_triangle: bool = False
) -> CountTable:
    """Count valid subsets by enumerating every subset of {1..n_max}.

    A subset (as a bit string, bit j-1 for element j) is valid iff for
    every shift d in Q the string ANDed with itself shifted by d is zero,
    i.e. no two elements differ by d.  A subset first becomes available
    at n equal to its largest element and stays valid for all larger n.
    Subsets are scanned in ascending order of their bit representation,
    in chunks so memory stays bounded.
    """
    if not 0 <= n_max <= ORACLE_N_CAP:
        raise CapacityError(f"n_max must be in 0..{ORACLE_N_CAP}, got {n_max}")
    # by_top[n][k]: valid k-subsets whose largest element is n
    by_top = np.zeros((n_max + 1, n_max + 2), dtype=np.int64)
    by_top[0][0] = 1  # the empty subset
    chunk = 1 << 22
    total = 1 << n_max
    for start in range(1, total, chunk):
        stop = min(start + chunk, total)
        s = np.arange(start, stop, dtype=np.uint32)
        valid = np.ones(s.shape, dtype=bool)
        for d in qset.diffs:
            valid &= (s & (s >> np.uint32(d))) == 0
        s_ok = s[valid]
        if s_ok.size == 0:
            continue
        tops = _bit_length32(s_ok).astype(np.int64)
        ks = _popcount(s_ok).astype(np.int64)
        np.add.at(by_top, (tops, ks), 1)
    return _table_from_by_top(by_top, n_max, with_triangle)


def _table_from_by_top(by_top, n_max: int, with_triangle: bool) -> CountTable:
    totals = []
    rows = []
    row_running = [0] * (n_max + 1)
    for n in range(n_max + 1):
        for k in range(n_max + 1):
            row_running[k] += int(by_top[n][k])
        totals.append(sum(row_running))
        if with_triangle:
            rows.append(tuple(row_running[: n + 1]))
    return CountTable(
        n_max, tuple(totals), tuple(rows) if with_triangle else None
    )


def count_subsets_fast(
    qset: QSet, n_max: int, with_triangle: bool = False
) -> CountTable:
    """Sliding-window dynamic program over the last q positions.

    State: bit i-1 set iff position n-i is in the subset.  Matches the
    oracle's output contract exactly.
    """
    q = qset.q
    if q > FAST_Q_CAP:
        raise CapacityError(f"q must be at most {FAST_Q_CAP}, got {q}")
    qmask = qset.mask
    window = (1 << q) - 1
    # dp maps state -> counts by subset size (list, padded lazily)
    dp: dict[int, list[int]] = {0: [1]}
    totals = [1]
    rows = [(1,)] if with_triangle else None
    for n in range(1, n_max + 1):
        nxt: dict[int, list[int]] = {}
        for state, by_k in dp.items():
            # skip position n
            _accumulate(nxt, (state << 1) & window, by_k, 0)
            # take position n if no disallowed difference with the window
            if state & qmask == 0:
                _accumulate(nxt, ((state << 1) | 1) & window, by_k, 1)
        dp = nxt
        row = [0] * (n + 1)
        for by_k in dp.values():
            for k, c in enumerate(by_k):
                row[k] += c
        totals.append(sum(row))
        if with_triangle:
            rows.append(tuple(row))
    return CountTable(
        n_max, tuple(totals), tuple(rows) if with_triangle else None
    )


def _accumulate(dp: dict, state: int, by_k: list[int], k_shift: int) -> None:
    tgt = dp.setdefault(state, [])
    need = len(by_k) + k_shift
    if len(tgt) < need:
        tgt.extend([0] * (need - len(tgt)))
    for k, c in enumerate(by_k):
        tgt[k + k_shift] += c


def run_closed_form(q: int, n: int, k: int) -> int:
    """Number of k-subsets avoiding all differences 1..q: C(n+q(1-k), k)."""
    if q < 1:
        raise ValueError("q must be positive")
    if k < 0:
        return 0
    top = n + q * (1 - k)
    if top < k:
        return 0
    return comb(top, k)


def is_well_based(qset: QSet) -> bool:
    """Whether Q is a well-based sequence.

    Two equivalent characterizations, both evaluated and asserted equal:
    every element can only be split as a sum with at least one part in Q
    (so the smallest element is 1), and no sum of two complement elements
    lies in Q.
    """
    members = set(qset.diffs)
    by_splits = all(
        delta in members or (qj - delta) in members
        for qj in qset.diffs
        for delta in range(1, qj)
    )
    comp = qset.complement
    by_complement = all(pi + pj not in members for pi in comp for pj in comp)
    assert by_splits == by_complement, qset
    return by_splits
