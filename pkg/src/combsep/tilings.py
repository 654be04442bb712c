"""Brute-force restricted-overlap tiling counts.

Counts tilings of an n-cell board with squares and translated copies of
a comb.  A square's cell and each comb's leftmost cell must land on an
uncovered cell; the remaining tooth cells of a comb may overlap tooth
cells of other combs.  Enumeration places each new tile with its
leftmost cell at the leftmost uncovered cell, so the overlap rule is
enforced by construction (everything already covered ahead of that cell
was covered by non-leftmost comb cells).

This module is deliberately naive: it recursively enumerates every
tiling and serves as the oracle for the recursion machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qsets import CapacityError, Comb, QSet, comb_from_qset, count_subsets_oracle

TILING_N_CAP_MARGIN = 16  # documented cap: n_max <= margin + comb length


@dataclass(frozen=True)
class TilingCountTable:
    """Totals B_0..B_n_max and the per-comb-count triangle."""

    n_max: int
    b: tuple[int, ...]
    b_k: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        return self.b_k[n]


def count_tilings(c: Comb, n_max: int) -> TilingCountTable:
    """Count restricted-overlap tilings for every board length up to n_max.

    A comb must fit entirely on the board (its full extent, cell 0 to
    cell q, lies within the n cells).
    """
    cap = TILING_N_CAP_MARGIN + c.length
    if n_max > cap:
        raise CapacityError(f"n_max must be at most {cap} for this comb")
    extent = c.length  # cells 0..q
    comb_bits = 0
    for j in c.tooth_cells:
        comb_bits |= 1 << j
    totals = []
    rows = []
    for n in range(n_max + 1):
        by_k: dict[int, int] = {}
        _enumerate(0, 0, n, extent, comb_bits, 0, by_k)
        k_max = max(by_k) if by_k else 0
        row = tuple(by_k.get(k, 0) for k in range(k_max + 1))
        rows.append(row)
        totals.append(sum(row))
    return TilingCountTable(n_max, tuple(totals), tuple(rows))


def _enumerate(pos, ahead, n, extent, comb_bits, k, by_k):
    """Recurse over tile choices; ahead holds coverage of cells > pos."""
    while ahead & 1:
        ahead >>= 1
        pos += 1
    if pos >= n:
        by_k[k] = by_k.get(k, 0) + 1
        return
    # square on the uncovered cell at pos
    _enumerate(pos + 1, ahead >> 1, n, extent, comb_bits, k, by_k)
    # comb with its cell 0 at pos, if its extent stays on the board
    if pos + extent <= n:
        _enumerate(pos + 1, (ahead | comb_bits) >> 1, n, extent, comb_bits, k + 1, by_k)


def verify_s_equals_b(qset: QSet, n_max: int) -> dict:
    """Check S_n = B_{n+q} and S_{n,k} = B_{n+q,k} for n up to n_max."""
    q = qset.q
    comb = comb_from_qset(qset)
    s = count_subsets_oracle(qset, n_max, with_triangle=True)
    b = count_tilings(comb, n_max + q)
    failures = []
    for n in range(n_max + 1):
        if s.totals[n] != b.b[n + q]:
            failures.append(
                {"n": n, "kind": "total", "s": s.totals[n], "b": b.b[n + q]}
            )
        s_row = s.row(n)
        b_row = b.row(n + q)
        width = max(len(s_row), len(b_row))
        for k in range(width):
            sv = s_row[k] if k < len(s_row) else 0
            bv = b_row[k] if k < len(b_row) else 0
            if sv != bv:
                failures.append({"n": n, "k": k, "kind": "refined", "s": sv, "b": bv})
    return {"qset": str(qset), "n_max": n_max, "passed": not failures, "failures": failures}
