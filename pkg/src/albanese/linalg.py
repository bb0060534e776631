"""Exact linear algebra over the rationals.

Three rank engines, all exact:

* fraction-free Bareiss elimination on dense integer matrices (the default
  for eliminated dimension <= 2000);
* incremental sparse Gaussian elimination over Fraction rows (used for tall
  sparse condition matrices and for kernel bases);
* modular elimination at two independent 62-bit primes with mandatory
  agreement, escalating to a third prime on disagreement (the default
  above the Bareiss threshold).

Ranks never depend on pivot order; recomputation by any engine must return
the identical integer, and the test suite checks that.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConsistencyError

BAREISS_LIMIT = 2000

#: 2^61 - 1 (Mersenne) and two more 62-bit primes for modular ranks
MODULAR_PRIMES = (2305843009213693951, 4611686018427387847, 4611686018427387817)

SparseRow = dict[int, Fraction]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def _normalize_rows(rows: Iterable[dict[int, int] | dict[int, Fraction]]) -> list[SparseRow]:
    out = []
    for row in rows:
        clean = {c: Fraction(v) for c, v in row.items() if v != 0}
        if clean:
            out.append(clean)
    return out


def sparse_rank_fraction(
    rows: Iterable[dict[int, int] | dict[int, Fraction]],
    *,
    stop_at: int | None = None,
) -> int:
    """Rank by incremental sparse elimination with leftmost-column pivots."""
    pivots: dict[int, SparseRow] = {}
    for row in _normalize_rows(rows):
        row = _reduce_row(row, pivots)
        if row:
            c = min(row)
            inv = 1 / row[c]
            pivots[c] = {k: v * inv for k, v in row.items()}
            if stop_at is not None and len(pivots) >= stop_at:
                break
    return len(pivots)


def _reduce_row(row: SparseRow, pivots: dict[int, SparseRow]) -> SparseRow:
    row = dict(row)
    while row:
        c = min(row)
        prow = pivots.get(c)
        if prow is None:
            return row
        f = row[c]
        for k, v in prow.items():
            nv = row.get(k, Fraction(0)) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return row


def _modular_rank_single(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        cur = {c: v % p for c, v in row.items() if v % p}
        while cur:
            c = min(cur)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(cur[c], -1, p)
                pivots[c] = {k: (v * inv) % p for k, v in cur.items()}
                rank += 1
                break
            f = cur[c]
            for k, v in prow.items():
                nv = (cur.get(k, 0) - f * v) % p
                if nv:
                    cur[k] = nv
                else:
                    cur.pop(k, None)
    return rank


def modular_rank(rows: Iterable[dict[int, int]], *, primes=MODULAR_PRIMES) -> int:
    """Rank via elimination mod two primes; third prime arbitrates disagreement."""
    cache_rows = [dict(r) for r in rows]
    r1 = _modular_rank_single(cache_rows, primes[0])
    r2 = _modular_rank_single(cache_rows, primes[1])
    if r1 == r2:
        return r1
    r3 = _modular_rank_single(cache_rows, primes[2])
    if r3 in (r1, r2):
        return r3
    raise ConsistencyError(f"modular ranks disagree pairwise: {r1}, {r2}, {r3}")


def _clear_denominators(row: SparseRow) -> dict[int, int]:
    lcm = 1
    for v in row.values():
        d = v.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    return {c: int(v * lcm) for c, v in row.items()}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def exact_rank(rows: Iterable[dict[int, int] | dict[int, Fraction]], ncols: int) -> int:
    """Exact rank of a sparse-rows matrix, dispatching on eliminated size.

    Dense Bareiss when both dimensions fit the threshold, sparse rational
    elimination for tall-but-narrow systems, double-prime modular above.
    """
    rows = _normalize_rows(rows)
    if not rows:
        return 0
    if ncols <= BAREISS_LIMIT:
        if len(rows) <= BAREISS_LIMIT:
            int_rows = [_clear_denominators(r) for r in rows]
            dense = [[r.get(c, 0) for c in range(ncols)] for r in int_rows]
            return bareiss_rank(dense)
        return sparse_rank_fraction(rows, stop_at=ncols)
    return modular_rank([_clear_denominators(r) for r in rows])


def rref(rows: Iterable[dict[int, int] | dict[int, Fraction]]) -> dict[int, SparseRow]:
    """Fully reduced row echelon form, returned as pivot-column -> row."""
    pivots: dict[int, SparseRow] = {}
    for row in _normalize_rows(rows):
        row = _reduce_row(row, pivots)
        if not row:
            continue
        c = min(row)
        inv = 1 / row[c]
        row = {k: v * inv for k, v in row.items()}
        for pc, prow in list(pivots.items()):
            f = prow.get(c)
            if f:
                for k, v in row.items():
                    nv = prow.get(k, Fraction(0)) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivots[c] = row
    return pivots


def kernel_basis(
    rows: Iterable[dict[int, int] | dict[int, Fraction]], ncols: int
) -> list[dict[int, int]]:
    """Integer basis of the right kernel of a sparse-rows matrix.

    One vector per free column, with denominators cleared; deterministic in
    the column order.
    """
    pivots = rref(rows)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free_cols:
        vec = {f: Fraction(1)}
        for pc, prow in pivots.items():
            coeff = prow.get(f)
            if coeff:
                vec[pc] = -coeff
        basis.append(_clear_denominators(vec))
    return basis


def dump_sparse_triplets(columns: Sequence[dict[int, int] | dict[int, Fraction]], fh) -> None:
    """Write a sparse matrix, given by columns, as 'row col num/den' lines."""
    for col_idx, col in enumerate(columns):
        for row_idx in sorted(col):
            v = Fraction(col[row_idx])
            fh.write(f"{row_idx} {col_idx} {v.numerator}/{v.denominator}\n")
