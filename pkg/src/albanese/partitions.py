"""Integer partitions, bipartitions, and symmetric-group arithmetic.

Everything downstream (the Schur calculus, the homology tables, the
brute-force tensor oracle) reduces to the primitives here: partition
enumeration, Specht-module dimensions via hook lengths,
Littlewood-Richardson coefficients via tableau enumeration, and
Murnaghan-Nakayama character values.  All arithmetic is exact.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  The canonical listing order
used throughout is decreasing lexicographic, e.g. (3), (2,1), (1,1,1).
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import Iterable, NamedTuple

from .errors import InputError

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of parts to a valid partition (zeros dropped)."""
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p):
        raise InputError(f"partition parts must be positive: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InputError(f"partition parts must be weakly decreasing: {p!r}")
    return p


def partition_str(p: Partition) -> str:
    """Canonical text form: comma-separated parts, "0" for the empty partition."""
    return ",".join(str(x) for x in p) if p else "0"


def parse_partition(text: str) -> Partition:
    t = text.strip()
    if t in ("", "0"):
        return ()
    try:
        return check_partition(int(s) for s in t.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse partition {text!r}") from exc


class Bipartition(NamedTuple):
    """A pair (lam, mu) indexing a mixed-tensor irreducible.

    `lam` is the covariant partition, `mu` the contravariant one.
    """

    lam: Partition
    mu: Partition

    @property
    def sizes(self) -> tuple[int, int]:
        return sum(self.lam), sum(self.mu)

    @property
    def total_length(self) -> int:
        return len(self.lam) + len(self.mu)

    def __str__(self) -> str:
        return f"{partition_str(self.lam)}|{partition_str(self.mu)}"


def bipartition(lam: Iterable[int], mu: Iterable[int]) -> Bipartition:
    return Bipartition(check_partition(lam), check_partition(mu))


def parse_bipartition(text: str) -> Bipartition:
    parts = text.split("|")
    if len(parts) != 2:
        raise InputError(f"bipartition text must look like '2,1|1': {text!r}")
    return Bipartition(parse_partition(parts[0]), parse_partition(parts[1]))


@cache
def _partitions(rem: int, max_part: int, max_len: int) -> tuple[Partition, ...]:
    if rem == 0:
        return ((),)
    if max_part == 0 or max_len == 0:
        return ()
    out = []
    for first in range(min(rem, max_part), 0, -1):
        for rest in _partitions(rem - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(k: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of k (length-bounded if requested), decreasing lex order."""
    if k < 0:
        raise InputError("cannot partition a negative integer")
    return list(_partitions(k, k, k if max_length is None else max_length))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams, inner inside outer."""
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


@cache
def specht_dim(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = check_partition(lam)
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks


def _count_lr_tableaux(lam: Partition, xi: Partition, nu: Partition) -> int:
    # Fill the skew shape nu/lam in reverse reading order (rows top to
    # bottom, each row right to left); the lattice condition then becomes a
    # prefix condition on the running content.
    rows = len(nu)
    lam_p = lam + (0,) * (rows - len(lam))
    cells = []
    for r in range(rows):
        for c in range(nu[r] - 1, lam_p[r] - 1, -1):
            cells.append((r, c))
    content = list(xi)
    nvals = len(content)
    counts = [0] * (nvals + 1)
    values: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = nvals
        if c + 1 < nu[r] and (r, c + 1) in values:
            hi = min(hi, values[(r, c + 1)])
        lo = 1
        if r > 0 and c >= lam_p[r - 1] and c < nu[r - 1]:
            lo = values[(r - 1, c)] + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue  # reverse reading word must stay a lattice word
            counts[v] += 1
            values[(r, c)] = v
            total += fill(idx + 1)
            del values[(r, c)]
            counts[v] -= 1
        return total

    return fill(0)


@cache
def lr_coefficient(lam: Partition, xi: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam,xi}."""
    lam, xi, nu = check_partition(lam), check_partition(xi), check_partition(nu)
    if sum(nu) != sum(lam) + sum(xi):
        return 0
    if not contains(nu, lam) or not contains(nu, xi):
        return 0
    if len(nu) > len(lam) + len(xi):
        return 0
    return _count_lr_tableaux(lam, xi, nu)


@cache
def _schur_product_items(lam: Partition, xi: Partition) -> tuple[tuple[Partition, int], ...]:
    p = sum(lam) + sum(xi)
    out = []
    for nu in _partitions(p, p, len(lam) + len(xi)):
        if lam and nu[0] > lam[0] + (xi[0] if xi else 0):
            continue
        c = lr_coefficient(lam, xi, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def schur_product(lam: Partition, xi: Partition) -> dict[Partition, int]:
    """Expansion of s_lam * s_xi in the Schur basis."""
    lam, xi = check_partition(lam), check_partition(xi)
    return dict(_schur_product_items(lam, xi))


def centralizer_order(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    z = 1
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return z


@cache
def symmetric_group_character(lam: Partition, rho: Partition) -> int:
    """Irreducible character chi^lam on cycle type rho (Murnaghan-Nakayama).

    Uses the beta-number form of the recursion: removing a border strip of
    size k is subtracting k from a first-column hook length.
    """
    lam, rho = check_partition(lam), check_partition(rho)
    if sum(lam) != sum(rho):
        raise InputError(f"character size mismatch: |{lam}| != |{rho}|")
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    m = len(lam)
    betas = sorted(lam[i] + (m - 1 - i) for i in range(m))
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        crossings = sum(1 for c in betas if nb < c < b)
        newbetas = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(x - (m - 1 - i) for i, x in enumerate(newbetas))
        total += (-1) ** crossings * symmetric_group_character(
            tuple(x for x in newlam if x), rest
        )
    return total
