"""Labeled corolla/wheel forest structures and their counts.

A forest structure on inputs {1..a} with b outputs is an ordered list of b
tree blocks (each of size >= 2, tree block j feeding output j) together
with an unordered set partition of the remaining inputs into wheel blocks
(each nonempty).  Tree blocks carry the sign representation of their
symmetric group and wheels are one-dimensional, so hom-space dimensions
equal structure counts.  Degrees are forced: every structure on (a, b) has
degree exactly a - b.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import comb, factorial

from .errors import InputError
from .homology import albanese_w
from .schur import decompose_mixed_tensor, multiplicity_pairing


@dataclass(frozen=True)
class ForestStructure:
    tree_blocks: tuple[tuple[int, ...], ...]
    wheel_blocks: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> int:
        return sum(len(t) - 1 for t in self.tree_blocks) + sum(
            len(w) for w in self.wheel_blocks
        )

    @property
    def ground_size(self) -> int:
        return sum(len(t) for t in self.tree_blocks) + sum(len(w) for w in self.wheel_blocks)


def _set_partitions(elements: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """All set partitions into nonempty blocks, canonically ordered by minima."""
    if not elements:
        return [()]
    first, rest = elements[0], elements[1:]
    out = []
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            block = (first,) + extra
            remaining = tuple(x for x in rest if x not in extra)
            for sub in _set_partitions(remaining):
                out.append((block,) + sub)
    return out


def _tree_choices(elements: tuple[int, ...], b: int):
    """Ordered b-tuples of disjoint subsets of size >= 2, plus the leftover."""
    if b == 0:
        yield (), elements
        return
    if len(elements) < 2 * b:
        return
    for size in range(2, len(elements) - 2 * (b - 1) + 1):
        for block in combinations(elements, size):
            remaining = tuple(x for x in elements if x not in block)
            for blocks, leftover in _tree_choices(remaining, b - 1):
                yield (block,) + blocks, leftover


def enumerate_structures(a: int, b: int) -> list[ForestStructure]:
    """All forest structures on ground set {1..a} with b tree blocks."""
    if a < 0 or b < 0:
        raise InputError("arities must be nonnegative")
    ground = tuple(range(1, a + 1))
    out = []
    for trees, leftover in _tree_choices(ground, b):
        for wheels in _set_partitions(leftover):
            out.append(ForestStructure(trees, wheels))
    return out


@cache
def count_nonunital_prop(a: int, b: int) -> int:
    """Dimension of the (a, b) hom-space of the non-unital corolla/wheel PROP.

    Concentrated in degree a - b.
    """
    return len(enumerate_structures(a, b))


@cache
def count_wheeled_prop(p: int, q: int) -> int:
    """Dimension of the (p, q) hom-space of the wheeled (unital) PROP.

    Expands over the number c of contracted identity strands:
    sum_c C(p,c) C(q,c) c! N(p-c, q-c).
    """
    if p < 0 or q < 0:
        raise InputError("arities must be nonnegative")
    return sum(
        comb(p, c) * comb(q, c) * factorial(c) * count_nonunital_prop(p - c, q - c)
        for c in range(min(p, q) + 1)
    )


@dataclass(frozen=True)
class StableTwistedDim:
    """Stable twisted cohomology dimension of Aut(F_n) with H^{p,q} coefficients."""

    p: int
    q: int
    degree: int  # the one degree where the group can be nonzero
    dim: int
    stable_from: int  # the rank bound for the stated degree

    def dim_in_degree(self, i: int) -> int:
        return self.dim if i == self.degree else 0


def stable_aut_cohomology_dim(p: int, q: int) -> StableTwistedDim:
    """Stable dimension of the degree p-q twisted cohomology of Aut(F_n).

    All other degrees vanish stably.  The rank bound evaluates
    min(max(3i+4, p+q), 2i+p+q+3) at i = p-q.
    """
    if p < 0 or q < 0:
        raise InputError("arities must be nonnegative")
    i = p - q
    stable_from = min(max(3 * i + 4, p + q), 2 * i + p + q + 3)
    return StableTwistedDim(p, q, i, count_wheeled_prop(p, q), stable_from)


def cross_check_invariants(p: int, q: int) -> bool:
    """Compare the two routes to the invariant dimension of W_i* tensor H^{p,q}.

    Representation theory (multiplicity pairing against the degree p-q
    table) must agree with the combinatorial wheeled-PROP count.
    """
    if p < 0 or q < 0 or p - q < 0:
        raise InputError("need p >= q >= 0")
    lhs = multiplicity_pairing(albanese_w(p - q, "full"), decompose_mixed_tensor(p, q))
    return lhs == count_wheeled_prop(p, q)
