"""Stable Albanese homology tables for the IA and IO automorphism groups.

The degree-i table W_i is assembled from generator multisets: corollas of
degree l (shape V_{1^{l+1},1}) and wheels of degree l (shape V_{1^l,0}).
Each multiset contributes the traceless product, over its distinct
generator types, of the graded-symmetric powers of that type; W_i is the
sum over all multisets of total degree i.  The outer variant removes the
degree-1 wheel.  Every output is valid in the stable range n >= 3i and is
tagged with that threshold.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache, reduce

from .errors import InputError
from .partitions import Bipartition, partitions_of
from .schur import (
    Decomposition,
    DimensionPolynomial,
    dim_polynomial,
    graded_symmetric_power,
    tensor_by_standard,
    traceless_product,
)

VARIANTS = ("full", "outer")


@dataclass(frozen=True)
class GeneratorMultiset:
    """A multiset of corolla and wheel generators, recorded by degree."""

    corollas: tuple[int, ...]  # degrees, weakly decreasing
    wheels: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.corollas) + sum(self.wheels)

    @property
    def covariant_size(self) -> int:
        return sum(l + 1 for l in self.corollas) + sum(self.wheels)

    @property
    def contravariant_size(self) -> int:
        return len(self.corollas)

    @property
    def is_singleton(self) -> bool:
        return len(self.corollas) + len(self.wheels) == 1


def corolla_shape(l: int) -> Bipartition:
    """Shape of the degree-l corolla generator: one wedge column over one dual box."""
    if l < 1:
        raise InputError("corolla degree must be >= 1")
    return Bipartition((1,) * (l + 1), (1,))


def wheel_shape(l: int) -> Bipartition:
    """Shape of the degree-l wheel generator: a single wedge column."""
    if l < 1:
        raise InputError("wheel degree must be >= 1")
    return Bipartition((1,) * l, ())


def generator_multisets(i: int, *, include_degree_one_wheel: bool = True) -> list[GeneratorMultiset]:
    """All generator multisets of total degree i, deterministically ordered."""
    out = []
    for j in range(i + 1):
        for cor in partitions_of(j):
            for whl in partitions_of(i - j):
                if not include_degree_one_wheel and whl and whl[-1] == 1:
                    continue
                out.append(GeneratorMultiset(cor, whl))
    return out


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise InputError(f"variant must be one of {VARIANTS}, got {variant!r}")


def generator_u(i: int) -> Decomposition:
    """Decomposition of the degree-i generator space Hom(H, wedge^{i+1} H)."""
    if i < 1:
        raise InputError("generator degree must be >= 1")
    return Decomposition({corolla_shape(i): 1, wheel_shape(i): 1}, degree=i)


def generator_u_out(i: int) -> Decomposition:
    """Outer variant of the generator space: degree 1 loses its wheel summand."""
    if i < 1:
        raise InputError("generator degree must be >= 1")
    if i == 1:
        return Decomposition({corolla_shape(1): 1}, degree=1)
    return generator_u(i)


def _multiset_contribution(ms: GeneratorMultiset) -> Decomposition:
    factors = [
        graded_symmetric_power(corolla_shape(l), l, k)
        for l, k in sorted(Counter(ms.corollas).items(), reverse=True)
    ]
    factors += [
        graded_symmetric_power(wheel_shape(l), l, k)
        for l, k in sorted(Counter(ms.wheels).items(), reverse=True)
    ]
    return reduce(traceless_product, factors, Decomposition.unit())


@cache
def albanese_w(i: int, variant: str = "full") -> Decomposition:
    """Degree-i stable Albanese homology table (variant "full" or "outer").

    Valid for n >= 3i; the degree tag records i.
    """
    _check_variant(variant)
    if i < 0:
        raise InputError("homological degree must be nonnegative")
    if i == 0:
        return Decomposition.unit(degree=0)
    total = Decomposition(degree=i)
    for ms in generator_multisets(i, include_degree_one_wheel=(variant == "full")):
        total = total + _multiset_contribution(ms)
    return Decomposition(dict(total.items()), degree=i)


def primitive_part(i: int) -> Decomposition:
    """Contribution of the singleton generator multisets to W_i.

    Coincides with the generator space in every degree.
    """
    if i < 1:
        raise InputError("degree must be >= 1")
    total = Decomposition(degree=i)
    for ms in generator_multisets(i):
        if ms.is_singleton:
            total = total + _multiset_contribution(ms)
    return Decomposition(dict(total.items()), degree=i)


def constituent_support(i: int) -> list[tuple[int, int]]:
    """(covariant size, contravariant size) pairs occurring in W_i."""
    if i < 1:
        raise InputError("degree must be >= 1")
    pairs = {b.sizes for b, _ in albanese_w(i, "full").items()}
    return sorted(pairs)


def verify_io_splitting(i: int) -> bool:
    """Check W_i == W^O_i + (W^O_{i-1} tensor H) as multisets of irreducibles."""
    if i < 1:
        raise InputError("degree must be >= 1")
    lhs = albanese_w(i, "full")
    rhs = albanese_w(i, "outer") + tensor_by_standard(albanese_w(i - 1, "outer"))
    return lhs == rhs


def albanese_dim_polynomial(i: int, variant: str = "full") -> DimensionPolynomial:
    """Dimension of the degree-i table as an exact polynomial in the rank.

    The recorded validity threshold is the stable range n >= 3i.
    """
    _check_variant(variant)
    return dim_polynomial(albanese_w(i, variant), stable_from=3 * i)


def conjectural_cohomology_dim(i: int) -> DimensionPolynomial:
    """Dimension polynomial of the full degree-i rational cohomology of IA_n.

    Computed as sum_{k+l=i} dim(W_k) * m(l) where m(l) counts monomials of
    degree l in polynomial generators z_j of degree 4j.  The result is
    always flagged conjectural: it is conditional on the cohomology being
    an algebraic representation stably.
    """
    if i < 0:
        raise InputError("degree must be nonnegative")
    total = DimensionPolynomial((), 3 * i, conjectural=True)
    for l in range(0, i + 1, 4):
        mult = len(partitions_of(l // 4))
        if mult:
            total = total + albanese_dim_polynomial(i - l, "full").scaled(mult)
    return DimensionPolynomial(total.coeffs, max(total.stable_from, 3 * i), True)
