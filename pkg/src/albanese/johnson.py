"""Free-group words, IA membership, and the degree-one Johnson invariant.

Words are tuples of signed generator indices (a > 0 for x_a, a < 0 for
x_a^{-1}), kept freely reduced.  The Johnson invariant of an IA
automorphism f assigns to each generator x_a the wedge-square class of
f(x_a) x_a^{-1}, computed by degree-two Magnus pair counting and stored on
the normalized basis e_b ^ e_c with b < c (and e_c ^ e_b = -e_b ^ e_c).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .errors import InputError
from .linalg import exact_rank

FreeWord = tuple[int, ...]


def reduce_word(letters: Iterable[int], n: int) -> FreeWord:
    """Freely reduce a word given as signed generator indices."""
    out: list[int] = []
    for raw in letters:
        a = int(raw)
        if a == 0 or abs(a) > n:
            raise InputError(f"letter {a} out of range for rank {n}")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert_word(w: FreeWord) -> FreeWord:
    return tuple(-a for a in reversed(w))


_LETTER_RE = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, n: int) -> FreeWord:
    """Parse caret notation like "x1 x2^-1 x1"."""
    letters: list[int] = []
    for tok in text.split():
        m = _LETTER_RE.match(tok)
        if not m:
            raise InputError(f"cannot parse letter {tok!r}")
        idx, exp = int(m.group(1)), int(m.group(2) or 1)
        letters.extend([idx if exp > 0 else -idx] * abs(exp))
    return reduce_word(letters, n)


def word_str(w: FreeWord) -> str:
    if not w:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in w)


@dataclass(frozen=True)
class FreeEndomorphism:
    """An endomorphism of the free group, one image word per generator."""

    n: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.n:
            raise InputError(f"need {self.n} images, got {len(self.images)}")
        object.__setattr__(
            self, "images", tuple(reduce_word(w, self.n) for w in self.images)
        )

    @classmethod
    def identity(cls, n: int) -> "FreeEndomorphism":
        return cls(n, tuple((a,) for a in range(1, n + 1)))

    @classmethod
    def from_json(cls, text: str, n: int) -> "FreeEndomorphism":
        data = json.loads(text)
        images = []
        for a in range(1, n + 1):
            key = f"x{a}"
            if key not in data:
                raise InputError(f"endomorphism JSON is missing {key!r}")
            images.append(parse_word(data[key], n))
        return cls(n, tuple(images))

    def to_json(self) -> str:
        return json.dumps({f"x{a+1}": word_str(w) for a, w in enumerate(self.images)})

    def __str__(self) -> str:
        return ", ".join(f"x{a+1} -> {word_str(w)}" for a, w in enumerate(self.images))


def apply_endo(f: FreeEndomorphism, w: FreeWord) -> FreeWord:
    """Substitute generator images and reduce."""
    out: list[int] = []
    for a in w:
        img = f.images[a - 1] if a > 0 else invert_word(f.images[-a - 1])
        out.extend(img)
    return reduce_word(out, f.n)


def compose(f: FreeEndomorphism, g: FreeEndomorphism) -> FreeEndomorphism:
    """The endomorphism f o g (apply g first)."""
    if f.n != g.n:
        raise InputError("rank mismatch in composition")
    return FreeEndomorphism(f.n, tuple(apply_endo(f, w) for w in g.images))


def abelianized_matrix(f: FreeEndomorphism) -> tuple[tuple[int, ...], ...]:
    """Exponent-sum matrix of the images (rows indexed by generators)."""
    rows = []
    for w in f.images:
        row = [0] * f.n
        for a in w:
            row[abs(a) - 1] += 1 if a > 0 else -1
        rows.append(tuple(row))
    return tuple(rows)


def is_ia(f: FreeEndomorphism) -> bool:
    """True iff the abelianization of f is the identity matrix."""
    mat = abelianized_matrix(f)
    return all(
        mat[i][j] == (1 if i == j else 0) for i in range(f.n) for j in range(f.n)
    )


def magnus_generators(n: int) -> list[FreeEndomorphism]:
    """The standard IA generating family at rank n.

    Conjugation moves x_a -> x_b x_a x_b^{-1} for a != b, then commutator
    moves x_a -> x_a [x_b, x_c] for b < c with a not in {b, c}; in total
    n(n-1) + n*C(n-1, 2) automorphisms.
    """
    if n < 3:
        raise InputError("the generating family needs rank >= 3")
    gens = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b:
                continue
            images = [(g,) for g in range(1, n + 1)]
            images[a - 1] = (b, a, -b)
            gens.append(FreeEndomorphism(n, tuple(images)))
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(b + 1, n + 1):
                if a in (b, c):
                    continue
                images = [(g,) for g in range(1, n + 1)]
                images[a - 1] = (a, b, c, -b, -c)
                gens.append(FreeEndomorphism(n, tuple(images)))
    return gens


def conjugation_move(n: int, a: int, b: int) -> FreeEndomorphism:
    """x_a -> x_b x_a x_b^{-1}, other generators fixed."""
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise InputError("need distinct generator indices in range")
    images = [(g,) for g in range(1, n + 1)]
    images[a - 1] = (b, a, -b)
    return FreeEndomorphism(n, tuple(images))


def commutator_move(n: int, a: int, b: int, c: int) -> FreeEndomorphism:
    """x_a -> x_a [x_b, x_c], other generators fixed."""
    if len({a, b, c}) != 3 or not all(1 <= x <= n for x in (a, b, c)):
        raise InputError("need three distinct generator indices in range")
    images = [(g,) for g in range(1, n + 1)]
    images[a - 1] = (a, b, c, -b, -c)
    return FreeEndomorphism(n, tuple(images))


class JohnsonValue:
    """An element of Hom(H, wedge^2 H) with exact integer coefficients.

    Stored as {(a, b, c): coeff} meaning e_a maps to coeff * e_b ^ e_c with
    b < c.
    """

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs: Mapping[tuple[int, int, int], int] | None = None):
        self.n = n
        self._c: dict[tuple[int, int, int], int] = {}
        for (a, b, c), v in (coeffs or {}).items():
            if not (1 <= a <= n and 1 <= b < c <= n):
                raise InputError(f"bad wedge coefficient index {(a, b, c)}")
            if v:
                self._c[(a, b, c)] = self._c.get((a, b, c), 0) + v

    def coefficient(self, a: int, b: int, c: int) -> int:
        """Signed coefficient of e_b ^ e_c in the image of e_a (any order of b, c)."""
        if b == c:
            return 0
        if b < c:
            return self._c.get((a, b, c), 0)
        return -self._c.get((a, c, b), 0)

    def items(self) -> list[tuple[tuple[int, int, int], int]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "JohnsonValue") -> "JohnsonValue":
        if self.n != other.n:
            raise InputError("rank mismatch")
        merged = dict(self._c)
        for k, v in other._c.items():
            merged[k] = merged.get(k, 0) + v
        return JohnsonValue(self.n, merged)

    def __eq__(self, other) -> bool:
        return isinstance(other, JohnsonValue) and self.n == other.n and self._c == other._c

    def __repr__(self) -> str:
        if not self._c:
            return "JohnsonValue(0)"
        body = ", ".join(
            f"e{a} -> {v}*e{b}^e{c}" for (a, b, c), v in self.items()
        )
        return f"JohnsonValue({body})"

    def as_vector(self) -> dict[int, int]:
        """Flat coordinates over the basis (a, b<c), for rank computations."""
        n = self.n
        pair_index = {}
        idx = 0
        for b in range(1, n + 1):
            for c in range(b + 1, n + 1):
                pair_index[(b, c)] = idx
                idx += 1
        return {
            (a - 1) * idx + pair_index[(b, c)]: v for (a, b, c), v in self._c.items()
        }


def _wedge_abelianization(w: FreeWord, n: int) -> dict[tuple[int, int, int], int]:
    # degree-two Magnus coefficients; off-diagonal part must be
    # antisymmetric for a commutator-subgroup word
    m: dict[tuple[int, int], int] = {}
    letters = [(abs(a), 1 if a > 0 else -1) for a in w]
    for i in range(len(letters)):
        gi, ei = letters[i]
        for j in range(i + 1, len(letters)):
            gj, ej = letters[j]
            if gi == gj:
                continue
            key = (gi, gj)
            m[key] = m.get(key, 0) + ei * ej
    for (b, c), v in m.items():
        if v + m.get((c, b), 0) != 0:
            raise InputError("word is not in the commutator subgroup")
    return {(b, c): v for (b, c), v in m.items() if b < c and v}


def johnson_tau(f: FreeEndomorphism) -> JohnsonValue:
    """The Johnson invariant: e_a -> class of f(x_a) x_a^{-1} in wedge^2 H."""
    if not is_ia(f):
        raise InputError("the Johnson invariant is only defined on IA elements")
    coeffs: dict[tuple[int, int, int], int] = {}
    for a in range(1, f.n + 1):
        w = reduce_word(f.images[a - 1] + (-a,), f.n)
        for (b, c), v in _wedge_abelianization(w, f.n).items():
            coeffs[(a, b, c)] = v
    return JohnsonValue(f.n, coeffs)


def tau_span_dim(n: int) -> int:
    """Exact rank of the Johnson values of the standard generating family."""
    if n < 3:
        raise InputError("need rank >= 3")
    rows = [johnson_tau(g).as_vector() for g in magnus_generators(n)]
    return exact_rank(rows, n * comb(n, 2))


def pairing_eval(
    cocycle: Mapping[FreeEndomorphism, JohnsonValue],
    g: FreeEndomorphism,
    x: tuple[int, int, int],
) -> int:
    """Evaluate a Johnson-valued cochain against a homology basis element.

    `x = (i, j, k)` stands for e_i (x) e*_j (x) e*_k; the value is the
    signed coefficient of e_k ^ e_j in the image of e_i, so it is
    antisymmetric under swapping j and k.
    """
    if g not in cocycle:
        raise InputError("endomorphism is outside the cochain's domain")
    v = cocycle[g]
    i, j, k = x
    if not all(1 <= t <= v.n for t in (i, j, k)):
        raise InputError(f"basis index {x} out of range for rank {v.n}")
    return v.coefficient(i, k, j)


def tau_cochain(gens: Iterable[FreeEndomorphism]) -> dict[FreeEndomorphism, JohnsonValue]:
    """The Johnson invariant tabulated on a finite generator list."""
    return {g: johnson_tau(g) for g in gens}
