"""Brute-force oracles shared across the test suite.

These deliberately avoid the library's algorithms: standard tableaux are
counted by corner-removal recursion, Schur polynomials come from explicit
semistandard fillings, products from monomial convolution, and plethysm
from monomial substitution.  Agreement with the package is therefore
meaningful evidence, not a tautology.
"""

from functools import cache

Mono = tuple[int, ...]
Poly = dict[Mono, int]


@cache
def syt_count(shape: tuple[int, ...]) -> int:
    """Number of standard Young tableaux, by removing corners one at a time."""
    if not shape:
        return 1
    total = 0
    for i, row in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if row > below:
            smaller = tuple(
                x for j, x in enumerate(shape[:i] + (row - 1,) + shape[i + 1 :]) if x
            )
            total += syt_count(smaller)
    return total


def ssyt_contents(shape: tuple[int, ...], nvals: int):
    """Yield the content vector of every semistandard filling of the shape."""
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    filling: dict[tuple[int, int], int] = {}
    content = [0] * nvals

    def fill(idx: int):
        if idx == len(cells):
            yield tuple(content)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvals + 1):
            filling[(r, c)] = v
            content[v - 1] += 1
            yield from fill(idx + 1)
            content[v - 1] -= 1
            del filling[(r, c)]

    yield from fill(0)


@cache
def schur_poly(lam: tuple[int, ...], nvars: int) -> tuple[tuple[Mono, int], ...]:
    """Monomial expansion of the Schur polynomial in nvars variables."""
    out: Poly = {}
    for content in ssyt_contents(lam, nvars):
        out[content] = out.get(content, 0) + 1
    return tuple(sorted(out.items()))


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def schur_expand(poly: Poly, nvars: int) -> dict[tuple[int, ...], int]:
    """Greedy expansion of a symmetric polynomial in the Schur basis."""
    rem = {m: c for m, c in poly.items() if c}
    out: dict[tuple[int, ...], int] = {}
    while rem:
        mono = max(rem)
        assert all(mono[i] >= mono[i + 1] for i in range(len(mono) - 1)), mono
        lam = tuple(x for x in mono if x)
        coeff = rem[mono]
        for m, c in schur_poly(lam, nvars):
            val = rem.get(m, 0) - coeff * c
            if val:
                rem[m] = val
            else:
                rem.pop(m, None)
        out[lam] = out.get(lam, 0) + coeff
    return out


def brute_plethysm(outer: tuple[int, ...], inner: tuple[int, ...], nvars: int) -> dict:
    """Plethysm by monomial substitution, expanded back in the Schur basis.

    The monomials of s_inner (listed with multiplicity) become the ordered
    alphabet; s_outer evaluated over that alphabet is the plethysm.
    """
    alphabet: list[Mono] = []
    for m, c in schur_poly(inner, nvars):
        alphabet.extend([m] * c)
    result: Poly = {}
    zero = (0,) * nvars
    for content in ssyt_contents(outer, len(alphabet)):
        mono = zero
        for i, c in enumerate(content):
            if c:
                mono = tuple(x + c * y for x, y in zip(mono, alphabet[i]))
        result[mono] = result.get(mono, 0) + 1
    return schur_expand(result, nvars)
