"""Shared independent oracles for the test suite.

Everything here recomputes results along a different code path than the
library: signs by explicit sorting instead of bitmask popcounts, map
evaluation by plain substitution instead of the Taylor engine.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from superpoints import (
    GrassmannElement,
    LambdaPoint,
    Skeleton,
    SuperSpace,
    reversal_sign,
)
from superpoints.grassmann import indices_of_mask
from superpoints.poly import PolyCoeff


def sign_by_sorting(left: tuple[int, ...], right: tuple[int, ...]):
    """Reference sign for merging two ascending index tuples, by bubble sort.

    Returns (sorted tuple, sign) or None when an index repeats.
    """
    word = list(left) + list(right)
    if len(set(word)) != len(word):
        return None
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
    return tuple(word), sign


def mul_reference(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    """Grassmann product recomputed with the sorting oracle."""
    assert a.n == b.n
    terms: dict[int, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            merged = sign_by_sorting(indices_of_mask(ma), indices_of_mask(mb))
            if merged is None:
                continue
            word, sign = merged
            mask = 0
            for i in word:
                mask |= 1 << (i - 1)
            terms[mask] = terms.get(mask, Fraction(0)) + sign * ca * cb
    return GrassmannElement(a.n, terms)


class PolynomialSupermap:
    """A map given per output coordinate as polynomials times odd monomials.

    ``terms[(odd_mask, c)]`` is the polynomial coefficient of ``t_odd_mask``
    in output coordinate ``c``; the odd mask parity must match the slot parity
    of ``c``.  Evaluation is plain substitution of the point's coordinates --
    no derivatives or factorials anywhere -- so it serves as an independent
    oracle for the skeleton evaluation of the same data.
    """

    def __init__(self, domain: SuperSpace, codomain: SuperSpace, terms):
        self.domain = domain
        self.codomain = codomain
        self.terms = {}
        for (mask, c), poly in terms.items():
            if poly.is_zero():
                continue
            assert codomain.parity(c) == mask.bit_count() % 2
            assert poly.nvars == domain.p
            self.terms[(mask, c)] = poly

    def skeleton(self) -> Skeleton:
        forms: list[dict] = [dict() for _ in range(self.domain.q + 1)]
        for (mask, c), poly in self.terms.items():
            odd_idx = indices_of_mask(mask)
            k = len(odd_idx)
            forms[k][(odd_idx, c)] = reversal_sign(k) * poly
        return Skeleton(self.domain, self.codomain, forms)

    def substitute(self, x: LambdaPoint) -> LambdaPoint:
        assert x.space == self.domain
        n = x.n
        one = GrassmannElement.one(n)
        evens = x.coords[: self.domain.p]
        out = [GrassmannElement.zero(n) for _ in range(self.codomain.dim)]
        for (mask, c), poly in self.terms.items():
            value = poly.eval(evens, one=one)
            for i in indices_of_mask(mask):
                value = value * x.coords[self.domain.p + i - 1]
                if value.is_zero():
                    break
            out[c - 1] = out[c - 1] + value
        return LambdaPoint(self.codomain, n, out)


def random_polynomial_supermap(rng, domain: SuperSpace, codomain: SuperSpace,
                               max_degree: int = 2, density: float = 0.6) -> PolynomialSupermap:
    terms = {}
    for mask in range(1 << domain.q):
        parity = mask.bit_count() % 2
        for c in codomain.indices():
            if codomain.parity(c) != parity or rng.random() > density:
                continue
            poly_terms = {}
            for exps in itertools.product(range(max_degree + 1), repeat=domain.p):
                if sum(exps) <= max_degree and rng.random() < 0.5:
                    poly_terms[exps] = Fraction(rng.randint(-3, 3))
            poly = PolyCoeff(domain.p, poly_terms)
            if not poly.is_zero():
                terms[(mask, c)] = poly
    return PolynomialSupermap(domain, codomain, terms)
