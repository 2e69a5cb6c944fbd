"""Exact arithmetic in finitely generated Grassmann algebras over the rationals.

The algebra on ``n`` anticommuting generators ``t1..tn`` (so ``ti*tj == -tj*ti``
and ``ti*ti == 0``) is modelled sparsely: an element is a map from monomials to
nonzero rational coefficients, where a monomial is the strictly increasing
index set of its generators stored as a bitmask (bit ``i-1`` set means ``ti``
is present).

Sign convention, fixed bit-exactly for reproducibility:
merging two disjoint ascending monomials A and B costs one transposition per
inversion, i.e. per pair ``i in A, j in B`` with ``i > j``; the product sign is
``(-1) ** inversions``.  Overlapping monomials multiply to zero.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DimensionError, NotInvertibleError, ParityError

#: Monomials are bitmasks; 64 generators is far beyond desk scale already.
MAX_GENERATORS = 64


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    INDEFINITE = "indefinite"
    ZERO = "zero"


def monomial_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation of disjoint ascending monomials a, b.

    Counts inversions: each pair ``i in a, j in b`` with ``i > j`` contributes
    one transposition.  The caller guarantees ``a & b == 0``.
    """
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        swaps += (a >> low.bit_length()).bit_count()
        rest ^= low
    return -1 if swaps & 1 else 1


def mask_of_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        bit = 1 << (i - 1)
        if i < 1 or mask & bit:
            raise ValueError(f"monomial indices must be distinct and >= 1, got {indices!r}")
        mask |= bit
    return mask


def indices_of_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


class GrassmannElement:
    """An element of the Grassmann algebra on ``n`` generators, in canonical form.

    Immutable; all operations return new elements.  Canonical form stores no
    zero coefficients, so equality is structural.
    """

    __slots__ = ("n", "terms", "_key")

    def __init__(self, n: int, terms: Mapping[int, Fraction | int | str]):
        if not isinstance(n, int) or n < 0 or n > MAX_GENERATORS:
            raise DimensionError(f"generator count must be in 0..{MAX_GENERATORS}, got {n}")
        clean: dict[int, Fraction] = {}
        for mask, coeff in terms.items():
            c = Fraction(coeff)
            if not c:
                continue
            if mask < 0 or mask >> n:
                raise DimensionError(f"monomial {indices_of_mask(mask)} outside generators 1..{n}")
            clean[mask] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_key", (n, tuple(sorted(clean.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannElement is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "GrassmannElement":
        return cls(n, {})

    @classmethod
    def scalar(cls, n: int, value) -> "GrassmannElement":
        return cls(n, {0: Fraction(value)})

    @classmethod
    def one(cls, n: int) -> "GrassmannElement":
        return cls(n, {0: 1})

    @classmethod
    def theta(cls, n: int, i: int) -> "GrassmannElement":
        """The generator ``t_i``, 1-based."""
        if not 1 <= i <= n:
            raise DimensionError(f"generator index {i} outside 1..{n}")
        return cls(n, {1 << (i - 1): 1})

    @classmethod
    def monomial(cls, n: int, indices: Iterable[int], coeff=1) -> "GrassmannElement":
        return cls(n, {mask_of_indices(indices): Fraction(coeff)})

    # -- structure ----------------------------------------------------------

    def coefficient(self, indices: Iterable[int]) -> Fraction:
        return self.terms.get(mask_of_indices(indices), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GrassmannElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    # -- arithmetic sugar ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GrassmannElement):
            return gr_add(self, other)
        if isinstance(other, (int, Fraction)):
            return gr_add(self, GrassmannElement.scalar(self.n, other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return gr_scale(-1, self)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GrassmannElement.scalar(self.n, other)
        if isinstance(other, GrassmannElement):
            return gr_add(self, gr_scale(-1, other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return gr_add(GrassmannElement.scalar(self.n, other), gr_scale(-1, self))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return gr_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return gr_scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return gr_scale(other, self)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = GrassmannElement.one(self.n)
        for _ in range(exponent):
            result = gr_mul(result, self)
        return result

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<GrassmannElement n={self.n} {format_element(self)}>"


def _check_same_n(a: GrassmannElement, b: GrassmannElement):
    if a.n != b.n:
        raise DimensionError(f"mismatched generator counts: {a.n} vs {b.n}")


def gr_add(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    _check_same_n(a, b)
    terms = dict(a.terms)
    for mask, coeff in b.terms.items():
        acc = terms.get(mask, 0) + coeff
        if acc:
            terms[mask] = acc
        else:
            terms.pop(mask, None)
    return GrassmannElement(a.n, terms)


def gr_scale(r, a: GrassmannElement) -> GrassmannElement:
    r = Fraction(r)
    if not r:
        return GrassmannElement.zero(a.n)
    return GrassmannElement(a.n, {mask: r * coeff for mask, coeff in a.terms.items()})


def gr_mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    _check_same_n(a, b)
    terms: dict[int, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            coeff = ca * cb
            if monomial_sign(ma, mb) < 0:
                coeff = -coeff
            mask = ma | mb
            acc = terms.get(mask, 0) + coeff
            if acc:
                terms[mask] = acc
            else:
                terms.pop(mask, None)
    return GrassmannElement(a.n, terms)


def parity_of(a: GrassmannElement) -> Parity:
    if not a.terms:
        return Parity.ZERO
    degrees = {mask.bit_count() & 1 for mask in a.terms}
    if degrees == {0}:
        return Parity.EVEN
    if degrees == {1}:
        return Parity.ODD
    return Parity.INDEFINITE


def body(a: GrassmannElement) -> Fraction:
    """Coefficient of the empty monomial: the image under the morphism to the field."""
    return a.terms.get(0, Fraction(0))


def nil_part(a: GrassmannElement) -> GrassmannElement:
    return GrassmannElement(a.n, {m: c for m, c in a.terms.items() if m})


def even_part(a: GrassmannElement) -> GrassmannElement:
    return GrassmannElement(a.n, {m: c for m, c in a.terms.items() if not m.bit_count() & 1})


def odd_part(a: GrassmannElement) -> GrassmannElement:
    return GrassmannElement(a.n, {m: c for m, c in a.terms.items() if m.bit_count() & 1})


def gr_inv(a: GrassmannElement) -> GrassmannElement:
    """Inverse of an element with nonzero body.

    With ``b = body(a)`` and ``c = nil_part(a)`` the inverse is the finite sum
    ``(1/b) * sum_{k=0..n} (-1)^k (c/b)^k``; the series is exact because the
    nilpotent part to the ``n+1``-st power vanishes.
    """
    b = body(a)
    if not b:
        raise NotInvertibleError("not invertible: zero body")
    x = gr_scale(1 / b, nil_part(a))
    result = GrassmannElement.one(a.n)
    power = GrassmannElement.one(a.n)
    sign = 1
    for _ in range(a.n):
        power = gr_mul(power, x)
        if power.is_zero():
            break
        sign = -sign
        result = gr_add(result, gr_scale(sign, power))
    return gr_scale(1 / b, result)


# -- morphisms ---------------------------------------------------------------


class GrassmannMorphism:
    """A parity-preserving unital algebra morphism between Grassmann algebras.

    Determined by the images of the source generators, which must be odd (or
    zero) elements of the target algebra; this is validated at construction.
    """

    __slots__ = ("src_n", "dst_m", "images", "_key")

    def __init__(self, src_n: int, dst_m: int, images: Iterable[GrassmannElement]):
        images = tuple(images)
        if len(images) != src_n:
            raise DimensionError(f"expected {src_n} generator images, got {len(images)}")
        for i, img in enumerate(images, start=1):
            if img.n != dst_m:
                raise DimensionError(f"image of t{i} lives over {img.n} generators, expected {dst_m}")
            if parity_of(img) not in (Parity.ODD, Parity.ZERO):
                raise ParityError(f"image of t{i} is not odd: {img}")
        object.__setattr__(self, "src_n", src_n)
        object.__setattr__(self, "dst_m", dst_m)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_key", (src_n, dst_m, images))

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannMorphism is immutable")

    @classmethod
    def identity(cls, n: int) -> "GrassmannMorphism":
        return cls(n, n, [GrassmannElement.theta(n, i) for i in range(1, n + 1)])

    @classmethod
    def terminal(cls, n: int) -> "GrassmannMorphism":
        """The unique morphism onto the ground field: every generator maps to zero."""
        return cls(n, 0, [GrassmannElement.zero(0)] * n)

    @classmethod
    def inclusion(cls, n: int, m: int) -> "GrassmannMorphism":
        """The inclusion sending ``t_i`` to ``t_i``; requires ``n <= m``."""
        if n > m:
            raise DimensionError(f"cannot include {n} generators into {m}")
        return cls(n, m, [GrassmannElement.theta(m, i) for i in range(1, n + 1)])

    @classmethod
    def kill_generator(cls, n: int, l: int) -> "GrassmannMorphism":
        """The endomorphism sending ``t_l`` to zero and fixing the other generators."""
        images = [
            GrassmannElement.zero(n) if i == l else GrassmannElement.theta(n, i)
            for i in range(1, n + 1)
        ]
        return cls(n, n, images)

    def __eq__(self, other):
        return isinstance(other, GrassmannMorphism) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __call__(self, a: GrassmannElement) -> GrassmannElement:
        return morphism_apply(self, a)

    def __str__(self):
        if not self.src_n:
            return f"<unit inclusion into {self.dst_m} generators>"
        parts = [f"t{i} -> {img}" for i, img in enumerate(self.images, start=1)]
        return "; ".join(parts)

    def __repr__(self):
        return f"<GrassmannMorphism {self.src_n}->{self.dst_m}: {self}>"


def morphism_apply(phi: GrassmannMorphism, a: GrassmannElement) -> GrassmannElement:
    if a.n != phi.src_n:
        raise DimensionError(f"element over {a.n} generators, morphism expects {phi.src_n}")
    result = GrassmannElement.zero(phi.dst_m)
    for mask, coeff in a.terms.items():
        term = GrassmannElement.scalar(phi.dst_m, coeff)
        for i in indices_of_mask(mask):
            term = gr_mul(term, phi.images[i - 1])
            if term.is_zero():
                break
        result = gr_add(result, term)
    return result


def morphism_compose(psi: GrassmannMorphism, phi: GrassmannMorphism) -> GrassmannMorphism:
    """The composite ``psi after phi``."""
    if phi.dst_m != psi.src_n:
        raise DimensionError(f"cannot compose {psi.src_n}->{psi.dst_m} after {phi.src_n}->{phi.dst_m}")
    return GrassmannMorphism(phi.src_n, psi.dst_m, [morphism_apply(psi, img) for img in phi.images])


# -- canonical text form ------------------------------------------------------


def _format_coeff_monomial(coeff: Fraction, mask: int) -> str:
    if not mask:
        return str(coeff)
    gens = "*".join(f"t{i}" for i in indices_of_mask(mask))
    if coeff == 1:
        return gens
    if coeff == -1:
        return f"-{gens}"
    return f"{coeff}*{gens}"


def format_element(a: GrassmannElement) -> str:
    """Canonical text: terms in increasing bitmask order, unit coefficients omitted."""
    if not a.terms:
        return "0"
    parts = []
    for mask in sorted(a.terms):
        text = _format_coeff_monomial(a.terms[mask], mask)
        if not parts:
            parts.append(text)
        elif text.startswith("-"):
            parts.append(f" - {text[1:]}")
        else:
            parts.append(f" + {text}")
    return "".join(parts)
