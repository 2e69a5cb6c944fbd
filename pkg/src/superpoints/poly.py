"""Sparse multivariate polynomials with exact rational coefficients.

Used as the coefficient maps of skeletons: variables ``x1..xp`` range over the
even directions of a domain.  Exponent tuples are the monomial keys; exact
partial derivatives of any order are available, which is what makes the
terminating Taylor expansion of skeleton evaluation exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class PolyCoeff:
    __slots__ = ("nvars", "terms", "_key")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction | int | str]):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            c = Fraction(coeff)
            if not c:
                continue
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for {nvars} variables")
            clean[exps] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_key", (nvars, tuple(sorted(clean.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("PolyCoeff is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "PolyCoeff":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, value) -> "PolyCoeff":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "PolyCoeff":
        """The variable ``x_i``, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} outside 1..{nvars}")
        exps = tuple(int(j == i) for j in range(1, nvars + 1))
        return cls(nvars, {exps: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, PolyCoeff) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyCoeff.const(self.nvars, other)
        if not isinstance(other, PolyCoeff):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("mismatched variable counts")
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, 0) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        return PolyCoeff(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return PolyCoeff(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyCoeff.const(self.nvars, other)
        if not isinstance(other, PolyCoeff):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return PolyCoeff(self.nvars, {e: r * c for e, c in self.terms.items()})
        if not isinstance(other, PolyCoeff):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("mismatched variable counts")
        terms: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                acc = terms.get(key, 0) + ca * cb
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        return PolyCoeff(self.nvars, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = PolyCoeff.const(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def diff(self, var: int) -> "PolyCoeff":
        """Exact partial derivative with respect to ``x_var`` (1-based)."""
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[var - 1]
            if not e:
                continue
            key = exps[: var - 1] + (e - 1,) + exps[var:]
            acc = terms.get(key, 0) + e * coeff
            if acc:
                terms[key] = acc
        return PolyCoeff(self.nvars, terms)

    def diff_multi(self, orders: Sequence[int]) -> "PolyCoeff":
        out = self
        for var, k in enumerate(orders, start=1):
            for _ in range(k):
                out = out.diff(var)
                if out.is_zero():
                    return out
        return out

    def eval(self, values: Sequence, one=Fraction(1)):
        """Evaluate at a value tuple; works for any commutative ring via duck typing.

        ``one`` must be the multiplicative unit of the target ring so that
        constant terms embed correctly (e.g. a Grassmann unit when evaluating
        at even Grassmann elements).
        """
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        total = None
        for exps, coeff in self.terms.items():
            term = one
            for v, e in zip(values, exps):
                for _ in range(e):
                    term = term * v
            term = term * coeff
            total = term if total is None else total + term
        if total is None:
            return one * Fraction(0)
        return total

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"<PolyCoeff {format_poly(self)}>"


def format_poly(p: PolyCoeff) -> str:
    """Canonical text: terms sorted by exponent tuple, variables ascending."""
    if not p.terms:
        return "0"
    parts = []
    for exps in sorted(p.terms):
        coeff = p.terms[exps]
        factors = []
        for i, e in enumerate(exps, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        if not factors:
            text = str(coeff)
        else:
            gens = "*".join(factors)
            if coeff == 1:
                text = gens
            elif coeff == -1:
                text = f"-{gens}"
            else:
                text = f"{coeff}*{gens}"
        if not parts:
            parts.append(text)
        elif text.startswith("-"):
            parts.append(f" - {text[1:]}")
        else:
            parts.append(f" + {text}")
    return "".join(parts)
