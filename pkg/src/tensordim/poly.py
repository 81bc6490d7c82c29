"""Exact multivariate polynomials over the rationals.

Monomials are plain tuples of nonnegative exponents. A polynomial is an
immutable map from monomial to nonzero :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Monomial = tuple[int, ...]

LEX = "lex"
GREVLEX = "grevlex"


class DimensionMismatch(ValueError):
    """Operands live in rings with different numbers of variables."""


class NoLeadingTerm(ValueError):
    """The zero polynomial has no leading term."""


def _check_arity(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"monomials of length {len(a)} and {len(b)}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Return ``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order.

    ``precedence`` lists variable positions from most to least significant;
    ``None`` means the natural order x0 > x1 > ... .
    """

    kind: str = GREVLEX
    precedence: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (LEX, GREVLEX):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.precedence is not None:
            object.__setattr__(self, "precedence", tuple(self.precedence))
            if sorted(self.precedence) != list(range(len(self.precedence))):
                raise ValueError("precedence must be a permutation of variable positions")

    def _permute(self, m: Monomial) -> Monomial:
        if self.precedence is None:
            return m
        if len(self.precedence) != len(m):
            raise DimensionMismatch(
                f"order over {len(self.precedence)} variables, monomial has {len(m)}")
        return tuple(m[i] for i in self.precedence)

    def key(self, m: Monomial) -> tuple:
        """Sort key: ``key(a) < key(b)`` iff ``a < b`` in this order."""
        e = self._permute(m)
        if self.kind == LEX:
            return e
        return (sum(e), tuple(-x for x in reversed(e)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        _check_arity(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        if self.precedence is None:
            return self.kind
        return f"{self.kind}{list(self.precedence)}"


DEFAULT_ORDER = MonomialOrder(GREVLEX)


def compare_monomials(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return order.compare(a, b)


def _as_fraction(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Immutable polynomial in ``nvars`` variables with rational coefficients.

    Terms are stored sorted by exponent tuple so two equal polynomials have
    identical internal state.
    """

    nvars: int
    terms: tuple[tuple[Monomial, Fraction], ...] = ()
    _map: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms:
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.nvars:
                raise DimensionMismatch(
                    f"monomial {mono} in a ring of {self.nvars} variables")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, Fraction(0)) + _as_fraction(coeff)
        acc = {m: c for m, c in acc.items() if c != 0}
        object.__setattr__(self, "terms", tuple(sorted(acc.items())))
        object.__setattr__(self, "_map", acc)

    @classmethod
    def from_dict(cls, nvars: int, terms: Mapping[Monomial, object]) -> "Polynomial":
        return cls(nvars, tuple(terms.items()))

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, (((0,) * nvars, c),))

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, ((mono, 1),))

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> "Polynomial":
        return cls(len(mono), ((tuple(mono), c),))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.terms))

    def coeff(self, mono: Monomial) -> Fraction:
        return self._map.get(tuple(mono), Fraction(0))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m, _ in self.terms)

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"polynomials in {self.nvars} and {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        acc = dict(self._map)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return Polynomial.from_dict(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _as_fraction(other)
            return Polynomial(self.nvars, tuple((m, c * a) for m, a in self.terms))
        self._check(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial.from_dict(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        c = _as_fraction(c)
        return Polynomial(self.nvars, tuple((mono_mul(m, mono), c * a) for m, a in self.terms))

    def leading_term(self, order: MonomialOrder = DEFAULT_ORDER) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise NoLeadingTerm("zero polynomial")
        m = max(self._map, key=order.key)
        return m, self._map[m]

    def leading_monomial(self, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.leading_term(order)[1])

    def format(self, names: Iterable[str] | None = None,
               order: MonomialOrder = DEFAULT_ORDER) -> str:
        """Render with terms in descending ``order``, e.g. ``x^2 - 2*y + 1/3``."""
        names = list(names) if names is not None else [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        out = []
        for m in sorted(self._map, key=order.key, reverse=True):
            c = self._map[m]
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.format()!r})"


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "multiply":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def leading_term(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> tuple[Monomial, Fraction]:
    return f.leading_term(order)


def s_polynomial(f: Polynomial, g: Polynomial,
                 order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L`` the lcm of the leading monomials."""
    f._check(g)
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), 1 / cf) - g.mul_term(mono_div(lcm, mg), 1 / cg)
