"""Buchberger's algorithm and dimension/height of presented algebras over QQ.

This is the brute-force side of the toolkit: it knows nothing about
transcendence-degree formulas and only sees ideals in polynomial rings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .poly import (DEFAULT_ORDER, MonomialOrder, Polynomial, mono_coprime, mono_div,
                   mono_divides, mono_lcm, s_polynomial)


class EmptySpectrum(ValueError):
    """The ideal is the whole ring, so the quotient has no primes."""


class NotPrime(ValueError):
    """A height was requested for an ideal not asserted to be prime."""


def normal_form(f: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``basis``."""
    for g in basis:
        f._check(g)
    leads = [(g.leading_term(order), g) for g in basis]
    remainder: dict = {}
    p = f
    while p:
        m, c = p.leading_term(order)
        for (lm, lc), g in leads:
            if mono_divides(lm, m):
                p = p - g.mul_term(mono_div(m, lm), c / lc)
                break
        else:
            remainder[m] = c
            p = p - Polynomial.monomial(m, c)
    return Polynomial.from_dict(f.nvars, remainder)


def _minimalize(G: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    G = sorted(G, key=lambda g: order.key(g.leading_monomial(order)))
    out: list[Polynomial] = []
    for g in G:
        lm = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), lm) for h in out):
            out.append(g)
    return out


def _interreduce(G: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    reduced = []
    for i, g in enumerate(G):
        r = normal_form(g, G[:i] + G[i + 1:], order)
        reduced.append(r.monic(order))
    return sorted(reduced, key=lambda g: order.key(g.leading_monomial(order)), reverse=True)


def buchberger(gens: Iterable[Polynomial],
               order: MonomialOrder = DEFAULT_ORDER) -> list[Polynomial]:
    """Reduced Groebner basis, sorted by descending leading monomial.

    Pairs are taken smallest lcm first; pairs with coprime leading monomials
    and pairs caught by the chain criterion are skipped.
    """
    G: list[Polynomial] = []
    for g in gens:
        if g:
            G.append(g.monic(order))
    if not G:
        return []
    if any(g.is_constant() for g in G):
        return [Polynomial.constant(G[0].nvars, 1)]

    lm = [g.leading_monomial(order) for g in G]
    pairs = set(combinations(range(len(G)), 2))

    def pair(i, j):
        return (i, j) if i < j else (j, i)

    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(mono_lcm(lm[p[0]], lm[p[1]])), p))
        pairs.discard((i, j))
        lcm = mono_lcm(lm[i], lm[j])
        if mono_coprime(lm[i], lm[j]):
            continue
        if any(k != i and k != j and mono_divides(lm[k], lcm)
               and pair(i, k) not in pairs and pair(j, k) not in pairs
               for k in range(len(G))):
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r:
            if r.is_constant():
                return [Polynomial.constant(r.nvars, 1)]
            G.append(r.monic(order))
            lm.append(r.leading_monomial(order))
            n = len(G) - 1
            pairs.update((k, n) for k in range(n))
    return _interreduce(_minimalize(G, order), order)


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER) -> bool:
    """Buchberger's criterion without any shortcuts."""
    return all(not normal_form(s_polynomial(f, g, order), G, order)
               for f, g in combinations(G, 2))


def is_reduced(G: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER) -> bool:
    for i, g in enumerate(G):
        if g.leading_term(order)[1] != 1:
            return False
        others = [h.leading_monomial(order) for j, h in enumerate(G) if j != i]
        if any(mono_divides(l, m) for m in g.monomials() for l in others):
            return False
    return True


@dataclass(frozen=True)
class AlgebraPresentation:
    """``QQ[variables] / (generators)``; ``prime`` is the caller's assertion."""

    variables: tuple[str, ...]
    generators: tuple[Polynomial, ...] = ()
    prime: bool = False
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if not self.variables:
            raise ValueError("a presentation needs at least one variable")
        for g in self.generators:
            if g.nvars != len(self.variables):
                raise ValueError(
                    f"generator in {g.nvars} variables for a ring in {len(self.variables)}")
        # the polynomial ring itself is a domain
        if not any(self.generators):
            object.__setattr__(self, "prime", True)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def groebner(self, order: MonomialOrder = DEFAULT_ORDER) -> list[Polynomial]:
        if order not in self._cache:
            self._cache[order] = buchberger(self.generators, order)
        return self._cache[order]

    def with_generators(self, extra: Iterable[Polynomial], prime: bool = False) -> "AlgebraPresentation":
        return AlgebraPresentation(self.variables, self.generators + tuple(extra), prime)

    def format(self) -> str:
        ring = f"QQ[{', '.join(self.variables)}]"
        if not any(self.generators):
            return ring
        gens = ", ".join(g.format(self.variables) for g in self.generators)
        return f"{ring}/({gens})"


def polynomial_ring(*names: str) -> AlgebraPresentation:
    return AlgebraPresentation(tuple(names))


def max_independent_set(leads: Sequence[tuple[int, ...]], nvars: int) -> tuple[int, ...]:
    """Largest variable subset S such that no monomial in ``leads`` uses only S.

    Ties go to the lexicographically first subset.
    """
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return S
    raise EmptySpectrum("leading term ideal contains a constant")


def ideal_dimension(a: AlgebraPresentation, order: MonomialOrder = DEFAULT_ORDER) -> int:
    """Krull dimension of the quotient ring via the leading-term ideal."""
    G = a.groebner(order)
    if any(g.is_constant() for g in G):
        raise EmptySpectrum(f"{a.format()} is the zero ring")
    return len(max_independent_set([g.leading_monomial(order) for g in G], a.nvars))


def prime_height(a: AlgebraPresentation, order: MonomialOrder = DEFAULT_ORDER) -> int:
    """``n - dim``, valid since polynomial rings over a field are catenary domains."""
    if not a.prime:
        raise NotPrime(f"{a.format()} is not asserted prime")
    return a.nvars - ideal_dimension(a, order)


def relative_height(a: AlgebraPresentation, larger: Iterable[Polynomial],
                    order: MonomialOrder = DEFAULT_ORDER) -> int:
    """Height of ``J/I`` in the domain ``a``, where ``J = I + (larger)`` is prime."""
    if not a.prime:
        raise NotPrime(f"{a.format()} is not asserted prime")
    return ideal_dimension(a, order) - ideal_dimension(a.with_generators(larger), order)


def _rename(names: Sequence[str], taken: set[str], suffix: str = "_r") -> list[str]:
    out = []
    for n in names:
        new = n
        while new in taken:
            new += suffix
        taken.add(new)
        out.append(new)
    return out


def _embed(f: Polynomial, total: int, offset: int) -> Polynomial:
    pad_left, pad_right = (0,) * offset, (0,) * (total - offset - f.nvars)
    return Polynomial(total, tuple((pad_left + m + pad_right, c) for m, c in f.terms))


def tensor_presentation(a: AlgebraPresentation, b: AlgebraPresentation) -> AlgebraPresentation:
    """Presentation of ``a (x) b`` over QQ on the disjoint union of variables.

    Right-hand names that collide get ``_r`` appended until unique.
    """
    right = _rename(b.variables, set(a.variables))
    total = a.nvars + b.nvars
    gens = [_embed(g, total, 0) for g in a.generators]
    gens += [_embed(g, total, a.nvars) for g in b.generators]
    # domains over QQ can have a non-domain tensor product, so primality is not inherited
    return AlgebraPresentation(a.variables + tuple(right), tuple(gens))
