"""Spectral profiles: finite annotated posets standing in for Spec(A).

Each node is a class of primes ``p`` carrying ``t.d.(A/p)``; each comparable
pair ``p1 <= p2`` carries the height sequence ``n -> ht((p2/p1)[n])`` computed
in ``(A/p1)[n]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .groebner import AlgebraPresentation, EmptySpectrum, NotPrime, ideal_dimension


class NotADomain(ValueError):
    """A domain-only predicate was applied to a profile with several minimal nodes."""


@dataclass(frozen=True)
class HeightSequence:
    """Nondecreasing, eventually constant ``n -> h(n)``.

    ``prefix`` holds ``h(0) .. h(m-1)``; ``h(n) = tail`` for ``n >= m``.
    """

    prefix: tuple[int, ...] = ()
    tail: int = 0

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(v) for v in self.prefix))
        values = self.prefix + (self.tail,)
        if any(v < 0 for v in values):
            raise ValueError(f"negative height in {values}")
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValueError(f"height sequence {values} is not nondecreasing")
        # canonical form: drop prefix entries equal to the tail
        prefix = self.prefix
        while prefix and prefix[-1] == self.tail:
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def constant(cls, value: int) -> "HeightSequence":
        return cls((), value)

    @classmethod
    def capped_linear(cls, start: int, cap: int) -> "HeightSequence":
        """``n -> min(start + n, cap)``."""
        return cls(tuple(range(start, cap)), cap)

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative polynomial extension")
        return self.prefix[n] if n < len(self.prefix) else self.tail

    @property
    def stable_from(self) -> int:
        return len(self.prefix)

    def is_constant(self) -> bool:
        return not self.prefix

    def __str__(self):
        if not self.prefix:
            return f"{self.tail}*"
        return ",".join(map(str, self.prefix)) + f",{self.tail}*"


ZERO = HeightSequence.constant(0)


@dataclass(frozen=True)
class SpectralProfile:
    """Finite model of Spec(A).

    Nodes are ``0 .. len(labels)-1``. ``order`` holds the pairs ``(i, j)``
    with ``i <= j``; reflexive pairs are added automatically and missing
    diagonal height sequences default to zero.
    """

    labels: tuple[str, ...]
    td_total: int
    td_quotient: tuple[int, ...]
    order: frozenset[tuple[int, int]]
    relheight: Mapping[tuple[int, int], HeightSequence]
    domain: bool = True
    kind: str = "custom"
    params: tuple[tuple[str, int], ...] = ()
    _below: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "td_quotient", tuple(self.td_quotient))
        order = set(self.order) | {(i, i) for i in range(n)}
        object.__setattr__(self, "order", frozenset(order))
        rel = dict(self.relheight)
        for i in range(n):
            rel.setdefault((i, i), ZERO)
        object.__setattr__(self, "relheight", rel)
        if len(self.td_quotient) != n:
            raise ValueError("td_quotient needs one entry per node")
        for i, j in order:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"order pair {(i, j)} references a missing node")

    @property
    def nodes(self) -> range:
        return range(len(self.labels))

    def le(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    def lt(self, i: int, j: int) -> bool:
        return i != j and (i, j) in self.order

    def below(self, j: int) -> list[int]:
        if j not in self._below:
            self._below[j] = [i for i in self.nodes if self.le(i, j)]
        return self._below[j]

    def minimal_nodes(self) -> list[int]:
        return [j for j in self.nodes if self.below(j) == [j]]

    def maximal_nodes(self) -> list[int]:
        return [i for i in self.nodes if not any(self.lt(i, j) for j in self.nodes)]

    @property
    def minimum(self) -> int:
        mins = self.minimal_nodes()
        if len(mins) != 1:
            raise NotADomain(f"profile has {len(mins)} minimal nodes")
        return mins[0]

    def rel(self, i: int, j: int) -> HeightSequence:
        try:
            return self.relheight[(i, j)]
        except KeyError:
            raise KeyError(f"no height sequence for {self.label(i)} <= {self.label(j)}") from None

    def height(self, j: int, n: int = 0) -> int:
        """``ht(p[n])``: the largest ``relheight(m, p)(n)`` over minimal ``m <= p``."""
        return max(self.rel(m, j)(n) for m in self.below(j) if self.below(m) == [m])

    @property
    def dim(self) -> int:
        return max((self.height(j) for j in self.nodes), default=0)

    @property
    def horizon(self) -> int:
        """Past this index every height sequence is constant."""
        return max((s.stable_from for s in self.relheight.values()), default=0)

    def label(self, i: int) -> str:
        return self.labels[i]

    def resolve(self, ref) -> int:
        """Node index from an int, a label, or one of ``"min"`` / ``"max"``."""
        if isinstance(ref, int):
            if ref not in self.nodes:
                raise IndexError(f"node({ref}) out of range for {self.describe()}")
            return ref
        if ref == "min":
            return self.minimum
        if ref == "max":
            tops = self.maximal_nodes()
            if len(tops) != 1:
                raise ValueError(f"{self.describe()} has {len(tops)} maximal nodes")
            return tops[0]
        if ref in self.labels:
            return self.labels.index(ref)
        raise KeyError(f"unknown node {ref!r}")

    def describe(self) -> str:
        if not self.params:
            return f"{self.kind}()"
        return f"{self.kind}({', '.join(f'{k}={v}' for k, v in self.params)})"


def make_profile(labels: Sequence[str], td_total: int, td_quotient: Sequence[int],
                 relheight: Mapping[tuple[int, int], HeightSequence],
                 domain: bool = True, kind: str = "custom",
                 params: Iterable[tuple[str, int]] = ()) -> SpectralProfile:
    """Profile whose order is read off the keys of ``relheight``."""
    return SpectralProfile(tuple(labels), td_total, tuple(td_quotient),
                           frozenset(relheight), dict(relheight), domain, kind, tuple(params))


# validation ---------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    rule: str
    nodes: tuple[str, ...]
    n: int | None
    message: str

    def __str__(self):
        where = f" at n={self.n}" if self.n is not None else ""
        return f"{self.rule}[{', '.join(self.nodes)}]{where}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def __str__(self):
        return "ok" if self.ok else "; ".join(map(str, self.violations))


def validate_profile(s: SpectralProfile) -> ValidationReport:
    """Check every structural invariant; report each violation with its witnesses."""
    out: list[Violation] = []
    L = s.label

    def bad(rule, nodes, n, msg):
        out.append(Violation(rule, tuple(L(i) for i in nodes), n, msg))

    for i, j in s.order:
        if i != j and s.le(j, i):
            bad("antisymmetry", (i, j), None, "two distinct nodes below each other")
    for i, j, k in product(s.nodes, repeat=3):
        if s.le(i, j) and s.le(j, k) and not s.le(i, k):
            bad("transitivity", (i, j, k), None, "order is not transitive")

    for pair in s.order:
        if pair not in s.relheight:
            bad("relheight", pair, None, "comparable pair without a height sequence")
    for pair in s.relheight:
        if pair not in s.order:
            bad("relheight", pair, None, "height sequence on an incomparable pair")

    if s.td_total < 0 or any(t < 0 for t in s.td_quotient):
        bad("td", (), None, "negative transcendence degree")

    mins = s.minimal_nodes()
    if s.domain:
        if len(mins) != 1:
            bad("domain", tuple(mins), None, f"domain profile with {len(mins)} minimal nodes")
        elif s.td_quotient[mins[0]] != s.td_total:
            bad("domain", (mins[0],), None,
                f"t.d.(A/0) = {s.td_quotient[mins[0]]} differs from t.d.(A) = {s.td_total}")
    elif mins and max(s.td_quotient[m] for m in mins) != s.td_total:
        bad("td", tuple(mins), None, "t.d.(A) is not the largest t.d. over minimal nodes")

    horizon = s.horizon
    for i in s.nodes:
        if (i, i) in s.relheight and s.relheight[(i, i)] != ZERO:
            bad("diagonal", (i,), None, "relheight(p, p) is not zero")
    for (i, j), seq in s.relheight.items():
        if (i, j) not in s.order or i == j:
            continue
        if s.td_quotient[i] < s.td_quotient[j]:
            bad("td-monotone", (i, j), None,
                f"t.d. rises along the order ({s.td_quotient[i]} < {s.td_quotient[j]})")
        if seq(0) + s.td_quotient[j] > s.td_quotient[i]:
            bad("nagata", (i, j), 0,
                f"{seq(0)} + {s.td_quotient[j]} > {s.td_quotient[i]}")
        if seq(0) < 1:
            bad("strict", (i, j), 0, "strictly larger node with height 0")

    for i, j, k in product(s.nodes, repeat=3):
        if not (s.le(i, j) and s.le(j, k)) or len({i, j, k}) < 3:
            continue
        try:
            a, b, c = s.rel(i, j), s.rel(j, k), s.rel(i, k)
        except KeyError:
            continue
        for n in range(horizon + 1):
            if a(n) + b(n) > c(n):
                bad("superadditivity", (i, j, k), n, f"{a(n)} + {b(n)} > {c(n)}")
                break
    return ValidationReport(tuple(out))


# predicates ----------------------------------------------------------------

def altitude_defect(s: SpectralProfile, n: int = 0) -> int | None:
    """First node where ``ht(p[n]) + t.d.(A/p) != t.d.(A)``, or None."""
    if not s.domain:
        raise NotADomain(f"{s.describe()} is not a domain profile")
    m = s.minimum
    for p in s.nodes:
        if s.rel(m, p)(n) + s.td_quotient[p] != s.td_total:
            return p
    return None


def is_afn(s: SpectralProfile, n: int) -> bool:
    """Whether ``A[n]`` satisfies the altitude formula."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return altitude_defect(s, n) is None


def is_af_domain(s: SpectralProfile) -> bool:
    return is_afn(s, 0)


def is_locally_jaffard(s: SpectralProfile) -> bool:
    return all(seq.is_constant() for seq in s.relheight.values())


def smallest_afn(s: SpectralProfile) -> int | None:
    """Least ``n`` with ``A[n]`` AF, or None if there is none."""
    for n in range(s.horizon + 1):
        if is_afn(s, n):
            return n
    return None


# builders ------------------------------------------------------------------

def field_profile(m: int) -> SpectralProfile:
    """An extension field of transcendence degree ``m``."""
    if m < 0:
        raise ValueError("field: m must be >= 0")
    return make_profile(["0"], m, [m], {(0, 0): ZERO}, kind="field", params=[("m", m)])


def fg_domain_profile(d: int) -> SpectralProfile:
    """Chain ``p0 < p1 < ... < pd`` of a finitely generated domain of dimension ``d``."""
    if d < 0:
        raise ValueError("fg_domain: d must be >= 0")
    rel = {(i, j): HeightSequence.constant(j - i)
           for i in range(d + 1) for j in range(i, d + 1)}
    labels = ["0"] + [f"c{i}" for i in range(1, d + 1)]
    return make_profile(labels, d, [d - i for i in range(d + 1)], rel,
                        kind="fg_domain", params=[("d", d)])


def example_2_8_profile() -> SpectralProfile:
    """``A = k + p`` with ``p = XA``: a rank-one DVR of t.d. 2 with residue field k."""
    rel = {(0, 0): ZERO, (1, 1): ZERO, (0, 1): HeightSequence.constant(1)}
    return make_profile(["0", "p"], 2, [2, 0], rel, kind="example_2_8")


def pullback_field_profile(r: int) -> SpectralProfile:
    """Pullback of a one-dimensional quasilocal AF-domain onto ``k`` inside a
    residue field of transcendence degree ``r``.

    ``ht(M[n])`` is known to be 1 at ``n = 0`` and ``r + 1`` from ``n = r`` on;
    the values in between are filled in by ``min(1 + n, 1 + r)``.
    """
    if r < 1:
        raise ValueError("pullback_field: r must be >= 1")
    rel = {(0, 0): ZERO, (1, 1): ZERO, (0, 1): HeightSequence.capped_linear(1, r + 1)}
    return make_profile(["0", "M"], r + 1, [r + 1, 0], rel,
                        kind="pullback_field", params=[("r", r)])


BUILDERS = {
    "field": (field_profile, ("m",)),
    "fg_domain": (fg_domain_profile, ("d",)),
    "example_2_8": (example_2_8_profile, ()),
    "pullback_field": (pullback_field_profile, ("r",)),
}


def build_profile(kind: str, **params: int) -> SpectralProfile:
    try:
        builder, names = BUILDERS[kind]
    except KeyError:
        raise ValueError(f"unknown profile kind {kind!r}") from None
    if set(params) != set(names):
        want = ", ".join(names) or "no parameters"
        raise ValueError(f"{kind} takes {want}, got {', '.join(params) or 'none'}")
    return builder(**params)


def profile_from_presentation(a: AlgebraPresentation) -> SpectralProfile:
    """Chain profile of a presented domain; its dimension comes from the oracle."""
    if not a.prime:
        raise NotPrime(f"{a.format()} is not asserted prime")
    d = ideal_dimension(a)
    return fg_domain_profile(d)


__all__ = [
    "EmptySpectrum", "HeightSequence", "NotADomain", "SpectralProfile", "ValidationReport",
    "Violation", "altitude_defect", "build_profile", "example_2_8_profile", "fg_domain_profile",
    "field_profile", "is_af_domain", "is_afn", "is_locally_jaffard", "make_profile",
    "profile_from_presentation", "pullback_field_profile", "smallest_afn", "validate_profile",
]
