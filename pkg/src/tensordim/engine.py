"""Dimension and height formulas for tensor products over spectral profiles.

Every maximum is taken by exhaustive enumeration over node tuples. Ties go
to the lexicographically smallest tuple of node indices, so witnesses are
stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .profile import (NotADomain, SpectralProfile, altitude_defect, is_afn, smallest_afn,
                      validate_profile)


class PreconditionError(ValueError):
    """A formula was asked of inputs outside its hypotheses."""


@dataclass(frozen=True)
class FormulaTrace:
    """A formula value with the node tuple attaining it and its summands."""

    value: int
    witness: tuple[tuple[str, str], ...] = ()
    terms: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.terms and sum(v for _, v in self.terms) != self.value:
            raise ValueError("trace terms do not add up to the value")

    def witness_str(self) -> str:
        return ",".join(f"{role}={node}" for role, node in self.witness)

    def terms_str(self) -> str:
        return " + ".join(f"{name}={v}" for name, v in self.terms)


def _best(candidates):
    """Max of ``(value, key, trace)`` triples; the smallest key wins ties."""
    best = None
    for value, key, make in candidates:
        if best is None or value > best[0] or (value == best[0] and key < best[1]):
            best = (value, key, make)
    return best[2]()


def _require_valid(*profiles: SpectralProfile) -> None:
    for s in profiles:
        report = validate_profile(s)
        if not report.ok:
            raise PreconditionError(f"invalid profile {s.describe()}: {report}")


def _require_domain(s: SpectralProfile, role: str) -> None:
    if not s.domain:
        raise PreconditionError(f"{role} = {s.describe()} must be a domain profile")


def _require_afn(s: SpectralProfile, n: int, role: str = "A") -> None:
    _require_domain(s, role)
    bad = altitude_defect(s, n)
    if bad is not None:
        what = "AF-domain" if n == 0 else f"{role}[{n}] AF-domain"
        raise PreconditionError(
            f"{role} = {s.describe()} is not an {what}: at prime {s.label(bad)}, "
            f"ht = {s.rel(s.minimum, bad)(n)}, t.d.(quotient) = {s.td_quotient[bad]}, "
            f"t.d. = {s.td_total}")


def dim_tensor_fields(m: int, n: int) -> int:
    """Krull dimension of ``K (x) L`` for fields of transcendence degrees m, n."""
    if m < 0 or n < 0:
        raise ValueError("transcendence degrees are nonnegative")
    return min(m, n)


def wadsworth_D(s: int, d: int, B: SpectralProfile) -> FormulaTrace:
    """``max_q ht(q[s]) + min(s, d + t.d.(B/q))``."""
    if s < 0 or d < 0:
        raise ValueError("s and d are nonnegative")
    if d > s:
        raise PreconditionError(f"dimension {d} exceeds transcendence degree {s}")
    _require_valid(B)

    def cand(q):
        h = B.height(q, s)
        m = min(s, d + B.td_quotient[q])
        return (h + m, (q,), lambda: FormulaTrace(
            h + m, (("q", B.label(q)),), ((f"ht(q[{s}])", h), ("min", m))))

    return _best(cand(q) for q in B.nodes)


def dim_tensor_af_af(dimA: int, tdA: int, dimB: int, tdB: int) -> int:
    """``min(dim A + t.d. B, t.d. A + dim B)`` for two AF-domains."""
    if dimA > tdA or dimB > tdB:
        raise PreconditionError("dimension exceeds transcendence degree")
    if min(dimA, tdA, dimB, tdB) < 0:
        raise ValueError("negative invariant")
    return min(dimA + tdB, tdA + dimB)


def dim_tensor_af_any(A: SpectralProfile, B: SpectralProfile) -> FormulaTrace:
    """Dimension of ``A (x) B`` for an AF-domain A and arbitrary B."""
    _require_valid(A)
    _require_afn(A, 0)
    return wadsworth_D(A.td_total, A.dim, B)


def gaf_route(A: SpectralProfile) -> str | None:
    """Name the result certifying that A satisfies GSCT against every B.

    Returns None when no route applies.
    """
    if not A.domain:
        return None
    if is_afn(A, 0):
        return "AF-domain"
    if is_afn(A, 1):
        return "A[X] AF-domain"
    if A.dim == 1 and smallest_afn(A) is not None:
        return "one-dimensional, A[n] AF"
    # k + p shape: every nonzero prime has algebraic residue field and
    # heights do not grow under polynomial extension
    m = A.minimum
    if all(A.td_quotient[p] == 0 for p in A.nodes if p != m) and \
            all(seq.is_constant() for seq in A.relheight.values()):
        return "residually algebraic, locally Jaffard"
    return None


def _require_gaf(A: SpectralProfile) -> None:
    _require_domain(A, "A")
    if gaf_route(A) is None:
        bad = altitude_defect(A, 1)
        raise PreconditionError(
            f"A = {A.describe()} has no GAF certificate: A[1] fails the altitude formula "
            f"at prime {A.label(bad)}")


def _mixed_terms(A, B, p1, p, q1, q):
    tdA = A.td_total
    return (
        (f"ht(q1[{tdA}])", B.height(q1, tdA)),
        (f"ht(p1[{B.td_quotient[q1]}])", A.height(p1, B.td_quotient[q1])),
        (f"ht(q/q1[{A.td_quotient[p1]}])", B.rel(q1, q)(A.td_quotient[p1])),
        (f"ht(p/p1[{B.td_quotient[q]}])", A.rel(p1, p)(B.td_quotient[q])),
    )


def _witness(A, B, q1, q, p1, p):
    return (("q1", B.label(q1)), ("q", B.label(q)), ("p1", A.label(p1)), ("p", A.label(p)))


def _mixed_max(A, B, p, q, extra=()):
    def cand(q1, p1):
        terms = _mixed_terms(A, B, p1, p, q1, q) + tuple(extra)
        v = sum(t for _, t in terms)
        return (v, (q1, q, p1, p),
                lambda: FormulaTrace(v, _witness(A, B, q1, q, p1, p), terms))

    return _best(cand(q1, p1) for q1 in B.below(q) for p1 in A.below(p))


def ht_mixed_ideal(A: SpectralProfile, B: SpectralProfile, p, q) -> FormulaTrace:
    """Height of ``p (x) B + A (x) q`` as the max over ``p1 <= p``, ``q1 <= q``
    of the four polynomial-extension heights."""
    _require_valid(A, B)
    _require_gaf(A)
    return _mixed_max(A, B, A.resolve(p), B.resolve(q))


@dataclass(frozen=True)
class TensorPrimeDescriptor:
    """A prime P of ``A (x) B`` by its contractions and ``ht(P / mixed ideal)``."""

    p: object
    q: object
    delta: int = 0


def _check_delta(A, B, p, q, delta):
    bound = min(A.td_quotient[p], B.td_quotient[q])
    if not 0 <= delta <= bound:
        raise PreconditionError(
            f"residual height {delta} outside 0..{bound} for ({A.label(p)}, {B.label(q)})")


def gsct_height(A: SpectralProfile, B: SpectralProfile,
                desc: TensorPrimeDescriptor) -> FormulaTrace:
    """``ht(P) = ht(p (x) B + A (x) q) + ht(P / (p (x) B + A (x) q))``."""
    _require_valid(A, B)
    _require_gaf(A)
    p, q = A.resolve(desc.p), B.resolve(desc.q)
    _check_delta(A, B, p, q, desc.delta)
    return _mixed_max(A, B, p, q, extra=(("delta", desc.delta),))


def sct_height(A: SpectralProfile, B: SpectralProfile, q, delta_over_Aq: int) -> int:
    """``ht(P) = ht(q[t.d.(A)]) + ht(P / (A (x) q))`` for an AF-domain A."""
    _require_valid(A, B)
    _require_afn(A, 0)
    q = B.resolve(q)
    # P/(A (x) q) survives in A (x) k(B/q), of dimension min(t.d. A, dim A + t.d.(B/q))
    bound = min(A.td_total, A.dim + B.td_quotient[q])
    if not 0 <= delta_over_Aq <= bound:
        raise PreconditionError(
            f"residual height {delta_over_Aq} outside 0..{bound} over {B.label(q)}")
    return B.height(q, A.td_total) + delta_over_Aq


def ht_min_over_extension(B: SpectralProfile, A: SpectralProfile, p) -> int:
    """Height of every minimal prime of ``p (x) B``, i.e. ``ht(p[t.d.(B)])``."""
    if not B.domain:
        raise PreconditionError(f"B = {B.describe()} must be a domain profile")
    _require_valid(A, B)
    return A.height(A.resolve(p), B.td_total)


def dim_tensor_thm27(A: SpectralProfile, B: SpectralProfile) -> FormulaTrace:
    """Dimension of ``A (x) B`` when ``A[X]`` is an AF-domain and B is arbitrary."""
    _require_valid(A, B)
    _require_afn(A, 1)

    def cand(q1, q, p1, p):
        m = min(A.td_quotient[p], B.td_quotient[q])
        terms = _mixed_terms(A, B, p1, p, q1, q) + (("min(td(A/p),td(B/q))", m),)
        v = sum(t for _, t in terms)
        return (v, (q1, q, p1, p),
                lambda: FormulaTrace(v, _witness(A, B, q1, q, p1, p), terms))

    return _best(cand(q1, q, p1, p)
                 for q in B.nodes for q1 in B.below(q)
                 for p in A.nodes for p1 in A.below(p))


def onedim_ht(A: SpectralProfile, B: SpectralProfile, p, q, delta: int) -> FormulaTrace:
    """Height of a prime over ``(p, q)`` for a one-dimensional A with some A[n] AF."""
    _require_valid(A, B)
    _require_domain(A, "A")
    if A.dim != 1:
        raise PreconditionError(f"A = {A.describe()} has dimension {A.dim}, not 1")
    limit = A.td_total + B.td_total
    if not any(is_afn(A, n) for n in range(1, limit + 1)):
        raise PreconditionError(
            f"A[n] is not an AF-domain for any 1 <= n <= {limit}")
    p, q = A.resolve(p), B.resolve(q)
    _check_delta(A, B, p, q, delta)
    tdA, tdAp = A.td_total, A.td_quotient[p]

    def cand(q1):
        terms = (
            (f"ht(q1[{tdA}])", B.height(q1, tdA)),
            (f"ht(q/q1[{tdAp}])", B.rel(q1, q)(tdAp)),
            (f"ht(p[{B.td_quotient[q1]}])", A.height(p, B.td_quotient[q1])),
            ("delta", delta),
        )
        v = sum(t for _, t in terms)
        return (v, (q1,), lambda: FormulaTrace(
            v, (("q1", B.label(q1)), ("q", B.label(q)), ("p", A.label(p))), terms))

    return _best(cand(q1) for q1 in B.below(q))


__all__ = [
    "FormulaTrace", "NotADomain", "PreconditionError", "TensorPrimeDescriptor",
    "dim_tensor_af_af", "dim_tensor_af_any", "dim_tensor_fields", "dim_tensor_thm27",
    "gaf_route", "gsct_height", "ht_min_over_extension", "ht_mixed_ideal", "onedim_ht",
    "sct_height", "wadsworth_D",
]
