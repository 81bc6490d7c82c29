from fractions import Fraction
from itertools import combinations

import pytest
import sympy as sp
from hypothesis import strategies as st

from tensordim.poly import Polynomial

_LINES = []


@pytest.fixture
def criterion_log():
    """Collects one pass/fail line per acceptance criterion for the summary."""
    return _LINES


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)


# independent oracles built on sympy ------------------------------------------

def to_sympy(f: Polynomial, syms):
    return sum((sp.Rational(c.numerator, c.denominator)
                * sp.Mul(*[s ** e for s, e in zip(syms, m)]) for m, c in f.terms),
               sp.Integer(0))


def from_sympy(expr, syms) -> Polynomial:
    p = sp.Poly(expr, *syms, domain="QQ")
    return Polynomial(len(syms), tuple((m, _frac(c)) for m, c in p.terms()))


def _frac(c):
    c = sp.Rational(c)
    return Fraction(int(c.p), int(c.q))


def sympy_reduced_basis(gens, nvars, order="grevlex"):
    syms = sp.symbols(f"v0:{nvars}")
    exprs = [to_sympy(g, syms) for g in gens if g]
    if not exprs:
        return []
    G = sp.groebner(exprs, *syms, order=order, domain="QQ")
    out = []
    for g in G.polys:
        out.append(from_sympy(g.as_expr() / g.LC(order=order), syms))
    return out


def elimination_dimension(gens, nvars):
    """Largest |S| with I meeting QQ[S] only in 0, via lex elimination in sympy."""
    syms = sp.symbols(f"v0:{nvars}")
    exprs = [to_sympy(g, syms) for g in gens if g]
    if not exprs:
        return nvars
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            rest = [syms[i] for i in range(nvars) if i not in S]
            keep = [syms[i] for i in S]
            G = sp.groebner(exprs, *(rest + keep), order="lex", domain="QQ")
            if any(g.free_symbols <= set(keep) for g in G.exprs):
                continue
            return size
    raise AssertionError("unit ideal")


# hypothesis strategies --------------------------------------------------------

def monomials(nvars, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def polynomials(nvars, max_terms=4, max_exp=3):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)
    return st.lists(st.tuples(monomials(nvars, max_exp), coeff), max_size=max_terms).map(
        lambda ts: Polynomial(nvars, tuple(ts)))
